#include "clscnd/instance_gen.hpp"

#include <cmath>
#include <stdexcept>

#include "clscnd/logging.hpp"

namespace clscnd {

namespace {

struct Point {
    double x = 0.0, y = 0.0;
};

double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

void check_range(const Range& r, const std::string& name) {
    require(r.lo <= r.hi, name + ": lo must not exceed hi");
    require(r.lo >= 0.0, name + ": negative lo");
}

Eigen::MatrixXd distances(const std::vector<Point>& rows, const std::vector<Point>& cols) {
    Eigen::MatrixXd d(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
            d(a, b) = dist(rows[a], cols[b]);
    return d;
}

}  // namespace

std::vector<ModeRates> default_mode_rates() {
    return {
        {"rail", 0.03, 22.0, 0.000005, 0.005, 0.005, 0.005},
        {"road", 0.25, 62.0, 0.00005, 0.0025, 0.0025, 0.0025},
        {"air", 0.59, 602.0, 0.00001, 0.0005, 0.0005, 0.0005},
    };
}

void GenConfig::validate() const {
    require(sizes.plants >= 1 && sizes.dist_centers >= 1 && sizes.customers >= 1 &&
                sizes.recycles >= 1 && sizes.disposals >= 1 && sizes.modes >= 1,
            "sizes: every count must be at least 1");
    require(demand_range.lo >= 0 && demand_range.lo <= demand_range.hi,
            "demand_range: need 0 <= lo <= hi");
    check_range(cap_manufacturing, "cap_manufacturing");
    check_range(cap_remanufacturing, "cap_remanufacturing");
    check_range(cap_dc_forward, "cap_dc_forward");
    check_range(cap_dc_reverse, "cap_dc_reverse");
    check_range(cap_recycle, "cap_recycle");
    check_range(cap_disposal, "cap_disposal");
    check_range(fixed_cost_plant, "fixed_cost_plant");
    check_range(fixed_cost_dc, "fixed_cost_dc");
    check_range(fixed_cost_recycle, "fixed_cost_recycle");
    check_range(fixed_cost_disposal, "fixed_cost_disposal");
    check_range(emission_plant, "emission_plant");
    check_range(emission_dc, "emission_dc");
    check_range(emission_recycle, "emission_recycle");
    check_range(emission_disposal, "emission_disposal");
    require(!mode_rates.empty(), "mode_rates: need at least one mode");
    for (const auto& m : mode_rates)
        require(m.cost_per_ton_mile >= 0.0 && m.co2_g_per_tonne_km >= 0.0 &&
                    m.risk_accident >= 0.0 && m.risk_psychosocial >= 0.0 &&
                    m.risk_physical >= 0.0 && m.risk_mental >= 0.0,
                "mode_rates[" + m.name + "]: negative rate");
    require(risk_weights.minCoeff() >= 0.0, "risk_weights: negative entry");
    require(std::abs(risk_weights.sum() - 1.0) <= 1e-9, "risk_weights: entries must sum to 1");
    require((facility_risk_plant.minCoeff() >= 0.0) && (facility_risk_dc.minCoeff() >= 0.0) &&
                (facility_risk_recycle.minCoeff() >= 0.0) &&
                (facility_risk_disposal.minCoeff() >= 0.0),
            "facility risks: negative entry");
    require(return_fraction >= 0.0 && return_fraction <= 1.0, "return_fraction: must lie in [0,1]");
    require(reuse_fraction >= 0.0 && recycle_fraction >= 0.0 &&
                reuse_fraction + recycle_fraction <= 1.0 + 1e-12,
            "reuse/recycle fractions: need beta, delta >= 0 and beta + delta <= 1");
    require(product_mass_kg > 0.0, "product_mass_kg: must be positive");
    require(region_side_miles > 0.0, "region_side_miles: must be positive");
    require(inflation_factor > 0.0, "inflation_factor: must be positive");
}

double transport_cost_per_product(double rate_per_ton_mile, double inflation_factor,
                                  double product_mass_kg, double distance_miles) {
    return rate_per_ton_mile * inflation_factor * (product_mass_kg / kKgPerTon) * distance_miles;
}

double transport_emission_per_product(double co2_g_per_tonne_km, double product_mass_kg,
                                      double distance_miles) {
    return co2_g_per_tonne_km * (product_mass_kg / 1000.0) * distance_miles * kKmPerMile;
}

Instance generate(const GenConfig& cfg) {
    cfg.validate();
    const EchelonSizes& z = cfg.sizes;
    Rng rng(cfg.seed);
    Instance in;
    in.sizes = z;

    // 1. placement
    auto place = [&](int count) {
        std::vector<Point> pts(count);
        for (auto& p : pts) {
            p.x = rng.next_real(0.0, cfg.region_side_miles);
            p.y = rng.next_real(0.0, cfg.region_side_miles);
        }
        return pts;
    };
    const std::vector<Point> plants = place(z.plants);
    const std::vector<Point> centers = place(z.dist_centers);
    const std::vector<Point> customers = place(z.customers);
    const std::vector<Point> recyclers = place(z.recycles);
    const std::vector<Point> disposals = place(z.disposals);

    // 2. demands (integers)
    in.demand = Eigen::VectorXd(z.customers);
    for (int k = 0; k < z.customers; ++k)
        in.demand[k] = rng.next_int(cfg.demand_range.lo, cfg.demand_range.hi);

    // 3. fixed costs, 4. emissions, 5. capacities
    auto draw_vec = [&rng](int count, const Range& r) {
        Eigen::VectorXd v(count);
        for (int i = 0; i < count; ++i) v[i] = rng.next_real(r.lo, r.hi);
        return v;
    };
    in.fixed_cost_plant = draw_vec(z.plants, cfg.fixed_cost_plant);
    in.fixed_cost_dc = draw_vec(z.dist_centers, cfg.fixed_cost_dc);
    in.fixed_cost_recycle = draw_vec(z.recycles, cfg.fixed_cost_recycle);
    in.fixed_cost_disposal = draw_vec(z.disposals, cfg.fixed_cost_disposal);

    in.emission_plant = draw_vec(z.plants, cfg.emission_plant);
    in.emission_dc = draw_vec(z.dist_centers, cfg.emission_dc);
    in.emission_recycle = draw_vec(z.recycles, cfg.emission_recycle);
    in.emission_disposal = draw_vec(z.disposals, cfg.emission_disposal);

    in.cap_manufacturing = draw_vec(z.plants, cfg.cap_manufacturing);
    in.cap_remanufacturing = draw_vec(z.plants, cfg.cap_remanufacturing);
    in.cap_dc_forward = draw_vec(z.dist_centers, cfg.cap_dc_forward);
    in.cap_dc_reverse = draw_vec(z.dist_centers, cfg.cap_dc_reverse);
    in.cap_recycle = draw_vec(z.recycles, cfg.cap_recycle);
    in.cap_disposal = draw_vec(z.disposals, cfg.cap_disposal);

    // arc data follows from geometry and the per-mode rates
    auto arc_family = [&](const std::vector<Point>& rows, const std::vector<Point>& cols,
                          ModeMatrices& cost, ModeMatrices& emis, ArcRiskCounts& risk) {
        const Eigen::MatrixXd d = distances(rows, cols);
        cost.resize(z.modes);
        emis.resize(z.modes);
        risk.accident.resize(z.modes);
        risk.psychosocial.resize(z.modes);
        risk.physical.resize(z.modes);
        risk.mental_overload.resize(z.modes);
        for (int t = 0; t < z.modes; ++t) {
            const ModeRates& m = cfg.mode_rates[t % cfg.mode_rates.size()];
            cost[t] = d * transport_cost_per_product(m.cost_per_ton_mile, cfg.inflation_factor,
                                                     cfg.product_mass_kg, 1.0);
            emis[t] =
                d * transport_emission_per_product(m.co2_g_per_tonne_km, cfg.product_mass_kg, 1.0);
            risk.accident[t] = d * m.risk_accident;
            risk.psychosocial[t] = d * m.risk_psychosocial;
            risk.physical[t] = d * m.risk_physical;
            risk.mental_overload[t] = d * m.risk_mental;
        }
    };
    arc_family(plants, centers, in.cost_plant_dc, in.emission_plant_dc, in.risk_plant_dc);
    arc_family(centers, customers, in.cost_dc_customer, in.emission_dc_customer,
               in.risk_dc_customer);
    arc_family(customers, centers, in.cost_customer_dc, in.emission_customer_dc,
               in.risk_customer_dc);
    arc_family(centers, plants, in.cost_dc_plant, in.emission_dc_plant, in.risk_dc_plant);
    arc_family(centers, recyclers, in.cost_dc_recycle, in.emission_dc_recycle, in.risk_dc_recycle);
    arc_family(centers, disposals, in.cost_dc_disposal, in.emission_dc_disposal,
               in.risk_dc_disposal);

    auto fill_facility_risk = [](FacilityRiskCounts& r, const Eigen::Vector4d& counts, int n) {
        r.accident = Eigen::VectorXd::Constant(n, counts[0]);
        r.psychosocial = Eigen::VectorXd::Constant(n, counts[1]);
        r.physical = Eigen::VectorXd::Constant(n, counts[2]);
        r.mental_overload = Eigen::VectorXd::Constant(n, counts[3]);
    };
    fill_facility_risk(in.risk_plant, cfg.facility_risk_plant, z.plants);
    fill_facility_risk(in.risk_dc, cfg.facility_risk_dc, z.dist_centers);
    fill_facility_risk(in.risk_recycle, cfg.facility_risk_recycle, z.recycles);
    fill_facility_risk(in.risk_disposal, cfg.facility_risk_disposal, z.disposals);

    in.risk_weights = cfg.risk_weights;
    in.return_fraction = cfg.return_fraction;
    in.reuse_fraction = cfg.reuse_fraction;
    in.recycle_fraction = cfg.recycle_fraction;

    in.validate();

    if (in.cap_manufacturing.sum() < in.demand.sum())
        log::warn("generated instance cannot satisfy demand: total manufacturing capacity " +
                  std::to_string(in.cap_manufacturing.sum()) + " is below total demand " +
                  std::to_string(in.demand.sum()));
    if (in.cap_dc_forward.sum() < in.demand.sum())
        log::warn("generated instance cannot satisfy demand: total forward distribution capacity " +
                  std::to_string(in.cap_dc_forward.sum()) + " is below total demand " +
                  std::to_string(in.demand.sum()));
    return in;
}

GenConfig benchmark_config(std::uint64_t seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.sizes = EchelonSizes{5, 8, 20, 3, 3, 3};
    return cfg;
}

Instance benchmark_instance(std::uint64_t seed) { return generate(benchmark_config(seed)); }

}  // namespace clscnd
