#include <cmath>

#include "clscnd/instance_gen.hpp"
#include "doctest.h"

using namespace clscnd;

TEST_CASE("per-product conversion arithmetic") {
    // rail at 0.03 $/ton-mile, 50 kg product, 100-mile arc, no inflation
    CHECK(transport_cost_per_product(0.03, 1.0, 50.0, 100.0) ==
          doctest::Approx(0.03 * (50.0 / 907.185) * 100.0).epsilon(1e-12));
    CHECK(transport_cost_per_product(0.03, 1.0, 50.0, 100.0) == doctest::Approx(0.1654).epsilon(1e-3));
    // road accident exposure 0.00005 workers/product-mile over 200 miles
    CHECK(0.00005 * 200.0 == doctest::Approx(0.01));
    // emission: grams per tonne-km on a mile-measured arc
    CHECK(transport_emission_per_product(22.0, 50.0, 100.0) ==
          doctest::Approx(22.0 * 0.05 * 100.0 * 1.60934).epsilon(1e-12));
}

TEST_CASE("same seed gives identical instances, different seeds differ") {
    GenConfig cfg;
    cfg.seed = 99;
    cfg.sizes = EchelonSizes{3, 3, 5, 2, 2, 3};
    Instance a = generate(cfg);
    Instance b = generate(cfg);
    CHECK(a.demand == b.demand);
    CHECK(a.fixed_cost_plant == b.fixed_cost_plant);
    CHECK(a.cap_dc_reverse == b.cap_dc_reverse);
    for (int t = 0; t < 3; ++t) {
        CHECK(a.cost_plant_dc[t] == b.cost_plant_dc[t]);
        CHECK(a.risk_dc_customer.mental_overload[t] == b.risk_dc_customer.mental_overload[t]);
    }

    cfg.seed = 100;
    Instance c = generate(cfg);
    CHECK(a.demand != c.demand);
}

TEST_CASE("mode rate orderings survive the affine conversion on every arc") {
    Instance in = benchmark_instance(7);
    REQUIRE(in.sizes.modes == 3);
    auto check_family = [](const ModeMatrices& cost, const ModeMatrices& emis,
                           const ArcRiskCounts& risk) {
        const int rail = 0, road = 1, air = 2;
        for (int a = 0; a < cost[0].rows(); ++a)
            for (int b = 0; b < cost[0].cols(); ++b) {
                CHECK(cost[rail](a, b) < cost[road](a, b));
                CHECK(cost[road](a, b) < cost[air](a, b));
                CHECK(emis[rail](a, b) < emis[road](a, b));
                CHECK(emis[road](a, b) < emis[air](a, b));
                CHECK(risk.accident[road](a, b) > risk.accident[air](a, b));
                CHECK(risk.accident[air](a, b) > risk.accident[rail](a, b));
                CHECK(risk.psychosocial[rail](a, b) > risk.psychosocial[road](a, b));
                CHECK(risk.psychosocial[road](a, b) > risk.psychosocial[air](a, b));
                CHECK(risk.physical[rail](a, b) > risk.physical[road](a, b));
                CHECK(risk.mental_overload[rail](a, b) > risk.mental_overload[road](a, b));
            }
    };
    check_family(in.cost_plant_dc, in.emission_plant_dc, in.risk_plant_dc);
    check_family(in.cost_dc_customer, in.emission_dc_customer, in.risk_dc_customer);
    check_family(in.cost_customer_dc, in.emission_customer_dc, in.risk_customer_dc);
    check_family(in.cost_dc_plant, in.emission_dc_plant, in.risk_dc_plant);
    check_family(in.cost_dc_recycle, in.emission_dc_recycle, in.risk_dc_recycle);
    check_family(in.cost_dc_disposal, in.emission_dc_disposal, in.risk_dc_disposal);
}

TEST_CASE("cost, emission and risk tensors are consistent multiples of one distance") {
    GenConfig cfg;
    cfg.seed = 4;
    cfg.sizes = EchelonSizes{2, 2, 2, 1, 1, 3};
    cfg.inflation_factor = 2.5;
    Instance in = generate(cfg);
    const auto rates = default_mode_rates();
    for (int t = 0; t < 3; ++t)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const double dist_from_cost =
                    in.cost_plant_dc[t](a, b) /
                    transport_cost_per_product(rates[t].cost_per_ton_mile, cfg.inflation_factor,
                                               cfg.product_mass_kg, 1.0);
                const double dist_from_risk =
                    in.risk_plant_dc.accident[t](a, b) / rates[t].risk_accident;
                const double dist_from_emis =
                    in.emission_plant_dc[t](a, b) /
                    transport_emission_per_product(rates[t].co2_g_per_tonne_km,
                                                   cfg.product_mass_kg, 1.0);
                CHECK(dist_from_cost == doctest::Approx(dist_from_risk).epsilon(1e-9));
                CHECK(dist_from_cost == doctest::Approx(dist_from_emis).epsilon(1e-9));
                CHECK(dist_from_cost <= std::sqrt(2.0) * cfg.region_side_miles);
            }
}

TEST_CASE("benchmark instance honors the documented data ranges") {
    Instance in = benchmark_instance(11);
    CHECK(in.sizes == EchelonSizes{5, 8, 20, 3, 3, 3});
    CHECK(in.risk_weights == Eigen::Vector4d(0.4, 0.2, 0.2, 0.2));
    CHECK(in.return_fraction == 0.2);
    CHECK(in.reuse_fraction == 0.4);
    CHECK(in.recycle_fraction == 0.3);

    for (int k = 0; k < 20; ++k) {
        CHECK(in.demand[k] >= 100.0);
        CHECK(in.demand[k] <= 150.0);
        CHECK(in.demand[k] == std::round(in.demand[k]));  // integer draw
    }
    auto in_range = [](const Eigen::VectorXd& v, double lo, double hi) {
        return v.minCoeff() >= lo && v.maxCoeff() <= hi;
    };
    CHECK(in_range(in.fixed_cost_plant, 400000.0, 600000.0));
    CHECK(in_range(in.fixed_cost_dc, 250000.0, 350000.0));
    CHECK(in_range(in.fixed_cost_recycle, 150000.0, 250000.0));
    CHECK(in_range(in.fixed_cost_disposal, 150000.0, 250000.0));
    CHECK(in_range(in.emission_plant, 4000.0, 8000.0));
    CHECK(in_range(in.emission_dc, 3000.0, 5000.0));
    CHECK(in_range(in.emission_recycle, 2000.0, 4000.0));
    CHECK(in_range(in.emission_disposal, 2000.0, 4000.0));
    CHECK(in_range(in.cap_manufacturing, 800.0, 1200.0));
    CHECK(in_range(in.cap_remanufacturing, 80.0, 120.0));
    CHECK(in_range(in.cap_dc_forward, 400.0, 600.0));
    CHECK(in_range(in.cap_dc_reverse, 80.0, 120.0));
    CHECK(in_range(in.cap_recycle, 160.0, 240.0));
    CHECK(in_range(in.cap_disposal, 160.0, 240.0));

    // worker counts for opening each kind of facility
    CHECK(in.risk_plant.accident[0] == 3.0);
    CHECK(in.risk_plant.psychosocial[4] == 6.0);
    CHECK(in.risk_plant.mental_overload[2] == 4.0);
    CHECK(in.risk_dc.accident[7] == 2.0);
    CHECK(in.risk_dc.mental_overload[0] == 3.0);
    CHECK(in.risk_recycle.physical[1] == 4.0);
    CHECK(in.risk_disposal.psychosocial[2] == 4.0);

    // structural headroom: echelon capacities clear the worst-case loads
    CHECK(in.cap_manufacturing.sum() >= in.demand.sum());
    CHECK(in.cap_dc_forward.sum() >= in.demand.sum());
    const double returns = in.return_fraction * in.demand.sum();
    CHECK(in.cap_dc_reverse.sum() >= returns);
    CHECK(in.cap_remanufacturing.sum() >= in.reuse_fraction * returns);
    CHECK(in.cap_recycle.sum() >= in.recycle_fraction * returns);
    CHECK(in.cap_disposal.sum() >=
          (1.0 - in.reuse_fraction - in.recycle_fraction) * returns);
}

TEST_CASE("extra modes cycle through the rate table") {
    GenConfig cfg;
    cfg.seed = 21;
    cfg.sizes = EchelonSizes{2, 2, 2, 1, 1, 4};
    Instance in = generate(cfg);
    // mode 3 reuses the rail rates, so its tensors repeat mode 0 exactly
    CHECK(in.cost_plant_dc[3] == in.cost_plant_dc[0]);
    CHECK(in.emission_dc_customer[3] == in.emission_dc_customer[0]);
    CHECK(in.risk_customer_dc.accident[3] == in.risk_customer_dc.accident[0]);
}

TEST_CASE("config validation rejects broken fields") {
    GenConfig cfg;
    SUBCASE("inverted range") {
        cfg.cap_recycle = {240.0, 160.0};
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("nonpositive mass") {
        cfg.product_mass_kg = 0.0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("nonpositive inflation") {
        cfg.inflation_factor = 0.0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("empty mode table") {
        cfg.mode_rates.clear();
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("weights off unit sum") {
        cfg.risk_weights = Eigen::Vector4d(0.5, 0.2, 0.2, 0.2);
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
}

TEST_CASE("unit random stream has documented semantics") {
    Rng a(123), b(123);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(u == b.next_unit());
    }
    Rng c(5);
    for (int i = 0; i < 1000; ++i) {
        const int v = c.next_int(3, 7);
        CHECK(v >= 3);
        CHECK(v <= 7);
    }
}
