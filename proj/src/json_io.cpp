#include "clscnd/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "clscnd/model_build.hpp"

namespace clscnd {
namespace {

Json vec_json(const Eigen::VectorXd& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

Eigen::VectorXd vec_from(const Json& a) {
    Eigen::VectorXd v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
    return v;
}

Json vec4_json(const Eigen::Vector4d& v) {
    Json a = Json::array();
    for (int i = 0; i < 4; ++i) a.push_back(v[i]);
    return a;
}

Eigen::Vector4d vec4_from(const Json& a) {
    if (a.size() != 4) throw std::runtime_error("expected a 4-entry array");
    Eigen::Vector4d v;
    for (int i = 0; i < 4; ++i) v[i] = a[i].get<double>();
    return v;
}

Json bits_json(const Eigen::VectorXi& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

Eigen::VectorXi bits_from(const Json& a) {
    Eigen::VectorXi v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<Eigen::Index>(i)] = a[i].get<int>();
    return v;
}

// [from][to][mode] nesting over a stack of per-mode matrices.
Json tensor_json(const ModeMatrices& t) {
    Json rows = Json::array();
    if (t.empty()) return rows;
    const Eigen::Index nf = t[0].rows(), nt = t[0].cols();
    for (Eigen::Index i = 0; i < nf; ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < nt; ++j) {
            Json modes = Json::array();
            for (const auto& m : t) modes.push_back(m(i, j));
            row.push_back(std::move(modes));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ModeMatrices tensor_from(const Json& a) {
    const std::size_t nf = a.size();
    if (nf == 0) throw std::runtime_error("arc tensor has no rows");
    const std::size_t nt = a[0].size();
    if (nt == 0) throw std::runtime_error("arc tensor has no columns");
    const std::size_t nm = a[0][0].size();
    ModeMatrices t(nm, Eigen::MatrixXd(nf, nt));
    for (std::size_t i = 0; i < nf; ++i) {
        if (a[i].size() != nt) throw std::runtime_error("ragged arc tensor");
        for (std::size_t j = 0; j < nt; ++j) {
            if (a[i][j].size() != nm) throw std::runtime_error("ragged arc tensor");
            for (std::size_t m = 0; m < nm; ++m)
                t[m](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    a[i][j][m].get<double>();
        }
    }
    return t;
}

Json facility_risk_json(const FacilityRiskCounts& r) {
    return Json{{"accident", vec_json(r.accident)},
                {"psychosocial", vec_json(r.psychosocial)},
                {"physical", vec_json(r.physical)},
                {"mental_overload", vec_json(r.mental_overload)}};
}

FacilityRiskCounts facility_risk_from(const Json& j) {
    FacilityRiskCounts r;
    r.accident = vec_from(j.at("accident"));
    r.psychosocial = vec_from(j.at("psychosocial"));
    r.physical = vec_from(j.at("physical"));
    r.mental_overload = vec_from(j.at("mental_overload"));
    return r;
}

Json arc_risk_json(const ArcRiskCounts& r) {
    return Json{{"accident", tensor_json(r.accident)},
                {"psychosocial", tensor_json(r.psychosocial)},
                {"physical", tensor_json(r.physical)},
                {"mental_overload", tensor_json(r.mental_overload)}};
}

ArcRiskCounts arc_risk_from(const Json& j) {
    ArcRiskCounts r;
    r.accident = tensor_from(j.at("accident"));
    r.psychosocial = tensor_from(j.at("psychosocial"));
    r.physical = tensor_from(j.at("physical"));
    r.mental_overload = tensor_from(j.at("mental_overload"));
    return r;
}

Json sizes_json(const EchelonSizes& s) {
    return Json{{"plants", s.plants},         {"dist_centers", s.dist_centers},
                {"customers", s.customers},   {"recycles", s.recycles},
                {"disposals", s.disposals},   {"modes", s.modes}};
}

EchelonSizes sizes_from(const Json& j) {
    EchelonSizes s;
    s.plants = j.at("plants").get<int>();
    s.dist_centers = j.at("dist_centers").get<int>();
    s.customers = j.at("customers").get<int>();
    s.recycles = j.at("recycles").get<int>();
    s.disposals = j.at("disposals").get<int>();
    s.modes = j.at("modes").get<int>();
    return s;
}

Json range_json(const Range& r) { return Json{{"lo", r.lo}, {"hi", r.hi}}; }
Range range_from(const Json& j) { return {j.at("lo").get<double>(), j.at("hi").get<double>()}; }

std::string bit_string(const Eigen::VectorXi& v) {
    std::string s;
    s.reserve(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) s.push_back(v[i] != 0 ? '1' : '0');
    return s;
}

// Short column suffix per objective index.
const char* objective_short(int k) { return k == 0 ? "eco" : (k == 1 ? "env" : "soc"); }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Json to_json(const Instance& in) {
    Json j;
    j["sizes"] = sizes_json(in.sizes);
    j["demand"] = vec_json(in.demand);
    j["return_fraction"] = in.return_fraction;
    j["reuse_fraction"] = in.reuse_fraction;
    j["recycle_fraction"] = in.recycle_fraction;
    j["risk_weights"] = vec4_json(in.risk_weights);
    j["fixed_cost"] = Json{{"plant", vec_json(in.fixed_cost_plant)},
                           {"dc", vec_json(in.fixed_cost_dc)},
                           {"recycle", vec_json(in.fixed_cost_recycle)},
                           {"disposal", vec_json(in.fixed_cost_disposal)}};
    j["capacity"] = Json{{"manufacturing", vec_json(in.cap_manufacturing)},
                         {"remanufacturing", vec_json(in.cap_remanufacturing)},
                         {"dc_forward", vec_json(in.cap_dc_forward)},
                         {"dc_reverse", vec_json(in.cap_dc_reverse)},
                         {"recycle", vec_json(in.cap_recycle)},
                         {"disposal", vec_json(in.cap_disposal)}};
    j["cost"] = Json{{"plant_dc", tensor_json(in.cost_plant_dc)},
                     {"dc_customer", tensor_json(in.cost_dc_customer)},
                     {"customer_dc", tensor_json(in.cost_customer_dc)},
                     {"dc_plant", tensor_json(in.cost_dc_plant)},
                     {"dc_recycle", tensor_json(in.cost_dc_recycle)},
                     {"dc_disposal", tensor_json(in.cost_dc_disposal)}};
    j["fixed_emission"] = Json{{"plant", vec_json(in.emission_plant)},
                               {"dc", vec_json(in.emission_dc)},
                               {"recycle", vec_json(in.emission_recycle)},
                               {"disposal", vec_json(in.emission_disposal)}};
    j["emission"] = Json{{"plant_dc", tensor_json(in.emission_plant_dc)},
                         {"dc_customer", tensor_json(in.emission_dc_customer)},
                         {"customer_dc", tensor_json(in.emission_customer_dc)},
                         {"dc_plant", tensor_json(in.emission_dc_plant)},
                         {"dc_recycle", tensor_json(in.emission_dc_recycle)},
                         {"dc_disposal", tensor_json(in.emission_dc_disposal)}};
    j["facility_risk"] = Json{{"plant", facility_risk_json(in.risk_plant)},
                              {"dc", facility_risk_json(in.risk_dc)},
                              {"recycle", facility_risk_json(in.risk_recycle)},
                              {"disposal", facility_risk_json(in.risk_disposal)}};
    j["arc_risk"] = Json{{"plant_dc", arc_risk_json(in.risk_plant_dc)},
                         {"dc_customer", arc_risk_json(in.risk_dc_customer)},
                         {"customer_dc", arc_risk_json(in.risk_customer_dc)},
                         {"dc_plant", arc_risk_json(in.risk_dc_plant)},
                         {"dc_recycle", arc_risk_json(in.risk_dc_recycle)},
                         {"dc_disposal", arc_risk_json(in.risk_dc_disposal)}};
    return j;
}

Instance instance_from_json(const Json& j) {
    Instance in;
    in.sizes = sizes_from(j.at("sizes"));
    in.demand = vec_from(j.at("demand"));
    in.return_fraction = j.at("return_fraction").get<double>();
    in.reuse_fraction = j.at("reuse_fraction").get<double>();
    in.recycle_fraction = j.at("recycle_fraction").get<double>();
    in.risk_weights = vec4_from(j.at("risk_weights"));
    const Json& fc = j.at("fixed_cost");
    in.fixed_cost_plant = vec_from(fc.at("plant"));
    in.fixed_cost_dc = vec_from(fc.at("dc"));
    in.fixed_cost_recycle = vec_from(fc.at("recycle"));
    in.fixed_cost_disposal = vec_from(fc.at("disposal"));
    const Json& cap = j.at("capacity");
    in.cap_manufacturing = vec_from(cap.at("manufacturing"));
    in.cap_remanufacturing = vec_from(cap.at("remanufacturing"));
    in.cap_dc_forward = vec_from(cap.at("dc_forward"));
    in.cap_dc_reverse = vec_from(cap.at("dc_reverse"));
    in.cap_recycle = vec_from(cap.at("recycle"));
    in.cap_disposal = vec_from(cap.at("disposal"));
    const Json& cost = j.at("cost");
    in.cost_plant_dc = tensor_from(cost.at("plant_dc"));
    in.cost_dc_customer = tensor_from(cost.at("dc_customer"));
    in.cost_customer_dc = tensor_from(cost.at("customer_dc"));
    in.cost_dc_plant = tensor_from(cost.at("dc_plant"));
    in.cost_dc_recycle = tensor_from(cost.at("dc_recycle"));
    in.cost_dc_disposal = tensor_from(cost.at("dc_disposal"));
    const Json& fe = j.at("fixed_emission");
    in.emission_plant = vec_from(fe.at("plant"));
    in.emission_dc = vec_from(fe.at("dc"));
    in.emission_recycle = vec_from(fe.at("recycle"));
    in.emission_disposal = vec_from(fe.at("disposal"));
    const Json& em = j.at("emission");
    in.emission_plant_dc = tensor_from(em.at("plant_dc"));
    in.emission_dc_customer = tensor_from(em.at("dc_customer"));
    in.emission_customer_dc = tensor_from(em.at("customer_dc"));
    in.emission_dc_plant = tensor_from(em.at("dc_plant"));
    in.emission_dc_recycle = tensor_from(em.at("dc_recycle"));
    in.emission_dc_disposal = tensor_from(em.at("dc_disposal"));
    const Json& fr = j.at("facility_risk");
    in.risk_plant = facility_risk_from(fr.at("plant"));
    in.risk_dc = facility_risk_from(fr.at("dc"));
    in.risk_recycle = facility_risk_from(fr.at("recycle"));
    in.risk_disposal = facility_risk_from(fr.at("disposal"));
    const Json& ar = j.at("arc_risk");
    in.risk_plant_dc = arc_risk_from(ar.at("plant_dc"));
    in.risk_dc_customer = arc_risk_from(ar.at("dc_customer"));
    in.risk_customer_dc = arc_risk_from(ar.at("customer_dc"));
    in.risk_dc_plant = arc_risk_from(ar.at("dc_plant"));
    in.risk_dc_recycle = arc_risk_from(ar.at("dc_recycle"));
    in.risk_dc_disposal = arc_risk_from(ar.at("dc_disposal"));
    in.validate();
    return in;
}

Json to_json(const Solution& sol) {
    Json j;
    j["open"] = Json{{"plant", bits_json(sol.open_plant)},
                     {"dc", bits_json(sol.open_dc)},
                     {"recycle", bits_json(sol.open_recycle)},
                     {"disposal", bits_json(sol.open_disposal)}};
    j["flow"] = Json{{"plant_dc", tensor_json(sol.flow_plant_dc)},
                     {"dc_customer", tensor_json(sol.flow_dc_customer)},
                     {"customer_dc", tensor_json(sol.flow_customer_dc)},
                     {"dc_plant", tensor_json(sol.flow_dc_plant)},
                     {"dc_recycle", tensor_json(sol.flow_dc_recycle)},
                     {"dc_disposal", tensor_json(sol.flow_dc_disposal)}};
    if (sol.objectives) j["objectives"] = to_json(*sol.objectives);
    return j;
}

Solution solution_from_json(const Json& j) {
    Solution s;
    const Json& open = j.at("open");
    s.open_plant = bits_from(open.at("plant"));
    s.open_dc = bits_from(open.at("dc"));
    s.open_recycle = bits_from(open.at("recycle"));
    s.open_disposal = bits_from(open.at("disposal"));
    const Json& flow = j.at("flow");
    s.flow_plant_dc = tensor_from(flow.at("plant_dc"));
    s.flow_dc_customer = tensor_from(flow.at("dc_customer"));
    s.flow_customer_dc = tensor_from(flow.at("customer_dc"));
    s.flow_dc_plant = tensor_from(flow.at("dc_plant"));
    s.flow_dc_recycle = tensor_from(flow.at("dc_recycle"));
    s.flow_dc_disposal = tensor_from(flow.at("dc_disposal"));
    if (j.contains("objectives")) {
        const Json& o = j.at("objectives");
        s.objectives = ObjectiveTriple{o.at("economic").get<double>(),
                                       o.at("environmental").get<double>(),
                                       o.at("social").get<double>()};
    }
    return s;
}

Json to_json(const GenConfig& c) {
    Json j;
    j["seed"] = c.seed;
    j["sizes"] = sizes_json(c.sizes);
    j["demand_range"] = Json{{"lo", c.demand_range.lo}, {"hi", c.demand_range.hi}};
    j["capacity_ranges"] = Json{{"manufacturing", range_json(c.cap_manufacturing)},
                                {"remanufacturing", range_json(c.cap_remanufacturing)},
                                {"dc_forward", range_json(c.cap_dc_forward)},
                                {"dc_reverse", range_json(c.cap_dc_reverse)},
                                {"recycle", range_json(c.cap_recycle)},
                                {"disposal", range_json(c.cap_disposal)}};
    j["fixed_cost_ranges"] = Json{{"plant", range_json(c.fixed_cost_plant)},
                                  {"dc", range_json(c.fixed_cost_dc)},
                                  {"recycle", range_json(c.fixed_cost_recycle)},
                                  {"disposal", range_json(c.fixed_cost_disposal)}};
    j["emission_ranges"] = Json{{"plant", range_json(c.emission_plant)},
                                {"dc", range_json(c.emission_dc)},
                                {"recycle", range_json(c.emission_recycle)},
                                {"disposal", range_json(c.emission_disposal)}};
    Json rates = Json::array();
    for (const ModeRates& r : c.mode_rates)
        rates.push_back(Json{{"name", r.name},
                             {"cost_per_ton_mile", r.cost_per_ton_mile},
                             {"co2_g_per_tonne_km", r.co2_g_per_tonne_km},
                             {"risk_accident", r.risk_accident},
                             {"risk_psychosocial", r.risk_psychosocial},
                             {"risk_physical", r.risk_physical},
                             {"risk_mental", r.risk_mental}});
    j["mode_rates"] = std::move(rates);
    j["facility_risk"] = Json{{"plant", vec4_json(c.facility_risk_plant)},
                              {"dc", vec4_json(c.facility_risk_dc)},
                              {"recycle", vec4_json(c.facility_risk_recycle)},
                              {"disposal", vec4_json(c.facility_risk_disposal)}};
    j["risk_weights"] = vec4_json(c.risk_weights);
    j["return_fraction"] = c.return_fraction;
    j["reuse_fraction"] = c.reuse_fraction;
    j["recycle_fraction"] = c.recycle_fraction;
    j["product_mass_kg"] = c.product_mass_kg;
    j["region_side_miles"] = c.region_side_miles;
    j["inflation_factor"] = c.inflation_factor;
    return j;
}

GenConfig gen_config_from_json(const Json& j) {
    GenConfig c;
    c.seed = j.at("seed").get<std::uint64_t>();
    c.sizes = sizes_from(j.at("sizes"));
    c.demand_range = {j.at("demand_range").at("lo").get<int>(),
                      j.at("demand_range").at("hi").get<int>()};
    const Json& cap = j.at("capacity_ranges");
    c.cap_manufacturing = range_from(cap.at("manufacturing"));
    c.cap_remanufacturing = range_from(cap.at("remanufacturing"));
    c.cap_dc_forward = range_from(cap.at("dc_forward"));
    c.cap_dc_reverse = range_from(cap.at("dc_reverse"));
    c.cap_recycle = range_from(cap.at("recycle"));
    c.cap_disposal = range_from(cap.at("disposal"));
    const Json& fc = j.at("fixed_cost_ranges");
    c.fixed_cost_plant = range_from(fc.at("plant"));
    c.fixed_cost_dc = range_from(fc.at("dc"));
    c.fixed_cost_recycle = range_from(fc.at("recycle"));
    c.fixed_cost_disposal = range_from(fc.at("disposal"));
    const Json& em = j.at("emission_ranges");
    c.emission_plant = range_from(em.at("plant"));
    c.emission_dc = range_from(em.at("dc"));
    c.emission_recycle = range_from(em.at("recycle"));
    c.emission_disposal = range_from(em.at("disposal"));
    c.mode_rates.clear();
    for (const Json& r : j.at("mode_rates")) {
        ModeRates m;
        m.name = r.at("name").get<std::string>();
        m.cost_per_ton_mile = r.at("cost_per_ton_mile").get<double>();
        m.co2_g_per_tonne_km = r.at("co2_g_per_tonne_km").get<double>();
        m.risk_accident = r.at("risk_accident").get<double>();
        m.risk_psychosocial = r.at("risk_psychosocial").get<double>();
        m.risk_physical = r.at("risk_physical").get<double>();
        m.risk_mental = r.at("risk_mental").get<double>();
        c.mode_rates.push_back(std::move(m));
    }
    const Json& fr = j.at("facility_risk");
    c.facility_risk_plant = vec4_from(fr.at("plant"));
    c.facility_risk_dc = vec4_from(fr.at("dc"));
    c.facility_risk_recycle = vec4_from(fr.at("recycle"));
    c.facility_risk_disposal = vec4_from(fr.at("disposal"));
    c.risk_weights = vec4_from(j.at("risk_weights"));
    c.return_fraction = j.at("return_fraction").get<double>();
    c.reuse_fraction = j.at("reuse_fraction").get<double>();
    c.recycle_fraction = j.at("recycle_fraction").get<double>();
    c.product_mass_kg = j.at("product_mass_kg").get<double>();
    c.region_side_miles = j.at("region_side_miles").get<double>();
    c.inflation_factor = j.at("inflation_factor").get<double>();
    c.validate();
    return c;
}

Json to_json(const ObjectiveTriple& t) {
    return Json{{"economic", t.economic},
                {"environmental", t.environmental},
                {"social", t.social}};
}

Json to_json(const PayoffTable& table) {
    Json j;
    Json names = Json::array();
    for (int k = 0; k < 3; ++k) names.push_back(objective_name(k));
    j["objectives"] = names;
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) row.push_back(table.values(r, c));
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    j["nodes"] = Json{table.nodes[0], table.nodes[1], table.nodes[2]};
    return j;
}

Json to_json(const FeasibilityReport& report) {
    Json j;
    j["feasible"] = report.feasible;
    Json v = Json::array();
    for (const Violation& viol : report.violations)
        v.push_back(Json{{"family", viol.family},
                         {"entity", viol.entity},
                         {"residual", viol.residual},
                         {"label", viol.label}});
    j["violations"] = std::move(v);
    return j;
}

Json run_report(const ParetoFront& front, const Instance& inst) {
    Json j;
    j["complete"] = front.complete;
    j["payoff"] = to_json(front.payoff);
    Json rnames = Json::array();
    for (const int k : front.ranges.objectives) rnames.push_back(objective_name(k));
    j["ranges"] = Json{{"objectives", rnames},
                       {"fmin", vec_json(front.ranges.fmin)},
                       {"fmax", vec_json(front.ranges.fmax)},
                       {"range", vec_json(front.ranges.range)}};
    j["grid"] = Json{{"cuts", front.grid.m},
                     {"p", front.grid.p},
                     {"epsilon", front.grid.epsilon},
                     {"cells", front.grid.e_vectors.size()}};
    Json cells = Json::array();
    for (const CellReport& cell : front.cells) {
        Json c;
        c["index"] = cell.index;
        c["e"] = vec_json(cell.e);
        c["status"] = cell_status_name(cell.status);
        c["nodes"] = cell.nodes_explored;
        if (cell.status == CellStatus::Optimal || cell.status == CellStatus::Duplicate ||
            cell.status == CellStatus::Dominated)
            c["objectives"] = to_json(cell.objectives);
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    Json members = Json::array();
    for (const FrontMember& m : front.members) {
        const Solution sol = extract_solution(inst, m.values);
        members.push_back(Json{{"cell", m.cell},
                               {"e", vec_json(m.e)},
                               {"objectives", to_json(m.objectives)},
                               {"open_plants", bit_string(sol.open_plant)},
                               {"open_dcs", bit_string(sol.open_dc)},
                               {"open_recycles", bit_string(sol.open_recycle)},
                               {"open_disposals", bit_string(sol.open_disposal)}});
    }
    j["members"] = std::move(members);
    return j;
}

std::string front_csv(const ParetoFront& front, const Instance& inst) {
    std::string out = "economic,environmental,social";
    for (const int k : front.ranges.objectives) {
        out += ",e_";
        out += objective_short(k);
    }
    out += ",open_plants,open_dcs,open_recycles,open_disposals\n";
    for (const FrontMember& m : front.members) {
        out += format_double(m.objectives.economic);
        out += ',';
        out += format_double(m.objectives.environmental);
        out += ',';
        out += format_double(m.objectives.social);
        for (Eigen::Index i = 0; i < m.e.size(); ++i) {
            out += ',';
            out += format_double(m.e[i]);
        }
        const Solution sol = extract_solution(inst, m.values);
        out += ',';
        out += bit_string(sol.open_plant);
        out += ',';
        out += bit_string(sol.open_dc);
        out += ',';
        out += bit_string(sol.open_recycle);
        out += ',';
        out += bit_string(sol.open_disposal);
        out += '\n';
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string read_text(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    out << text;
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace clscnd
