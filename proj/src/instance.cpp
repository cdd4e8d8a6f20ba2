#include "clscnd/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace clscnd {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

void check_vector(const Eigen::VectorXd& v, int size, const std::string& name) {
    require(v.size() == size, name + ": expected " + std::to_string(size) + " entries, got " +
                                  std::to_string(v.size()));
    require(v.size() == 0 || v.minCoeff() >= 0.0, name + ": negative entry");
}

void check_tensor(const ModeMatrices& m, int rows, int cols, int modes, const std::string& name) {
    require(static_cast<int>(m.size()) == modes,
            name + ": expected " + std::to_string(modes) + " mode matrices, got " +
                std::to_string(m.size()));
    for (int t = 0; t < modes; ++t) {
        require(m[t].rows() == rows && m[t].cols() == cols,
                name + "[" + std::to_string(t) + "]: expected " + std::to_string(rows) + "x" +
                    std::to_string(cols) + ", got " + std::to_string(m[t].rows()) + "x" +
                    std::to_string(m[t].cols()));
        require(m[t].size() == 0 || m[t].minCoeff() >= 0.0,
                name + "[" + std::to_string(t) + "]: negative entry");
    }
}

void check_facility_risk(const FacilityRiskCounts& r, int size, const std::string& name) {
    check_vector(r.accident, size, name + ".accident");
    check_vector(r.psychosocial, size, name + ".psychosocial");
    check_vector(r.physical, size, name + ".physical");
    check_vector(r.mental_overload, size, name + ".mental_overload");
}

void check_arc_risk(const ArcRiskCounts& r, int rows, int cols, int modes, const std::string& name) {
    check_tensor(r.accident, rows, cols, modes, name + ".accident");
    check_tensor(r.psychosocial, rows, cols, modes, name + ".psychosocial");
    check_tensor(r.physical, rows, cols, modes, name + ".physical");
    check_tensor(r.mental_overload, rows, cols, modes, name + ".mental_overload");
}

ModeMatrices zero_tensor(int rows, int cols, int modes) {
    return ModeMatrices(static_cast<std::size_t>(modes), Eigen::MatrixXd::Zero(rows, cols));
}

// Sum over modes of entrywise tensor products: sum_t (coef[t] .* flow[t]).
double dot_flows(const ModeMatrices& coef, const ModeMatrices& flow) {
    double total = 0.0;
    for (std::size_t t = 0; t < coef.size(); ++t)
        total += coef[t].cwiseProduct(flow[t]).sum();
    return total;
}

}  // namespace

void Instance::validate() const {
    const auto& z = sizes;
    require(z.plants >= 1 && z.dist_centers >= 1 && z.customers >= 1 && z.recycles >= 1 &&
                z.disposals >= 1 && z.modes >= 1,
            "sizes: every echelon count and the mode count must be at least 1");

    check_vector(demand, z.customers, "demand");

    check_vector(fixed_cost_plant, z.plants, "fixed_cost_plant");
    check_vector(fixed_cost_dc, z.dist_centers, "fixed_cost_dc");
    check_vector(fixed_cost_recycle, z.recycles, "fixed_cost_recycle");
    check_vector(fixed_cost_disposal, z.disposals, "fixed_cost_disposal");
    check_tensor(cost_plant_dc, z.plants, z.dist_centers, z.modes, "cost_plant_dc");
    check_tensor(cost_dc_customer, z.dist_centers, z.customers, z.modes, "cost_dc_customer");
    check_tensor(cost_customer_dc, z.customers, z.dist_centers, z.modes, "cost_customer_dc");
    check_tensor(cost_dc_plant, z.dist_centers, z.plants, z.modes, "cost_dc_plant");
    check_tensor(cost_dc_recycle, z.dist_centers, z.recycles, z.modes, "cost_dc_recycle");
    check_tensor(cost_dc_disposal, z.dist_centers, z.disposals, z.modes, "cost_dc_disposal");

    check_vector(emission_plant, z.plants, "emission_plant");
    check_vector(emission_dc, z.dist_centers, "emission_dc");
    check_vector(emission_recycle, z.recycles, "emission_recycle");
    check_vector(emission_disposal, z.disposals, "emission_disposal");
    check_tensor(emission_plant_dc, z.plants, z.dist_centers, z.modes, "emission_plant_dc");
    check_tensor(emission_dc_customer, z.dist_centers, z.customers, z.modes, "emission_dc_customer");
    check_tensor(emission_customer_dc, z.customers, z.dist_centers, z.modes, "emission_customer_dc");
    check_tensor(emission_dc_plant, z.dist_centers, z.plants, z.modes, "emission_dc_plant");
    check_tensor(emission_dc_recycle, z.dist_centers, z.recycles, z.modes, "emission_dc_recycle");
    check_tensor(emission_dc_disposal, z.dist_centers, z.disposals, z.modes, "emission_dc_disposal");

    require(risk_weights.minCoeff() >= 0.0, "risk_weights: negative entry");
    require(std::abs(risk_weights.sum() - 1.0) <= 1e-9, "risk_weights: entries must sum to 1");
    check_facility_risk(risk_plant, z.plants, "risk_plant");
    check_facility_risk(risk_dc, z.dist_centers, "risk_dc");
    check_facility_risk(risk_recycle, z.recycles, "risk_recycle");
    check_facility_risk(risk_disposal, z.disposals, "risk_disposal");
    check_arc_risk(risk_plant_dc, z.plants, z.dist_centers, z.modes, "risk_plant_dc");
    check_arc_risk(risk_dc_customer, z.dist_centers, z.customers, z.modes, "risk_dc_customer");
    check_arc_risk(risk_customer_dc, z.customers, z.dist_centers, z.modes, "risk_customer_dc");
    check_arc_risk(risk_dc_plant, z.dist_centers, z.plants, z.modes, "risk_dc_plant");
    check_arc_risk(risk_dc_recycle, z.dist_centers, z.recycles, z.modes, "risk_dc_recycle");
    check_arc_risk(risk_dc_disposal, z.dist_centers, z.disposals, z.modes, "risk_dc_disposal");

    check_vector(cap_manufacturing, z.plants, "cap_manufacturing");
    check_vector(cap_remanufacturing, z.plants, "cap_remanufacturing");
    check_vector(cap_dc_forward, z.dist_centers, "cap_dc_forward");
    check_vector(cap_dc_reverse, z.dist_centers, "cap_dc_reverse");
    check_vector(cap_recycle, z.recycles, "cap_recycle");
    check_vector(cap_disposal, z.disposals, "cap_disposal");

    require(return_fraction >= 0.0 && return_fraction <= 1.0,
            "return_fraction: must lie in [0, 1]");
    require(reuse_fraction >= 0.0, "reuse_fraction: must be nonnegative");
    require(recycle_fraction >= 0.0, "recycle_fraction: must be nonnegative");
    require(reuse_fraction + recycle_fraction <= 1.0 + 1e-12,
            "reuse_fraction + recycle_fraction: must not exceed 1");
}

Solution zero_solution(const EchelonSizes& z) {
    Solution s;
    s.open_plant = Eigen::VectorXi::Zero(z.plants);
    s.open_dc = Eigen::VectorXi::Zero(z.dist_centers);
    s.open_recycle = Eigen::VectorXi::Zero(z.recycles);
    s.open_disposal = Eigen::VectorXi::Zero(z.disposals);
    s.flow_plant_dc = zero_tensor(z.plants, z.dist_centers, z.modes);
    s.flow_dc_customer = zero_tensor(z.dist_centers, z.customers, z.modes);
    s.flow_customer_dc = zero_tensor(z.customers, z.dist_centers, z.modes);
    s.flow_dc_plant = zero_tensor(z.dist_centers, z.plants, z.modes);
    s.flow_dc_recycle = zero_tensor(z.dist_centers, z.recycles, z.modes);
    s.flow_dc_disposal = zero_tensor(z.dist_centers, z.disposals, z.modes);
    return s;
}

void check_dimensions(const Instance& inst, const Solution& sol) {
    const auto& z = inst.sizes;
    auto check_open = [](const Eigen::VectorXi& v, int size, const char* name) {
        require(v.size() == size, std::string(name) + ": expected " + std::to_string(size) +
                                      " entries, got " + std::to_string(v.size()));
    };
    auto check_flow = [](const ModeMatrices& m, int rows, int cols, int modes, const char* name) {
        require(static_cast<int>(m.size()) == modes,
                std::string(name) + ": expected " + std::to_string(modes) + " mode matrices");
        for (int t = 0; t < modes; ++t)
            require(m[t].rows() == rows && m[t].cols() == cols,
                    std::string(name) + "[" + std::to_string(t) + "]: expected " +
                        std::to_string(rows) + "x" + std::to_string(cols));
    };
    check_open(sol.open_plant, z.plants, "open_plant");
    check_open(sol.open_dc, z.dist_centers, "open_dc");
    check_open(sol.open_recycle, z.recycles, "open_recycle");
    check_open(sol.open_disposal, z.disposals, "open_disposal");
    check_flow(sol.flow_plant_dc, z.plants, z.dist_centers, z.modes, "flow_plant_dc");
    check_flow(sol.flow_dc_customer, z.dist_centers, z.customers, z.modes, "flow_dc_customer");
    check_flow(sol.flow_customer_dc, z.customers, z.dist_centers, z.modes, "flow_customer_dc");
    check_flow(sol.flow_dc_plant, z.dist_centers, z.plants, z.modes, "flow_dc_plant");
    check_flow(sol.flow_dc_recycle, z.dist_centers, z.recycles, z.modes, "flow_dc_recycle");
    check_flow(sol.flow_dc_disposal, z.dist_centers, z.disposals, z.modes, "flow_dc_disposal");
}

double weighted_risk(const Eigen::Vector4d& weights, double accident, double psychosocial,
                     double physical, double mental_overload) {
    return weights[0] * accident + weights[1] * psychosocial + weights[2] * physical +
           weights[3] * mental_overload;
}

ObjectiveTriple evaluate_objectives(const Instance& inst, const Solution& sol) {
    check_dimensions(inst, sol);

    const Eigen::VectorXd open_p = sol.open_plant.cast<double>();
    const Eigen::VectorXd open_w = sol.open_dc.cast<double>();
    const Eigen::VectorXd open_c = sol.open_recycle.cast<double>();
    const Eigen::VectorXd open_d = sol.open_disposal.cast<double>();

    ObjectiveTriple f;

    f.economic = inst.fixed_cost_plant.dot(open_p) + inst.fixed_cost_dc.dot(open_w) +
                 inst.fixed_cost_recycle.dot(open_c) + inst.fixed_cost_disposal.dot(open_d) +
                 dot_flows(inst.cost_plant_dc, sol.flow_plant_dc) +
                 dot_flows(inst.cost_dc_customer, sol.flow_dc_customer) +
                 dot_flows(inst.cost_customer_dc, sol.flow_customer_dc) +
                 dot_flows(inst.cost_dc_plant, sol.flow_dc_plant) +
                 dot_flows(inst.cost_dc_recycle, sol.flow_dc_recycle) +
                 dot_flows(inst.cost_dc_disposal, sol.flow_dc_disposal);

    f.environmental = inst.emission_plant.dot(open_p) + inst.emission_dc.dot(open_w) +
                      inst.emission_recycle.dot(open_c) + inst.emission_disposal.dot(open_d) +
                      dot_flows(inst.emission_plant_dc, sol.flow_plant_dc) +
                      dot_flows(inst.emission_dc_customer, sol.flow_dc_customer) +
                      dot_flows(inst.emission_customer_dc, sol.flow_customer_dc) +
                      dot_flows(inst.emission_dc_plant, sol.flow_dc_plant) +
                      dot_flows(inst.emission_dc_recycle, sol.flow_dc_recycle) +
                      dot_flows(inst.emission_dc_disposal, sol.flow_dc_disposal);

    const Eigen::Vector4d& th = inst.risk_weights;
    auto facility_risk = [&th](const FacilityRiskCounts& r, const Eigen::VectorXd& open) {
        return th[0] * r.accident.dot(open) + th[1] * r.psychosocial.dot(open) +
               th[2] * r.physical.dot(open) + th[3] * r.mental_overload.dot(open);
    };
    auto arc_risk = [&th](const ArcRiskCounts& r, const ModeMatrices& flow) {
        return th[0] * dot_flows(r.accident, flow) + th[1] * dot_flows(r.psychosocial, flow) +
               th[2] * dot_flows(r.physical, flow) + th[3] * dot_flows(r.mental_overload, flow);
    };

    f.social = facility_risk(inst.risk_plant, open_p) + facility_risk(inst.risk_dc, open_w) +
               facility_risk(inst.risk_recycle, open_c) +
               facility_risk(inst.risk_disposal, open_d) +
               arc_risk(inst.risk_plant_dc, sol.flow_plant_dc) +
               arc_risk(inst.risk_dc_customer, sol.flow_dc_customer) +
               arc_risk(inst.risk_customer_dc, sol.flow_customer_dc) +
               arc_risk(inst.risk_dc_plant, sol.flow_dc_plant) +
               arc_risk(inst.risk_dc_recycle, sol.flow_dc_recycle) +
               arc_risk(inst.risk_dc_disposal, sol.flow_dc_disposal);

    return f;
}

}  // namespace clscnd
