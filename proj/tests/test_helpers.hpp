#pragma once

#include <random>

#include "clscnd/instance.hpp"

namespace clscnd::testing {

inline ModeMatrices const_tensor(int rows, int cols, int modes, double value) {
    return ModeMatrices(static_cast<std::size_t>(modes),
                        Eigen::MatrixXd::Constant(rows, cols, value));
}

inline FacilityRiskCounts zero_facility_risk(int n) {
    FacilityRiskCounts r;
    r.accident = r.psychosocial = r.physical = r.mental_overload = Eigen::VectorXd::Zero(n);
    return r;
}

inline ArcRiskCounts zero_arc_risk(int rows, int cols, int modes) {
    ArcRiskCounts r;
    r.accident = r.psychosocial = r.physical = r.mental_overload =
        const_tensor(rows, cols, modes, 0.0);
    return r;
}

// Fully allocated instance with zero data everywhere, default risk weights
// (0.4, 0.2, 0.2, 0.2) and zero fractions; always passes validate().
inline Instance blank_instance(const EchelonSizes& z) {
    Instance in;
    in.sizes = z;
    in.demand = Eigen::VectorXd::Zero(z.customers);

    in.fixed_cost_plant = Eigen::VectorXd::Zero(z.plants);
    in.fixed_cost_dc = Eigen::VectorXd::Zero(z.dist_centers);
    in.fixed_cost_recycle = Eigen::VectorXd::Zero(z.recycles);
    in.fixed_cost_disposal = Eigen::VectorXd::Zero(z.disposals);
    in.cost_plant_dc = const_tensor(z.plants, z.dist_centers, z.modes, 0.0);
    in.cost_dc_customer = const_tensor(z.dist_centers, z.customers, z.modes, 0.0);
    in.cost_customer_dc = const_tensor(z.customers, z.dist_centers, z.modes, 0.0);
    in.cost_dc_plant = const_tensor(z.dist_centers, z.plants, z.modes, 0.0);
    in.cost_dc_recycle = const_tensor(z.dist_centers, z.recycles, z.modes, 0.0);
    in.cost_dc_disposal = const_tensor(z.dist_centers, z.disposals, z.modes, 0.0);

    in.emission_plant = Eigen::VectorXd::Zero(z.plants);
    in.emission_dc = Eigen::VectorXd::Zero(z.dist_centers);
    in.emission_recycle = Eigen::VectorXd::Zero(z.recycles);
    in.emission_disposal = Eigen::VectorXd::Zero(z.disposals);
    in.emission_plant_dc = const_tensor(z.plants, z.dist_centers, z.modes, 0.0);
    in.emission_dc_customer = const_tensor(z.dist_centers, z.customers, z.modes, 0.0);
    in.emission_customer_dc = const_tensor(z.customers, z.dist_centers, z.modes, 0.0);
    in.emission_dc_plant = const_tensor(z.dist_centers, z.plants, z.modes, 0.0);
    in.emission_dc_recycle = const_tensor(z.dist_centers, z.recycles, z.modes, 0.0);
    in.emission_dc_disposal = const_tensor(z.dist_centers, z.disposals, z.modes, 0.0);

    in.risk_weights = Eigen::Vector4d(0.4, 0.2, 0.2, 0.2);
    in.risk_plant = zero_facility_risk(z.plants);
    in.risk_dc = zero_facility_risk(z.dist_centers);
    in.risk_recycle = zero_facility_risk(z.recycles);
    in.risk_disposal = zero_facility_risk(z.disposals);
    in.risk_plant_dc = zero_arc_risk(z.plants, z.dist_centers, z.modes);
    in.risk_dc_customer = zero_arc_risk(z.dist_centers, z.customers, z.modes);
    in.risk_customer_dc = zero_arc_risk(z.customers, z.dist_centers, z.modes);
    in.risk_dc_plant = zero_arc_risk(z.dist_centers, z.plants, z.modes);
    in.risk_dc_recycle = zero_arc_risk(z.dist_centers, z.recycles, z.modes);
    in.risk_dc_disposal = zero_arc_risk(z.dist_centers, z.disposals, z.modes);

    in.cap_manufacturing = Eigen::VectorXd::Zero(z.plants);
    in.cap_remanufacturing = Eigen::VectorXd::Zero(z.plants);
    in.cap_dc_forward = Eigen::VectorXd::Zero(z.dist_centers);
    in.cap_dc_reverse = Eigen::VectorXd::Zero(z.dist_centers);
    in.cap_recycle = Eigen::VectorXd::Zero(z.recycles);
    in.cap_disposal = Eigen::VectorXd::Zero(z.disposals);
    return in;
}

// One of everything: a single plant (fixed cost 100) shipping 10 units to a
// single center (fixed cost 50) and on to one customer, at 2 and 3 per unit,
// with no returned products. Economic objective at the paired solution: 200.
inline Instance hand_instance() {
    Instance in = blank_instance(EchelonSizes{1, 1, 1, 1, 1, 1});
    in.demand[0] = 10.0;
    in.fixed_cost_plant[0] = 100.0;
    in.fixed_cost_dc[0] = 50.0;
    in.cost_plant_dc[0](0, 0) = 2.0;
    in.cost_dc_customer[0](0, 0) = 3.0;
    in.cap_manufacturing[0] = 100.0;
    in.cap_remanufacturing[0] = 100.0;
    in.cap_dc_forward[0] = 100.0;
    in.cap_dc_reverse[0] = 100.0;
    in.cap_recycle[0] = 100.0;
    in.cap_disposal[0] = 100.0;
    return in;
}

// The solution paired with hand_instance(): both forward facilities open,
// 10 units on each forward arc, empty reverse chain.
inline Solution hand_solution() {
    Solution s = zero_solution(EchelonSizes{1, 1, 1, 1, 1, 1});
    s.open_plant[0] = 1;
    s.open_dc[0] = 1;
    s.flow_plant_dc[0](0, 0) = 10.0;
    s.flow_dc_customer[0](0, 0) = 10.0;
    return s;
}

// Uniformly random nonnegative data in every instance field; validates.
inline Instance random_instance(const EchelonSizes& z, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Instance in = blank_instance(z);
    auto fill_vec = [&](Eigen::VectorXd& v, double scale) {
        for (int i = 0; i < v.size(); ++i) v[i] = scale * unit(rng);
    };
    auto fill_tensor = [&](ModeMatrices& m, double scale) {
        for (auto& mat : m)
            for (int a = 0; a < mat.rows(); ++a)
                for (int b = 0; b < mat.cols(); ++b) mat(a, b) = scale * unit(rng);
    };
    auto fill_facility_risk = [&](FacilityRiskCounts& r) {
        fill_vec(r.accident, 5.0);
        fill_vec(r.psychosocial, 5.0);
        fill_vec(r.physical, 5.0);
        fill_vec(r.mental_overload, 5.0);
    };
    auto fill_arc_risk = [&](ArcRiskCounts& r) {
        fill_tensor(r.accident, 0.01);
        fill_tensor(r.psychosocial, 0.01);
        fill_tensor(r.physical, 0.01);
        fill_tensor(r.mental_overload, 0.01);
    };

    fill_vec(in.demand, 50.0);
    fill_vec(in.fixed_cost_plant, 1000.0);
    fill_vec(in.fixed_cost_dc, 500.0);
    fill_vec(in.fixed_cost_recycle, 300.0);
    fill_vec(in.fixed_cost_disposal, 300.0);
    fill_tensor(in.cost_plant_dc, 5.0);
    fill_tensor(in.cost_dc_customer, 5.0);
    fill_tensor(in.cost_customer_dc, 5.0);
    fill_tensor(in.cost_dc_plant, 5.0);
    fill_tensor(in.cost_dc_recycle, 5.0);
    fill_tensor(in.cost_dc_disposal, 5.0);
    fill_vec(in.emission_plant, 800.0);
    fill_vec(in.emission_dc, 500.0);
    fill_vec(in.emission_recycle, 400.0);
    fill_vec(in.emission_disposal, 400.0);
    fill_tensor(in.emission_plant_dc, 10.0);
    fill_tensor(in.emission_dc_customer, 10.0);
    fill_tensor(in.emission_customer_dc, 10.0);
    fill_tensor(in.emission_dc_plant, 10.0);
    fill_tensor(in.emission_dc_recycle, 10.0);
    fill_tensor(in.emission_dc_disposal, 10.0);
    fill_facility_risk(in.risk_plant);
    fill_facility_risk(in.risk_dc);
    fill_facility_risk(in.risk_recycle);
    fill_facility_risk(in.risk_disposal);
    fill_arc_risk(in.risk_plant_dc);
    fill_arc_risk(in.risk_dc_customer);
    fill_arc_risk(in.risk_customer_dc);
    fill_arc_risk(in.risk_dc_plant);
    fill_arc_risk(in.risk_dc_recycle);
    fill_arc_risk(in.risk_dc_disposal);
    fill_vec(in.cap_manufacturing, 500.0);
    fill_vec(in.cap_remanufacturing, 100.0);
    fill_vec(in.cap_dc_forward, 400.0);
    fill_vec(in.cap_dc_reverse, 100.0);
    fill_vec(in.cap_recycle, 150.0);
    fill_vec(in.cap_disposal, 150.0);
    in.return_fraction = 0.2;
    in.reuse_fraction = 0.4;
    in.recycle_fraction = 0.3;
    return in;
}

// Random (generally infeasible) solution with 50/50 opens and uniform flows.
inline Solution random_solution(const EchelonSizes& z, std::mt19937_64& rng, double flow_scale) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Solution s = zero_solution(z);
    auto flip_open = [&](Eigen::VectorXi& open) {
        for (int i = 0; i < open.size(); ++i) open[i] = unit(rng) < 0.5 ? 1 : 0;
    };
    auto fill_flow = [&](ModeMatrices& m) {
        for (auto& mat : m)
            for (int a = 0; a < mat.rows(); ++a)
                for (int b = 0; b < mat.cols(); ++b) mat(a, b) = flow_scale * unit(rng);
    };
    flip_open(s.open_plant);
    flip_open(s.open_dc);
    flip_open(s.open_recycle);
    flip_open(s.open_disposal);
    fill_flow(s.flow_plant_dc);
    fill_flow(s.flow_dc_customer);
    fill_flow(s.flow_customer_dc);
    fill_flow(s.flow_dc_plant);
    fill_flow(s.flow_dc_recycle);
    fill_flow(s.flow_dc_disposal);
    return s;
}

}  // namespace clscnd::testing
