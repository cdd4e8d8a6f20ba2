#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

namespace clscnd {

// Echelon counts of the six-tier network plus the number of transport modes.
struct EchelonSizes {
    int plants = 1;        // manufacturing / remanufacturing sites (index i)
    int dist_centers = 1;  // distribution / inspection sites (index j)
    int customers = 1;     // customer zones (index k)
    int recycles = 1;      // recycling sites (index r)
    int disposals = 1;     // disposal sites (index s)
    int modes = 1;         // transport modes (index t)

    bool operator==(const EchelonSizes&) const = default;
};

// Stack of per-mode arc matrices; tensor[t](from, to).
using ModeMatrices = std::vector<Eigen::MatrixXd>;

// Worker counts per risk category for one echelon's facilities.
struct FacilityRiskCounts {
    Eigen::VectorXd accident, psychosocial, physical, mental_overload;
};

// Worker counts per risk category for one arc family, per product shipped.
struct ArcRiskCounts {
    ModeMatrices accident, psychosocial, physical, mental_overload;
};

// Full parameterization of one closed-loop network design problem.
// Immutable by convention once validated; all evaluation operations are pure.
struct Instance {
    EchelonSizes sizes;

    Eigen::VectorXd demand;  // products/year per customer zone

    Eigen::VectorXd fixed_cost_plant, fixed_cost_dc, fixed_cost_recycle, fixed_cost_disposal;
    ModeMatrices cost_plant_dc, cost_dc_customer, cost_customer_dc, cost_dc_plant,
        cost_dc_recycle, cost_dc_disposal;  // currency per product

    Eigen::VectorXd emission_plant, emission_dc, emission_recycle, emission_disposal;  // grams CO2
    ModeMatrices emission_plant_dc, emission_dc_customer, emission_customer_dc, emission_dc_plant,
        emission_dc_recycle, emission_dc_disposal;  // grams per product

    // weights of accident / psychosocial / physical / mental-overload risks; sum to 1
    Eigen::Vector4d risk_weights;
    FacilityRiskCounts risk_plant, risk_dc, risk_recycle, risk_disposal;
    ArcRiskCounts risk_plant_dc, risk_dc_customer, risk_customer_dc, risk_dc_plant,
        risk_dc_recycle, risk_dc_disposal;

    Eigen::VectorXd cap_manufacturing, cap_remanufacturing;  // per plant site
    Eigen::VectorXd cap_dc_forward, cap_dc_reverse;          // per dist/inspection site
    Eigen::VectorXd cap_recycle, cap_disposal;

    double return_fraction = 0.0;   // share of demand coming back from customers
    double reuse_fraction = 0.0;    // share of returns sent to remanufacturing
    double recycle_fraction = 0.0;  // share of returns sent to recycling

    // Throws std::invalid_argument describing the first broken invariant.
    void validate() const;
};

struct ObjectiveTriple {
    double economic = 0.0;       // currency
    double environmental = 0.0;  // grams CO2
    double social = 0.0;         // weighted worker count

    double operator[](int i) const { return i == 0 ? economic : (i == 1 ? environmental : social); }
};

inline const char* objective_name(int i) {
    return i == 0 ? "economic" : (i == 1 ? "environmental" : "social");
}

// Facility-open decisions (exact 0/1 integers) plus arc-mode flows.
struct Solution {
    Eigen::VectorXi open_plant, open_dc, open_recycle, open_disposal;
    ModeMatrices flow_plant_dc, flow_dc_customer, flow_customer_dc, flow_dc_plant,
        flow_dc_recycle, flow_dc_disposal;
    std::optional<ObjectiveTriple> objectives;
};

// Closed network with zero flow, dimensioned for `sizes`.
Solution zero_solution(const EchelonSizes& sizes);

// Throws std::invalid_argument when the solution's dimensions do not match.
void check_dimensions(const Instance& inst, const Solution& sol);

// Evaluates the three minimized objectives at a solution: fixed + transport
// cost, fixed + transport emissions, and the weighted worker-risk count.
ObjectiveTriple evaluate_objectives(const Instance& inst, const Solution& sol);

// Weighted sum of the four risk-category counts under `weights`.
double weighted_risk(const Eigen::Vector4d& weights, double accident, double psychosocial,
                     double physical, double mental_overload);

}  // namespace clscnd
