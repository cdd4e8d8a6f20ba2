#pragma once

#include <string>
#include <vector>

#include "clscnd/instance.hpp"

namespace clscnd {

// One violated requirement. `family` is the constraint family number
// (1..12 for the balance/capacity rows, 13 for flow nonnegativity, 14 for
// binary opens); `entity` is the index of the offending facility, zone or
// flow entry within its family; `residual` is the violation magnitude
// (always positive); `label` is a human-readable description.
struct Violation {
    int family = 0;
    int entity = 0;
    double residual = 0.0;
    std::string label;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<Violation> violations;
};

// Checks every model requirement directly against the instance data,
// independently of any algebraic model. Violations smaller than `tol`
// are ignored. Families, in order:
//   1  demand satisfaction per customer zone
//   2  forward balance at each distribution center
//   3  manufacturing capacity per plant
//   4  forward distribution capacity per center
//   5  collected returns per customer zone
//   6  inspection (reverse) capacity per center
//   7  remanufacturing share dispatched per center
//   8  remanufacturing capacity per plant
//   9  recycling share dispatched per center
//  10  recycling capacity per site
//  11  disposal share dispatched per center
//  12  disposal capacity per site
//  13  flow nonnegativity
//  14  facility opens binary
FeasibilityReport check_feasibility(const Instance& inst, const Solution& sol, double tol = 1e-6);

}  // namespace clscnd
