#pragma once

#include <string>

#include "clscnd/linear_model.hpp"

namespace clscnd {

// Renders the model with one chosen objective in LP text format (grammar
// documented in docs/lp_format.md): Minimize / Subject To / Bounds /
// Binaries / End sections, one constraint per line. Bracketed variable
// names and row tags are flattened to underscores (X[0][1][2] -> X_0_1_2)
// so external solvers accept them.
std::string write_lp(const LinearModel& model, int objective_index = 0);

}  // namespace clscnd
