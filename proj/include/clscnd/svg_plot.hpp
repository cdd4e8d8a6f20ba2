#pragma once

#include <string>

#include "clscnd/epsilon_constraint.hpp"

namespace clscnd {

// Static SVG 1.1 document, 900x300: three scatter panels for the objective
// pairs (economic, environmental), (economic, social) and
// (environmental, social), with every front member marked and axes
// annotated with the payoff-table extremes.
std::string front_svg(const ParetoFront& front);

}  // namespace clscnd
