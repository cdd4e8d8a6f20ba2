#pragma once

#include <string>

#include "clscnd/epsilon_constraint.hpp"
#include "clscnd/feasibility.hpp"
#include "clscnd/instance.hpp"
#include "clscnd/instance_gen.hpp"
#include "json.hpp"

namespace clscnd {

// Insertion-ordered JSON keeps every document layout deterministic.
using Json = nlohmann::ordered_json;

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// 64-bit FNV-1a over a byte string; used for platform-stable config hashes.
std::uint64_t fnv1a64(const std::string& text);

// --- Instance ---------------------------------------------------------
// Arc tensors nest as [from][to][mode]; vectors keep their natural index.
Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// --- Solution ---------------------------------------------------------
Json to_json(const Solution& sol);
Solution solution_from_json(const Json& j);

// --- Generator config (experiment provenance) --------------------------
Json to_json(const GenConfig& config);
GenConfig gen_config_from_json(const Json& j);

// --- Reports -----------------------------------------------------------
Json to_json(const ObjectiveTriple& t);
Json to_json(const PayoffTable& table);
Json to_json(const FeasibilityReport& report);

// Full sweep report: payoff, ranges, grid, per-cell status, members with
// open-facility bit-strings (the instance supplies the variable layout).
Json run_report(const ParetoFront& front, const Instance& inst);

// One row per front member:
//   economic,environmental,social,e_<first>,e_<second>,open_plants,
//   open_dcs,open_recycles,open_disposals
// where the e columns are named after the constrained objectives
// (e_env,e_soc in the default role assignment) and the open columns hold
// 0/1 strings in facility-index order.
std::string front_csv(const ParetoFront& front, const Instance& inst);

// --- Files -------------------------------------------------------------
Json load_json_file(const std::string& path);      // throws std::runtime_error
std::string read_text(std::istream& in);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace clscnd
