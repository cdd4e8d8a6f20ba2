#pragma once

#include <Eigen/Core>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "clscnd/branch_and_bound.hpp"
#include "clscnd/instance.hpp"
#include "clscnd/linear_model.hpp"

namespace clscnd {

// Raised when a single-objective trial of the payoff table is infeasible:
// the whole multi-objective run is then meaningless.
class InfeasibleProblemError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class SignMode {
    // min f_kept - epsilon * sum(s_i / r_i)  with  f_i + s_i = e_i, s_i >= 0.
    // Guarantees every returned optimum is efficient.
    Standard,
    // min f_kept + epsilon * sum(s_i / r_i)  with  f_i - s_i = e_i, s_i >= 0.
    // Compatibility mode replicating the maximization-form template as
    // written; efficiency is not guaranteed under minimization.
    Literal,
};

struct MooOptions {
    int kept_objective = 0;                // objective kept in the subproblems
    std::array<int, 2> constrained{1, 2};  // objectives turned into e-bounds
    bool lexicographic = true;             // payoff rows refined lexicographically
    SignMode sign_mode = SignMode::Standard;
    BnbOptions bnb;
    int jobs = 1;  // concurrent grid-chain workers (see pareto_front)

    void validate(int num_objectives) const;  // throws std::invalid_argument
};

// Row = which objective was minimized (the trial), column = value of each
// objective at that trial's optimizer.
struct PayoffTable {
    Eigen::Matrix3d values;
    std::array<Eigen::VectorXd, 3> trials;  // model-variable vector per trial
    std::array<long, 3> nodes{0, 0, 0};     // tree nodes spent per trial
};

struct ObjectiveRanges {
    std::vector<int> objectives;  // constrained objective indices
    Eigen::VectorXd fmin, fmax, range;  // aligned with `objectives`
};

struct GridSpec {
    int m = 0;        // cuts per constrained objective
    int p = 0;        // number of constrained objectives
    double epsilon = 1e-4;
    std::vector<Eigen::VectorXd> e_vectors;  // m^p points, lexicographic
};

struct SubproblemResult {
    MilpStatus status = MilpStatus::Infeasible;
    Eigen::VectorXd values;      // original model's variables only
    ObjectiveTriple objectives;  // original objectives at the optimum
    double augmented_objective = 0.0;
    long nodes_explored = 0;
    long lp_iterations = 0;  // simplex pivots summed over all node solves
};

enum class CellStatus { Optimal, Infeasible, Duplicate, Dominated, ResourceLimit };

const char* cell_status_name(CellStatus s);

struct CellReport {
    int index = 0;
    Eigen::VectorXd e;
    CellStatus status = CellStatus::Infeasible;
    ObjectiveTriple objectives;  // meaningful unless Infeasible/ResourceLimit
    long nodes_explored = 0;
};

struct FrontMember {
    Eigen::VectorXd values;
    ObjectiveTriple objectives;
    Eigen::VectorXd e;  // originating grid point
    int cell = 0;
};

struct ParetoFront {
    PayoffTable payoff;
    ObjectiveRanges ranges;
    GridSpec grid;
    std::vector<CellReport> cells;
    std::vector<FrontMember> members;  // deduplicated, mutually non-dominated
    bool complete = true;  // false when any cell hit the node budget
};

// Solves each objective to optimality; with `lexicographic` the remaining
// objectives are re-minimized in index order subject to the already fixed
// optima (within 1e-7 relative slack). Throws InfeasibleProblemError when
// the model itself is infeasible.
PayoffTable payoff_table(const LinearModel& model, const MooOptions& options = {});

// Column extremes of the payoff table for the constrained objectives.
ObjectiveRanges objective_ranges(const PayoffTable& table, const std::vector<int>& constrained);

// m evenly spaced values from fmin to fmax per constrained objective
// (step range/(m-1), both endpoints included), combined in lexicographic
// order (first constrained objective outermost) into m^p e-vectors.
GridSpec grid_points(const ObjectiveRanges& ranges, int m, double epsilon = 1e-4);

// One augmented subproblem at grid point `e`. A zero-range objective keeps
// its bounding row but contributes no slack-scaling term. When `warm_from`
// or `extra_starts` are given, the candidate solutions among them that
// satisfy this cell's bounds are offered to the solver as starting
// incumbents (results are unchanged, the search just prunes earlier).
SubproblemResult augmented_subproblem(const LinearModel& model, const Eigen::VectorXd& e,
                                      double epsilon, const ObjectiveRanges& ranges,
                                      const MooOptions& options = {},
                                      const PayoffTable* warm_from = nullptr,
                                      const std::vector<Eigen::VectorXd>* extra_starts = nullptr);

// Full sweep: payoff table, ranges, grid, m^p subproblems, duplicate
// removal (1e-9 on triples), dominance filtering (1e-6). Cells that exhaust
// the node budget are recorded and flag the front as incomplete.
//
// Cells are grouped into chains that share every bound except the first
// constrained objective's; each chain runs sequentially from the loosest
// first-objective bound to the tightest, seeding every cell with the optima
// found earlier in the same chain (plus the payoff trials). Chains are
// independent, so `options.jobs` parallelizes across them; the seed set of
// a cell never depends on thread timing.
ParetoFront pareto_front(const LinearModel& model, int m, double epsilon = 1e-4,
                         const MooOptions& options = {});

// Keeps the points not dominated by any other input point (minimization,
// tolerance `tol`); among points equal within `tol` only the first survives.
// Stable order.
std::vector<ObjectiveTriple> dominance_filter(const std::vector<ObjectiveTriple>& points,
                                              double tol = 1e-6);

// Membership test against exhaustive enumeration: `point` is efficient iff
// no feasible solution weakly improves every objective. Verified by
// minimizing the objective sum subject to f_i <= point_i via the exact
// enumeration oracle. Intended for small models (binary count guard applies).
bool efficient_against_enumeration(const LinearModel& model, const ObjectiveTriple& point,
                                   double tol = 1e-6);

}  // namespace clscnd
