#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

#include "clscnd/linear_model.hpp"
#include "clscnd/simplex.hpp"

namespace clscnd {

enum class MilpStatus { Optimal, Infeasible };

struct MilpResult {
    MilpStatus status = MilpStatus::Infeasible;
    Eigen::VectorXd values;      // full variable assignment when Optimal
    double objective = 0.0;      // incumbent objective when Optimal
    long nodes_explored = 0;
    long lp_iterations = 0;      // simplex pivots summed over all node solves
    double bound = 0.0;          // proven lower bound at termination
};

struct BnbOptions {
    long node_budget = 200000;   // LP relaxations solved before giving up
    double int_tol = 1e-6;       // how close to 0/1 counts as integral
    SimplexOptions lp;           // iteration control for the inner LPs
};

// Raised when the node budget runs out. Carries the tree's state at the
// moment of interruption: the best proven bound and, when one was found,
// the best incumbent so far (status Optimal means "incumbent present",
// not "proven optimal", in this partial result).
class ResourceLimitError : public std::runtime_error {
  public:
    ResourceLimitError(const std::string& what, MilpResult partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const MilpResult& partial() const { return partial_; }
    bool has_incumbent() const { return partial_.values.size() > 0; }

  private:
    MilpResult partial_;
};

// Exact minimization of one objective by branch-and-bound on the integral
// variables: best-bound node order (ties: deeper node, then insertion
// order), branching on the most fractional binary (ties: lowest index).
// Optimal results have exactly-integral binaries and satisfy every row.
//
// `start` may carry a full variable assignment known to be feasible; it is
// installed as the initial incumbent so pruning and reduced-cost fixing act
// from the first node. The assignment is re-verified (rows, bounds,
// integrality) and silently ignored when it fails, so a stale hint can cost
// time but never correctness. The search itself is unchanged.
MilpResult solve_single_objective(const LinearModel& model, int objective_index,
                                  const BnbOptions& options = {},
                                  const Eigen::VectorXd* start = nullptr);

// Independent reference solver: exhaustively fixes all 2^B binary
// assignments (B <= 22 enforced) and solves each LP with exact rational
// arithmetic. `prune` skips assignments whose open-facility objective part
// already exceeds the best known value; it is only applied when every
// objective coefficient is nonnegative, where it is exact.
MilpResult enumerate_oracle(const LinearModel& model, int objective_index, bool prune = true);

}  // namespace clscnd
