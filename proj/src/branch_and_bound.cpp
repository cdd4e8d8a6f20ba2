#include "clscnd/branch_and_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "clscnd/rational.hpp"

namespace clscnd {

namespace {

struct Node {
    double bound = -std::numeric_limits<double>::infinity();
    int depth = 0;
    long serial = 0;
    // fixings[b] is -1 (free), 0 or 1 for the b-th integral variable
    std::vector<signed char> fixings;
};

// Best-bound min-heap; ties prefer deeper nodes, then earlier insertion.
struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound > b.bound;
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.serial > b.serial;
    }
};

// A starting assignment only helps if it truly is feasible: an infeasible
// incumbent would prune the real optimum. Check rows, bounds and binary
// integrality at the pruning tolerance before trusting it.
bool usable_start(const LinearModel& model, const Eigen::VectorXd& x, double int_tol) {
    if (x.size() != model.num_variables()) return false;
    for (int j = 0; j < model.num_variables(); ++j) {
        const Variable& v = model.variable(j);
        const double slack = 1e-6 * (1.0 + std::abs(x[j]));
        if (x[j] < v.lower - slack || x[j] > v.upper + slack) return false;
        if (v.integral && std::abs(x[j] - std::round(x[j])) > int_tol) return false;
    }
    for (int i = 0; i < model.num_constraints(); ++i) {
        const Constraint& c = model.constraint(i);
        if (constraint_violation(c, x) > 1e-6 * (1.0 + std::abs(c.rhs))) return false;
    }
    return true;
}

}  // namespace

MilpResult solve_single_objective(const LinearModel& model, int objective_index,
                                  const BnbOptions& options, const Eigen::VectorXd* start) {
    const std::vector<int> binaries = model.integral_variables();
    const int nb = static_cast<int>(binaries.size());
    SimplexSolver<double> solver(model, objective_index, options.lp);

    const double inf = std::numeric_limits<double>::infinity();
    double incumbent_obj = inf;
    Eigen::VectorXd incumbent_values;
    long nodes = 0;
    long pivots = 0;
    long serial = 0;

    // Float LP for the given fixings; if it stalls, retry in exact rational
    // arithmetic (Bland pricing, guaranteed to terminate) so no node is ever
    // resolved with a guess. Node relaxations reuse the previous basis;
    // incumbent-certifying solves run cold for a cleanly factorized answer.
    auto solve_relaxed = [&](const std::vector<signed char>& fix, bool warm) {
        solver.reset_bounds();
        for (int b = 0; b < nb; ++b)
            if (fix[b] >= 0) {
                const double v = fix[b];
                solver.set_variable_bounds(binaries[b], v, v);
            }
        try {
            LpResult<double> lp = solver.solve(warm);
            pivots += lp.iterations;
            return lp;
        } catch (const SimplexStalled&) {
            LinearModel pinned = model;
            for (int b = 0; b < nb; ++b)
                if (fix[b] >= 0) {
                    const double v = fix[b];
                    pinned.set_variable_bounds(binaries[b], v, v);
                }
            SimplexSolver<Rational> exact(pinned, objective_index);
            LpResult<Rational> rlp = exact.solve();
            LpResult<double> lp;
            lp.status = rlp.status;
            lp.iterations = rlp.iterations;
            pivots += rlp.iterations;
            if (rlp.status == LpStatus::Optimal) {
                lp.objective = rlp.objective.to_double();
                lp.x = Eigen::VectorXd(rlp.x.size());
                for (int v = 0; v < rlp.x.size(); ++v) lp.x[v] = rlp.x[v].to_double();
            }
            return lp;
        }
    };

    auto make_partial = [&](double bound) {
        MilpResult partial;
        partial.nodes_explored = nodes;
        partial.lp_iterations = pivots;
        partial.bound = bound;
        if (incumbent_obj < inf) {
            partial.status = MilpStatus::Optimal;
            partial.objective = incumbent_obj;
            partial.values = incumbent_values;
        }
        return partial;
    };

    auto offer_incumbent = [&](double obj, const Eigen::VectorXd& values) {
        if (obj < incumbent_obj) {
            incumbent_obj = obj;
            incumbent_values = values;
            for (int b = 0; b < nb; ++b)
                incumbent_values[binaries[b]] = std::round(incumbent_values[binaries[b]]);
        }
    };

    if (start != nullptr && usable_start(model, *start, options.int_tol))
        offer_incumbent(model.objective(objective_index).value_at(*start), *start);

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    open.push(Node{-inf, 0, serial++, std::vector<signed char>(nb, -1)});

    // Bounds within this sliver of the incumbent close rather than branch;
    // the returned value can exceed the true optimum by at most this much,
    // three orders of magnitude inside the 1e-6 verification tolerance.
    auto prune_cutoff = [&] {
        return incumbent_obj - 1e-9 * (1.0 + std::abs(incumbent_obj));
    };

    while (!open.empty()) {
        Node node = open.top();
        open.pop();
        // a node queued before the incumbent improved may be prunable now
        if (node.bound >= prune_cutoff()) continue;

        if (nodes >= options.node_budget)
            throw ResourceLimitError("node budget of " + std::to_string(options.node_budget) +
                                         " exhausted",
                                     make_partial(std::min(node.bound, incumbent_obj)));
        ++nodes;

        LpResult<double> lp = solve_relaxed(node.fixings, /*warm=*/true);
        if (lp.status == LpStatus::Infeasible) continue;
        if (lp.status == LpStatus::Unbounded)
            throw std::runtime_error(
                "relaxation is unbounded; the model is not a bounded network design");
        if (lp.objective >= prune_cutoff()) continue;

        // Reduced-cost fixing: a binary resting on a bound whose reduced
        // cost already pushes the node bound clearly past the incumbent can
        // be pinned to that bound for the whole subtree. Only clearly-worse
        // completions are cut, so optima within tolerance are preserved.
        if (incumbent_obj < inf && lp.reduced_costs.size() == model.num_variables()) {
            const double cutoff = incumbent_obj + 1e-6 * (1.0 + std::abs(incumbent_obj));
            for (int b = 0; b < nb; ++b) {
                if (node.fixings[b] >= 0) continue;
                const int j = binaries[b];
                const double xj = lp.x[j];
                const double dj = lp.reduced_costs[j];
                if (xj <= options.int_tol && dj > 0.0 && lp.objective + dj >= cutoff)
                    node.fixings[b] = 0;
                else if (xj >= 1.0 - options.int_tol && dj < 0.0 && lp.objective - dj >= cutoff)
                    node.fixings[b] = 1;
            }
        }

        int branch_var = -1;  // index into `binaries`
        double worst = options.int_tol;
        for (int b = 0; b < nb; ++b) {
            const double v = lp.x[binaries[b]];
            const double frac = std::min(v - std::floor(v), std::ceil(v) - v);
            if (frac > worst) {
                worst = frac;
                branch_var = b;
            }
        }

        if (branch_var < 0) {
            // integral within tolerance; certify by re-solving with every
            // binary pinned to its rounded value so the incumbent is exact
            bool all_fixed = true;
            for (int b = 0; b < nb; ++b) all_fixed &= node.fixings[b] >= 0;
            if (all_fixed) {
                offer_incumbent(lp.objective, lp.x);
                continue;
            }
            std::vector<signed char> rounded(nb);
            for (int b = 0; b < nb; ++b)
                rounded[b] = static_cast<signed char>(std::lround(lp.x[binaries[b]]));
            LpResult<double> certified = solve_relaxed(rounded, /*warm=*/false);
            if (certified.status == LpStatus::Optimal) {
                offer_incumbent(certified.objective, certified.x);
                continue;
            }
            // rounding broke feasibility: split on the first free binary
            for (int b = 0; b < nb && branch_var < 0; ++b)
                if (node.fixings[b] < 0) branch_var = b;
            if (branch_var < 0) continue;  // fully fixed and unrepairable
        }

        // open-facility child first: at equal bounds the tie-break walks
        // insertion order, and diving toward 1 reaches feasible incumbents
        // sooner than closing facilities under unmet demand
        for (int value = 1; value >= 0; --value) {
            Node child;
            child.bound = lp.objective;
            child.depth = node.depth + 1;
            child.serial = serial++;
            child.fixings = node.fixings;
            child.fixings[branch_var] = static_cast<signed char>(value);
            open.push(std::move(child));
        }
    }

    MilpResult res;
    res.nodes_explored = nodes;
    res.lp_iterations = pivots;
    if (incumbent_obj < inf) {
        res.status = MilpStatus::Optimal;
        res.objective = incumbent_obj;
        res.values = std::move(incumbent_values);
        res.bound = incumbent_obj;
    } else {
        res.status = MilpStatus::Infeasible;
        res.bound = inf;
    }
    return res;
}

MilpResult enumerate_oracle(const LinearModel& model, int objective_index, bool prune) {
    const std::vector<int> binaries = model.integral_variables();
    const int nb = static_cast<int>(binaries.size());
    if (nb > 22)
        throw std::invalid_argument("enumerate_oracle: " + std::to_string(nb) +
                                    " binaries exceed the 2^22 enumeration guard");

    // Pruning by the open-facility part of the objective is exact only when
    // no coefficient is negative (flows then only add to the objective).
    const LinearExpr& obj = model.objective(objective_index);
    bool nonneg = true;
    for (const auto& [var, coef] : obj.terms()) nonneg &= coef >= 0.0;
    prune = prune && nonneg;

    std::vector<double> open_cost(nb, 0.0);
    for (int b = 0; b < nb; ++b) open_cost[b] = obj.coefficient(binaries[b]);

    MilpResult best;
    best.bound = std::numeric_limits<double>::infinity();
    bool found = false;
    Rational best_exact(0);
    long lps = 0;

    std::vector<int> assignment(nb, 0);
    const long total = 1L << nb;
    for (long mask = 0; mask < total; ++mask) {
        double fixed_part = obj.constant();
        for (int b = 0; b < nb; ++b) {
            assignment[b] = static_cast<int>((mask >> b) & 1);
            fixed_part += assignment[b] ? open_cost[b] : 0.0;
        }
        if (prune && found && Rational(fixed_part) >= best_exact) continue;

        LinearModel fixed = fix_binaries(model, assignment);
        SimplexSolver<Rational> solver(fixed, objective_index);
        ++lps;
        LpResult<Rational> lp = solver.solve();
        if (lp.status != LpStatus::Optimal) continue;
        if (!found || lp.objective < best_exact) {
            found = true;
            best_exact = lp.objective;
            best.values = Eigen::VectorXd(lp.x.size());
            for (int v = 0; v < lp.x.size(); ++v) best.values[v] = lp.x[v].to_double();
            for (int b = 0; b < nb; ++b) best.values[binaries[b]] = assignment[b];
        }
    }

    best.nodes_explored = lps;
    if (found) {
        best.status = MilpStatus::Optimal;
        best.objective = best_exact.to_double();
        best.bound = best.objective;
    }
    return best;
}

}  // namespace clscnd
