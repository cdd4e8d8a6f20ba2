#include "clscnd/epsilon_constraint.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>

#include "clscnd/logging.hpp"

namespace clscnd {
namespace {

constexpr double kLexSlack = 1e-7;      // relative slack when pinning refined objectives
constexpr double kDuplicateTol = 1e-9;  // exact-duplicate collapse before filtering
constexpr double kDominanceTol = 1e-6;
constexpr double kEpsilonMin = 1e-6;
constexpr double kEpsilonMax = 1e-3;

double relative_slack(double v, double rel) { return rel * (1.0 + std::abs(v)); }

void check_epsilon(double epsilon) {
    if (!(epsilon >= kEpsilonMin && epsilon <= kEpsilonMax))
        throw std::invalid_argument("epsilon must lie in [1e-6, 1e-3]");
}

Constraint bound_row(const LinearExpr& objective, double rhs, std::string tag) {
    Constraint c;
    c.expr = objective;
    c.sense = Sense::LessEqual;
    c.rhs = rhs;
    c.tag = std::move(tag);
    return c;
}

ObjectiveTriple evaluate_triple(const LinearModel& model, const Eigen::VectorXd& x) {
    return {model.objective(0).value_at(x), model.objective(1).value_at(x),
            model.objective(2).value_at(x)};
}

bool nearly_equal(const ObjectiveTriple& a, const ObjectiveTriple& b, double tol) {
    for (int k = 0; k < 3; ++k)
        if (std::abs(a[k] - b[k]) > tol) return false;
    return true;
}

// a dominates b: no component worse than b's (beyond tol), one strictly better.
bool dominates(const ObjectiveTriple& a, const ObjectiveTriple& b, double tol) {
    bool strict = false;
    for (int k = 0; k < 3; ++k) {
        if (a[k] > b[k] + tol) return false;
        if (a[k] < b[k] - tol) strict = true;
    }
    return strict;
}

enum class DropReason { Keep, Duplicate, Dominated };

// Definitional filter: a point is dropped when any input point dominates it,
// or when an earlier input point equals it within tol (first survivor wins).
std::vector<DropReason> filter_reasons(const std::vector<ObjectiveTriple>& points, double tol) {
    const std::size_t n = points.size();
    std::vector<DropReason> reason(n, DropReason::Keep);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n && reason[i] == DropReason::Keep; ++j) {
            if (j == i) continue;
            if (dominates(points[j], points[i], tol))
                reason[i] = DropReason::Dominated;
            else if (j < i && nearly_equal(points[j], points[i], tol))
                reason[i] = DropReason::Duplicate;
        }
    }
    return reason;
}

}  // namespace

void MooOptions::validate(int num_objectives) const {
    if (num_objectives < 3)
        throw std::invalid_argument("the model must carry three objectives");
    auto role = [](int k) {
        if (k < 0 || k > 2) throw std::invalid_argument("objective index outside 0..2");
        return k;
    };
    const int a = role(constrained[0]), b = role(constrained[1]), kept = role(kept_objective);
    if (a == b || a == kept || b == kept)
        throw std::invalid_argument("kept and constrained objectives must be distinct");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
}

const char* cell_status_name(CellStatus s) {
    switch (s) {
        case CellStatus::Optimal: return "optimal";
        case CellStatus::Infeasible: return "infeasible";
        case CellStatus::Duplicate: return "duplicate";
        case CellStatus::Dominated: return "dominated";
        case CellStatus::ResourceLimit: return "resource-limit";
    }
    return "unknown";
}

PayoffTable payoff_table(const LinearModel& model, const MooOptions& options) {
    options.validate(model.num_objectives());

    PayoffTable table;
    for (int k = 0; k < 3; ++k) {
        LinearModel work = model;
        long nodes = 0;
        MilpResult res = solve_single_objective(work, k, options.bnb);
        nodes += res.nodes_explored;
        if (res.status != MilpStatus::Optimal)
            throw InfeasibleProblemError("payoff trial " + std::to_string(k) +
                                         ": problem is infeasible");
        if (options.lexicographic) {
            work.add_constraint(bound_row(model.objective(k),
                                          res.objective + relative_slack(res.objective, kLexSlack),
                                          "lex[" + std::to_string(k) + "]"));
            for (int j = 0; j < 3; ++j) {
                if (j == k) continue;
                // the previous stage's solution satisfies every bound row so
                // far, so it seeds the next stage as a ready-made incumbent
                MilpResult refined = solve_single_objective(work, j, options.bnb, &res.values);
                nodes += refined.nodes_explored;
                if (refined.status != MilpStatus::Optimal)
                    throw InfeasibleProblemError("payoff refinement of objective " +
                                                 std::to_string(j) + " lost feasibility");
                work.add_constraint(
                    bound_row(model.objective(j),
                              refined.objective + relative_slack(refined.objective, kLexSlack),
                              "lex[" + std::to_string(j) + "]"));
                res = std::move(refined);
            }
        }
        table.trials[k] = res.values;
        table.nodes[k] = nodes;
        const ObjectiveTriple t = evaluate_triple(model, res.values);
        for (int j = 0; j < 3; ++j) table.values(k, j) = t[j];
        log::info("payoff trial " + std::to_string(k) + " done, nodes " + std::to_string(nodes));
    }
    return table;
}

ObjectiveRanges objective_ranges(const PayoffTable& table, const std::vector<int>& constrained) {
    if (constrained.empty())
        throw std::invalid_argument("objective_ranges: no constrained objectives");
    ObjectiveRanges r;
    r.objectives = constrained;
    const int p = static_cast<int>(constrained.size());
    r.fmin.resize(p);
    r.fmax.resize(p);
    r.range.resize(p);
    for (int i = 0; i < p; ++i) {
        const int k = constrained[i];
        if (k < 0 || k > 2)
            throw std::invalid_argument("objective_ranges: objective index outside 0..2");
        r.fmin[i] = table.values.col(k).minCoeff();
        r.fmax[i] = table.values.col(k).maxCoeff();
        r.range[i] = r.fmax[i] - r.fmin[i];
    }
    return r;
}

GridSpec grid_points(const ObjectiveRanges& ranges, int m, double epsilon) {
    if (m < 2) throw std::invalid_argument("grid_points: at least two cuts per objective");
    check_epsilon(epsilon);
    const int p = static_cast<int>(ranges.objectives.size());

    GridSpec g;
    g.m = m;
    g.p = p;
    g.epsilon = epsilon;

    std::vector<std::vector<double>> axis(p, std::vector<double>(m));
    for (int i = 0; i < p; ++i) {
        const double step = ranges.range[i] / (m - 1);
        for (int j = 0; j < m; ++j)
            axis[i][j] = (j == m - 1) ? ranges.fmax[i] : ranges.fmin[i] + step * j;
    }

    long total = 1;
    for (int i = 0; i < p; ++i) total *= m;
    g.e_vectors.reserve(static_cast<std::size_t>(total));
    for (long cell = 0; cell < total; ++cell) {
        Eigen::VectorXd e(p);
        long rest = cell;
        for (int i = p - 1; i >= 0; --i) {  // first objective is the outermost digit
            e[i] = axis[i][rest % m];
            rest /= m;
        }
        g.e_vectors.push_back(std::move(e));
    }
    return g;
}

SubproblemResult augmented_subproblem(const LinearModel& model, const Eigen::VectorXd& e,
                                      double epsilon, const ObjectiveRanges& ranges,
                                      const MooOptions& options, const PayoffTable* warm_from,
                                      const std::vector<Eigen::VectorXd>* extra_starts) {
    options.validate(model.num_objectives());
    check_epsilon(epsilon);
    const int p = static_cast<int>(ranges.objectives.size());
    if (e.size() != p)
        throw std::invalid_argument("augmented_subproblem: e-vector size mismatch");

    const bool standard = options.sign_mode == SignMode::Standard;
    LinearModel sub = model;
    LinearExpr augmented = model.objective(options.kept_objective);
    for (int i = 0; i < p; ++i) {
        const int k = ranges.objectives[i];
        const int slack =
            sub.add_variable("s[" + std::to_string(k) + "]", 0.0, kInfinity, false);
        Constraint row;
        row.expr = model.objective(k);
        row.expr.add_term(slack, standard ? 1.0 : -1.0);  // f_k + s = e  |  f_k - s = e
        row.sense = Sense::Equal;
        row.rhs = e[i];
        row.tag = "eps[" + std::to_string(k) + "]";
        sub.add_constraint(std::move(row));
        // A collapsed range cannot scale a slack reward; the bounding row
        // alone then pins the objective.
        if (ranges.range[i] > 0.0)
            augmented.add_term(slack, (standard ? -1.0 : 1.0) * epsilon / ranges.range[i]);
    }
    augmented.compress();
    sub.add_objective(std::move(augmented));  // appended: original indices stay valid

    // Candidate solutions whose objectives fit under this cell's bounds are
    // feasible here once their slack residuals are appended; the best of
    // them starts the search with a working incumbent. The seed set is
    // fixed up front, so parallel sweeps stay deterministic.
    Eigen::VectorXd seed;
    double seed_value = std::numeric_limits<double>::infinity();
    const auto consider = [&](const Eigen::VectorXd& trial) {
        if (trial.size() != model.num_variables()) return;
        Eigen::VectorXd extended(sub.num_variables());
        extended.head(model.num_variables()) = trial;
        for (int i = 0; i < p; ++i) {
            const double fk = model.objective(ranges.objectives[i]).value_at(trial);
            const double s = standard ? e[i] - fk : fk - e[i];
            if (s < 0.0) return;
            extended[model.num_variables() + i] = s;
        }
        const double value = sub.objective(sub.num_objectives() - 1).value_at(extended);
        if (value < seed_value) {
            seed_value = value;
            seed = std::move(extended);
        }
    };
    if (warm_from != nullptr)
        for (const Eigen::VectorXd& trial : warm_from->trials) consider(trial);
    if (extra_starts != nullptr)
        for (const Eigen::VectorXd& trial : *extra_starts) consider(trial);

    SubproblemResult out;
    MilpResult res = solve_single_objective(sub, sub.num_objectives() - 1, options.bnb,
                                            seed.size() > 0 ? &seed : nullptr);
    out.nodes_explored = res.nodes_explored;
    out.lp_iterations = res.lp_iterations;
    if (res.status != MilpStatus::Optimal) return out;
    out.status = MilpStatus::Optimal;
    out.values = res.values.head(model.num_variables());
    out.objectives = evaluate_triple(model, out.values);
    out.augmented_objective = res.objective;
    return out;
}

ParetoFront pareto_front(const LinearModel& model, int m, double epsilon,
                         const MooOptions& options) {
    options.validate(model.num_objectives());
    if (m < 2) throw std::invalid_argument("pareto_front: at least two cuts per objective");
    check_epsilon(epsilon);

    ParetoFront front;
    front.payoff = payoff_table(model, options);
    front.ranges = objective_ranges(
        front.payoff, {options.constrained[0], options.constrained[1]});
    front.grid = grid_points(front.ranges, m, epsilon);

    const int cells = static_cast<int>(front.grid.e_vectors.size());
    std::vector<SubproblemResult> results(cells);
    std::vector<CellStatus> status(cells, CellStatus::Infeasible);
    std::vector<long> limit_nodes(cells, 0);
    std::atomic<int> next{0};
    std::atomic<bool> incomplete{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    // A chain holds the cells that differ only in the first constrained
    // objective's bound (the outermost grid digit). Walking a chain from the
    // loosest bound to the tightest lets every cell reuse the looser cells'
    // optima as starting incumbents: those optima already satisfy all the
    // other bounds, which are identical along the chain. Chains depend only
    // on their own cells, so the seed set is thread-schedule independent.
    const int chains = cells / m;
    auto worker = [&]() {
        for (;;) {
            const int ch = next.fetch_add(1);
            if (ch >= chains) return;
            std::vector<Eigen::VectorXd> chain_starts;
            chain_starts.reserve(static_cast<std::size_t>(m));
            for (int i = m - 1; i >= 0; --i) {
                const int c = i * chains + ch;
                try {
                    results[c] =
                        augmented_subproblem(model, front.grid.e_vectors[c], epsilon,
                                             front.ranges, options, &front.payoff, &chain_starts);
                    if (results[c].status == MilpStatus::Optimal) {
                        status[c] = CellStatus::Optimal;
                        chain_starts.push_back(results[c].values);
                    } else {
                        status[c] = CellStatus::Infeasible;
                    }
                } catch (const ResourceLimitError& err) {
                    status[c] = CellStatus::ResourceLimit;
                    limit_nodes[c] = err.partial().nodes_explored;
                    incomplete.store(true);
                } catch (...) {
                    const std::scoped_lock lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        }
    };

    const int jobs = std::max(1, std::min(options.jobs, chains));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    front.complete = !incomplete.load();

    // Merge in grid order: exact-duplicate collapse first, then the
    // dominance filter over the surviving candidates.
    std::vector<int> kept;
    front.cells.reserve(cells);
    for (int c = 0; c < cells; ++c) {
        CellReport rep;
        rep.index = c;
        rep.e = front.grid.e_vectors[c];
        rep.status = status[c];
        rep.nodes_explored =
            status[c] == CellStatus::ResourceLimit ? limit_nodes[c] : results[c].nodes_explored;
        if (status[c] == CellStatus::Optimal) {
            rep.objectives = results[c].objectives;
            bool duplicate = false;
            for (const int prev : kept)
                if (nearly_equal(results[prev].objectives, results[c].objectives,
                                 kDuplicateTol)) {
                    duplicate = true;
                    break;
                }
            if (duplicate)
                rep.status = CellStatus::Duplicate;
            else
                kept.push_back(c);
        }
        front.cells.push_back(std::move(rep));
    }

    std::vector<ObjectiveTriple> candidates;
    candidates.reserve(kept.size());
    for (const int c : kept) candidates.push_back(results[c].objectives);
    const std::vector<DropReason> reason = filter_reasons(candidates, kDominanceTol);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const int c = kept[i];
        switch (reason[i]) {
            case DropReason::Keep:
                front.members.push_back({std::move(results[c].values), results[c].objectives,
                                         front.grid.e_vectors[c], c});
                break;
            case DropReason::Duplicate:
                front.cells[c].status = CellStatus::Duplicate;
                break;
            case DropReason::Dominated:
                front.cells[c].status = CellStatus::Dominated;
                break;
        }
    }
    log::info("pareto front: " + std::to_string(front.members.size()) + " members from " +
              std::to_string(cells) + " cells");
    return front;
}

std::vector<ObjectiveTriple> dominance_filter(const std::vector<ObjectiveTriple>& points,
                                              double tol) {
    const std::vector<DropReason> reason = filter_reasons(points, tol);
    std::vector<ObjectiveTriple> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (reason[i] == DropReason::Keep) out.push_back(points[i]);
    return out;
}

bool efficient_against_enumeration(const LinearModel& model, const ObjectiveTriple& point,
                                   double tol) {
    LinearModel work = model;
    LinearExpr sum;
    for (int k = 0; k < 3; ++k) {
        sum.add_scaled(model.objective(k), 1.0);
        work.add_constraint(bound_row(model.objective(k),
                                      point[k] + relative_slack(point[k], tol),
                                      "eff[" + std::to_string(k) + "]"));
    }
    sum.compress();
    work.add_objective(std::move(sum));
    const MilpResult res = enumerate_oracle(work, work.num_objectives() - 1);
    if (res.status != MilpStatus::Optimal) return false;  // point not attainable at all
    const double target = point.economic + point.environmental + point.social;
    return res.objective >= target - relative_slack(target, tol);
}

}  // namespace clscnd
