#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "clscnd/linear_model.hpp"
#include "clscnd/rational.hpp"

namespace clscnd {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class Scalar>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Scalar objective{};                            // includes the expression constant
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;    // structural variable values (Optimal only)
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> duals;  // one multiplier per constraint row
    // per structural variable: objective change rate when pushed off its bound
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> reduced_costs;
    Scalar dual_objective{};  // y.b plus reduced-cost terms of nonbasic bound values
    long iterations = 0;
    bool bland_engaged = false;  // Bland's rule ran at some point of the solve
};

struct SimplexOptions {
    long max_iterations = 100000;
    // Iterations without objective improvement before switching to Bland's
    // rule; Dantzig pricing resumes once the objective strictly improves.
    // A true cycle never improves, so it re-engages Bland within the window
    // and Bland's termination guarantee applies.
    int stall_window = 50;
    // Pivot allowance of the dual reoptimization pass on warm solves;
    // 0 picks 4*rows + 100. The pass hands over to the primal phases when
    // the allowance runs out, so the value only shifts work between the
    // two methods.
    long dual_pivot_cap = 0;
};

// Raised when the iteration cap is hit; a capped solve never reports a result.
class SimplexStalled : public std::runtime_error {
public:
    explicit SimplexStalled(long iterations)
        : std::runtime_error("simplex stalled: iteration cap reached after " +
                             std::to_string(iterations) + " iterations"),
          iterations(iterations) {}
    long iterations;
};

namespace detail {

template <class Scalar>
struct SimplexTolerances;

template <>
struct SimplexTolerances<double> {
    static constexpr bool exact = false;
    static double pivot() { return 1e-8; }
    static double feasibility() { return 1e-7; }
    static double optimality() { return 1e-9; }
};

template <>
struct SimplexTolerances<Rational> {
    static constexpr bool exact = true;
    static Rational pivot() { return Rational(0); }
    static Rational feasibility() { return Rational(0); }
    static Rational optimality() { return Rational(0); }
};

}  // namespace detail

// Bounded-variable primal simplex over a dense tableau. Phase 1 drives the
// composite infeasibility sum to zero without artificial columns; phase 2
// prices with Dantzig's rule, dropping to Bland's rule across stall
// stretches (the Rational instantiation uses Bland's rule throughout).
template <class Scalar>
class SimplexSolver {
public:
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    using Tol = detail::SimplexTolerances<Scalar>;

    explicit SimplexSolver(const LinearModel& model, int objective_index = 0,
                           SimplexOptions options = {})
        : opt_(options) {
        if (model.num_objectives() < 1)
            throw std::invalid_argument("lp_solve: model has no objective");
        if (objective_index < 0 || objective_index >= model.num_objectives())
            throw std::invalid_argument("lp_solve: objective index out of range");
        n_ = model.num_variables();
        m_ = model.num_constraints();
        total_ = n_ + m_;

        a_.setZero(m_, n_);
        b_.resize(m_);
        row_sense_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            const Constraint& c = model.constraint(i);
            for (const auto& [var, coef] : c.expr.terms()) a_(i, var) = scalar_from_double<Scalar>(coef);
            b_[i] = scalar_from_double<Scalar>(c.rhs - c.expr.constant());
            row_sense_[i] = c.sense;
        }

        const LinearExpr& obj = model.objective(objective_index);
        c_.setZero(n_);
        for (const auto& [var, coef] : obj.terms()) c_[var] = scalar_from_double<Scalar>(coef);
        obj_constant_ = scalar_from_double<Scalar>(obj.constant());

        struct_lower_.resize(n_);
        struct_upper_.resize(n_);
        for (int j = 0; j < n_; ++j) {
            struct_lower_[j] = model.variable(j).lower;
            struct_upper_[j] = model.variable(j).upper;
        }
        model_lower_ = struct_lower_;
        model_upper_ = struct_upper_;
    }

    // Tightened bounds for subsequent solves (used by branch and bound);
    // the underlying model is untouched.
    void set_variable_bounds(int var, double lower, double upper) {
        struct_lower_[var] = lower;
        struct_upper_[var] = upper;
    }
    void reset_bounds() {
        struct_lower_ = model_lower_;
        struct_upper_ = model_upper_;
    }
    double variable_lower(int var) const { return struct_lower_[var]; }
    double variable_upper(int var) const { return struct_upper_[var]; }

    // `warm` reuses the final basis of the previous solve on this object
    // (valid after bound changes; phase 1 repairs any violated basics).
    // Bound changes keep the old basis dual feasible, so warm solves first
    // run a dual reoptimization pass that repairs primal feasibility in few
    // pivots; the primal phases that follow then mostly just certify
    // optimality. Warm solves fall back to a cold start periodically to
    // shed float drift, and whenever no usable basis exists yet.
    LpResult<Scalar> solve(bool warm = false) {
        if (warm && prepared_ && pivots_since_cold_ < kColdRestartPivots) {
            warm_prepare();
            if constexpr (!Tol::exact) dual_reoptimize();
        } else {
            prepare();
        }
        LpResult<Scalar> res;
        if (!phase_one()) {
            res.status = LpStatus::Infeasible;
            res.iterations = iterations_;
            res.bland_engaged = bland_ever_;
            return res;
        }
        const LpStatus st = phase_two();
        res.status = st;
        res.iterations = iterations_;
        res.bland_engaged = bland_ever_;
        if (st != LpStatus::Optimal) return res;

        if constexpr (!Tol::exact) refresh_reduced_costs();  // shed z-row drift
        compute_beta();
        res.x.resize(n_);
        for (int j = 0; j < n_; ++j) {
            Scalar v = current_value(j);
            if constexpr (!Tol::exact) {
                if (lower_finite_[j] && v < lower_[j]) v = lower_[j];
                if (upper_finite_[j] && v > upper_[j]) v = upper_[j];
            }
            res.x[j] = v;
        }
        res.objective = obj_constant_;
        for (int j = 0; j < n_; ++j)
            if (!(c_[j] == Scalar(0))) res.objective += c_[j] * res.x[j];

        res.reduced_costs = z_.head(n_).transpose();
        res.duals.resize(m_);
        for (int i = 0; i < m_; ++i) res.duals[i] = -z_[n_ + i];
        res.dual_objective = obj_constant_;
        for (int i = 0; i < m_; ++i) res.dual_objective += res.duals[i] * b_[i];
        for (int j = 0; j < total_; ++j)
            if (vstat_[j] != Status::Basic && !(z_[j] == Scalar(0)) && !(nbval_[j] == Scalar(0)))
                res.dual_objective += z_[j] * nbval_[j];
        return res;
    }

private:
    enum class Status : char { Basic, AtLower, AtUpper, Free };

    void prepare() {
        lower_.resize(total_);
        upper_.resize(total_);
        lower_finite_.assign(total_, false);
        upper_finite_.assign(total_, false);
        for (int j = 0; j < n_; ++j) {
            lower_finite_[j] = std::isfinite(struct_lower_[j]);
            upper_finite_[j] = std::isfinite(struct_upper_[j]);
            lower_[j] = lower_finite_[j] ? scalar_from_double<Scalar>(struct_lower_[j]) : Scalar(0);
            upper_[j] = upper_finite_[j] ? scalar_from_double<Scalar>(struct_upper_[j]) : Scalar(0);
        }
        for (int i = 0; i < m_; ++i) {
            const int j = n_ + i;
            switch (row_sense_[i]) {
                case Sense::LessEqual:  // a.x + s = b, s >= 0
                    lower_finite_[j] = true;
                    lower_[j] = Scalar(0);
                    break;
                case Sense::GreaterEqual:  // s <= 0
                    upper_finite_[j] = true;
                    upper_[j] = Scalar(0);
                    break;
                case Sense::Equal:
                    lower_finite_[j] = upper_finite_[j] = true;
                    lower_[j] = upper_[j] = Scalar(0);
                    break;
            }
        }

        tab_.resize(m_, total_);
        tab_.setZero();
        tab_.leftCols(n_) = a_;
        for (int i = 0; i < m_; ++i) tab_(i, n_ + i) = Scalar(1);
        binv_b_ = b_;

        basis_.resize(m_);
        vstat_.assign(total_, Status::AtLower);
        nbval_.assign(total_, Scalar(0));
        for (int j = 0; j < n_; ++j) {
            if (lower_finite_[j]) {
                vstat_[j] = Status::AtLower;
                nbval_[j] = lower_[j];
            } else if (upper_finite_[j]) {
                vstat_[j] = Status::AtUpper;
                nbval_[j] = upper_[j];
            } else {
                vstat_[j] = Status::Free;
                nbval_[j] = Scalar(0);
            }
        }
        for (int i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
            vstat_[n_ + i] = Status::Basic;
        }

        reset_counters();
        beta_.resize(m_);
        z_.setZero(total_);
        prepared_ = true;
        pivots_since_cold_ = 0;
    }

    // Keeps the tableau and basis (both independent of variable bounds) and
    // only refreshes the bound arrays and nonbasic resting values.
    void warm_prepare() {
        for (int j = 0; j < n_; ++j) {
            lower_finite_[j] = std::isfinite(struct_lower_[j]);
            upper_finite_[j] = std::isfinite(struct_upper_[j]);
            lower_[j] = lower_finite_[j] ? scalar_from_double<Scalar>(struct_lower_[j]) : Scalar(0);
            upper_[j] = upper_finite_[j] ? scalar_from_double<Scalar>(struct_upper_[j]) : Scalar(0);
        }
        for (int j = 0; j < total_; ++j) {
            if (vstat_[j] == Status::Basic) continue;
            // snap each nonbasic variable to a bound inside its new box,
            // staying on its previous side when that bound still exists
            const bool prefer_upper = vstat_[j] == Status::AtUpper;
            if (prefer_upper && upper_finite_[j]) {
                nbval_[j] = upper_[j];
            } else if (lower_finite_[j]) {
                vstat_[j] = Status::AtLower;
                nbval_[j] = lower_[j];
            } else if (upper_finite_[j]) {
                vstat_[j] = Status::AtUpper;
                nbval_[j] = upper_[j];
            } else {
                vstat_[j] = Status::Free;
                nbval_[j] = Scalar(0);
            }
        }
        reset_counters();
    }

    void reset_counters() {
        iterations_ = 0;
        bland_ = Tol::exact;  // the exact flavor runs Bland's rule throughout
        bland_ever_ = bland_;
        stall_count_ = 0;
        have_stall_ref_ = false;
        pivots_since_refresh_ = 0;
    }

    Scalar current_value(int j) const {
        if (vstat_[j] == Status::Basic) {
            // position in basis: scan (m is small relative to pivot cost)
            for (int i = 0; i < m_; ++i)
                if (basis_[i] == j) return beta_[i];
        }
        return nbval_[j];
    }

    void compute_beta() {
        beta_ = binv_b_;
        for (int j = 0; j < total_; ++j) {
            if (vstat_[j] == Status::Basic || nbval_[j] == Scalar(0)) continue;
            const Scalar v = nbval_[j];
            for (int i = 0; i < m_; ++i)
                if (!(tab_(i, j) == Scalar(0))) beta_[i] -= tab_(i, j) * v;
        }
    }

    void note_progress(double measured) {
        if constexpr (Tol::exact) return;  // the exact flavor stays on Bland's rule
        if (have_stall_ref_ && measured >= stall_ref_ - 1e-12 * (1.0 + std::abs(stall_ref_))) {
            if (++stall_count_ > opt_.stall_window) {
                bland_ = true;
                bland_ever_ = true;
            }
        } else {
            stall_count_ = 0;
            stall_ref_ = measured;
            have_stall_ref_ = true;
            bland_ = false;  // progress resumed: back to Dantzig pricing
        }
    }

    void count_iteration() {
        if (++iterations_ > opt_.max_iterations) throw SimplexStalled(iterations_);
    }

    struct RatioHit {
        bool found = false;
        Scalar step{};
        int row = -1;        // -1 means the entering variable's own bound flip
        int block_var = -1;
        bool to_upper = false;  // bound the leaving variable lands on
        Scalar alpha_abs{};
    };

    void consider(RatioHit& best, Scalar step, int row, int block_var, bool to_upper,
                  Scalar alpha_abs) {
        if (step < Scalar(0)) step = Scalar(0);
        if (!best.found || step < best.step) {
            best = RatioHit{true, step, row, block_var, to_upper, alpha_abs};
            return;
        }
        if (!(step == best.step)) return;
        if (bland_) {
            if (block_var < best.block_var)
                best = RatioHit{true, step, row, block_var, to_upper, alpha_abs};
        } else {
            if (alpha_abs > best.alpha_abs ||
                (alpha_abs == best.alpha_abs && block_var < best.block_var))
                best = RatioHit{true, step, row, block_var, to_upper, alpha_abs};
        }
    }

    // Shared ratio test. In phase 1 rows currently below/above their bound
    // block at the violated bound; feasible rows block as usual.
    RatioHit ratio_test(int enter, int dir, const std::vector<signed char>& infeas) {
        const Scalar ztol = Tol::pivot();
        RatioHit best;
        for (int i = 0; i < m_; ++i) {
            const Scalar alpha = tab_(i, enter);
            if (alpha == Scalar(0)) continue;
            Scalar rate = (dir > 0) ? -alpha : alpha;  // d beta_i / d step
            const Scalar rate_abs = rate < Scalar(0) ? -rate : rate;
            if (!(rate_abs > ztol)) continue;
            const int bv = basis_[i];
            const Scalar alpha_abs = alpha < Scalar(0) ? -alpha : alpha;
            const signed char inf = infeas.empty() ? 0 : infeas[i];
            if (inf < 0) {  // below lower bound
                if (rate > Scalar(0))
                    consider(best, (lower_[bv] - beta_[i]) / rate, i, bv, false, alpha_abs);
            } else if (inf > 0) {  // above upper bound
                if (rate < Scalar(0))
                    consider(best, (beta_[i] - upper_[bv]) / (-rate), i, bv, true, alpha_abs);
            } else {
                if (rate < Scalar(0) && lower_finite_[bv])
                    consider(best, (beta_[i] - lower_[bv]) / (-rate), i, bv, false, alpha_abs);
                else if (rate > Scalar(0) && upper_finite_[bv])
                    consider(best, (upper_[bv] - beta_[i]) / rate, i, bv, true, alpha_abs);
            }
        }
        // Entering variable's own opposite bound.
        if (lower_finite_[enter] && upper_finite_[enter])
            consider(best, upper_[enter] - lower_[enter], -1, enter, dir > 0, Scalar(1));
        return best;
    }

    void pivot(int row, int enter, bool leaving_to_upper) {
        const int leave = basis_[row];
        const Scalar piv = tab_(row, enter);
        tab_.row(row) /= piv;
        binv_b_[row] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == row) continue;
            const Scalar f = tab_(i, enter);
            if (f == Scalar(0)) continue;
            tab_.row(i) -= f * tab_.row(row);
            binv_b_[i] -= f * binv_b_[row];
        }
        if (phase2_) {
            const Scalar zq = z_[enter];
            if (!(zq == Scalar(0))) z_ -= zq * tab_.row(row);
        }
        basis_[row] = enter;
        vstat_[enter] = Status::Basic;
        nbval_[enter] = Scalar(0);
        vstat_[leave] = leaving_to_upper ? Status::AtUpper : Status::AtLower;
        nbval_[leave] = leaving_to_upper ? upper_[leave] : lower_[leave];
        ++pivots_since_refresh_;
        ++pivots_since_cold_;
    }

    void apply_flip(int enter) {
        if (vstat_[enter] == Status::AtLower) {
            vstat_[enter] = Status::AtUpper;
            nbval_[enter] = upper_[enter];
        } else {
            vstat_[enter] = Status::AtLower;
            nbval_[enter] = lower_[enter];
        }
    }

    bool fixed_var(int j) const {
        return lower_finite_[j] && upper_finite_[j] && lower_[j] == upper_[j];
    }

    // Drives the infeasibility sum to zero; false means the model is infeasible.
    bool phase_one() {
        phase2_ = false;
        const Scalar ftol = Tol::feasibility();
        const Scalar otol = Tol::optimality();
        std::vector<signed char> infeas(m_, 0);
        RowVec d(total_);
        while (true) {
            compute_beta();
            bool any = false;
            Scalar phi(0);
            for (int i = 0; i < m_; ++i) {
                const int bv = basis_[i];
                infeas[i] = 0;
                if (lower_finite_[bv] && beta_[i] < lower_[bv] - ftol) {
                    infeas[i] = -1;
                    phi += lower_[bv] - beta_[i];
                    any = true;
                } else if (upper_finite_[bv] && beta_[i] > upper_[bv] + ftol) {
                    infeas[i] = 1;
                    phi += beta_[i] - upper_[bv];
                    any = true;
                }
            }
            if (!any) return true;
            count_iteration();
            note_progress(to_double(phi));

            d.setZero();
            for (int i = 0; i < m_; ++i) {
                if (infeas[i] < 0)
                    d += tab_.row(i);
                else if (infeas[i] > 0)
                    d -= tab_.row(i);
            }
            int enter = -1, dir = 0;
            Scalar best_mag(0);
            for (int j = 0; j < total_; ++j) {
                if (vstat_[j] == Status::Basic || fixed_var(j)) continue;
                int cand_dir = 0;
                if ((vstat_[j] == Status::AtLower || vstat_[j] == Status::Free) && d[j] < -otol)
                    cand_dir = 1;
                else if ((vstat_[j] == Status::AtUpper || vstat_[j] == Status::Free) && d[j] > otol)
                    cand_dir = -1;
                if (cand_dir == 0) continue;
                if (bland_) {
                    enter = j;
                    dir = cand_dir;
                    break;
                }
                const Scalar mag = d[j] < Scalar(0) ? -d[j] : d[j];
                if (mag > best_mag) {
                    best_mag = mag;
                    enter = j;
                    dir = cand_dir;
                }
            }
            if (enter < 0) return false;  // no improving direction left: infeasible

            const RatioHit hit = ratio_test(enter, dir, infeas);
            if (!hit.found)
                throw std::runtime_error("simplex: unbounded infeasibility ray (inconsistent state)");
            if (hit.row < 0)
                apply_flip(enter);
            else
                pivot(hit.row, enter, hit.to_upper);
        }
    }

    LpStatus phase_two() {
        phase2_ = true;
        const Scalar otol = Tol::optimality();
        refresh_reduced_costs();
        const std::vector<signed char> no_infeas;
        while (true) {
            compute_beta();
            count_iteration();
            note_progress(current_objective_estimate());
            if constexpr (!Tol::exact) {
                if (pivots_since_refresh_ >= 128) refresh_reduced_costs();
            }

            int enter = -1, dir = 0;
            Scalar best_mag(0);
            for (int j = 0; j < total_; ++j) {
                if (vstat_[j] == Status::Basic || fixed_var(j)) continue;
                int cand_dir = 0;
                if ((vstat_[j] == Status::AtLower || vstat_[j] == Status::Free) && z_[j] < -otol)
                    cand_dir = 1;
                else if ((vstat_[j] == Status::AtUpper || vstat_[j] == Status::Free) && z_[j] > otol)
                    cand_dir = -1;
                if (cand_dir == 0) continue;
                if (bland_) {
                    enter = j;
                    dir = cand_dir;
                    break;
                }
                const Scalar mag = z_[j] < Scalar(0) ? -z_[j] : z_[j];
                if (mag > best_mag) {
                    best_mag = mag;
                    enter = j;
                    dir = cand_dir;
                }
            }
            if (enter < 0) return LpStatus::Optimal;

            const RatioHit hit = ratio_test(enter, dir, no_infeas);
            if (!hit.found) return LpStatus::Unbounded;
            if (hit.row < 0)
                apply_flip(enter);
            else
                pivot(hit.row, enter, hit.to_upper);
        }
    }

    void refresh_reduced_costs() {
        z_.setZero(total_);
        z_.head(n_) = c_.transpose();
        for (int i = 0; i < m_; ++i) {
            const int bv = basis_[i];
            const Scalar cb = bv < n_ ? c_[bv] : Scalar(0);
            if (!(cb == Scalar(0))) z_ -= cb * tab_.row(i);
        }
        pivots_since_refresh_ = 0;
    }

    // Best-effort dual simplex pass after bound changes: picks the most
    // bound-violating basic row, enters the column with the smallest
    // |z|/|alpha| dual ratio among those that move the row back inside its
    // bounds, and pivots. Every pivot keeps the tableau invariants, so
    // stopping at the pivot cap (or on a row with no eligible column, which
    // the primal phases then diagnose) is always safe — the primal phases
    // simply continue from wherever this pass got to.
    void dual_reoptimize() {
        const Scalar ztol = Tol::pivot();
        const Scalar ftol = Tol::feasibility();
        refresh_reduced_costs();
        phase2_ = true;  // keep z_ current across these pivots
        const long cap = opt_.dual_pivot_cap > 0 ? opt_.dual_pivot_cap : 4L * m_ + 100;
        for (long iter = 0; iter < cap; ++iter) {
            compute_beta();
            int row = -1;
            bool below = false;
            Scalar worst = ftol;
            for (int i = 0; i < m_; ++i) {
                const int bv = basis_[i];
                if (lower_finite_[bv] && lower_[bv] - beta_[i] > worst) {
                    worst = lower_[bv] - beta_[i];
                    row = i;
                    below = true;
                } else if (upper_finite_[bv] && beta_[i] - upper_[bv] > worst) {
                    worst = beta_[i] - upper_[bv];
                    row = i;
                    below = false;
                }
            }
            if (row < 0) return;  // primal feasible again

            // Entering candidates must push the violated row toward its
            // bound: d beta_row / d x_j = -alpha_j for a variable moving up
            // from its lower bound, +alpha_j moving down from its upper.
            int enter = -1;
            Scalar best_ratio(0), best_alpha(0);
            for (int j = 0; j < total_; ++j) {
                if (vstat_[j] == Status::Basic || fixed_var(j)) continue;
                const Scalar alpha = tab_(row, j);
                const Scalar alpha_abs = alpha < Scalar(0) ? -alpha : alpha;
                if (!(alpha_abs > ztol)) continue;
                const bool up = vstat_[j] == Status::AtLower ||
                                (vstat_[j] == Status::Free && (below ? alpha < Scalar(0)
                                                                     : alpha > Scalar(0)));
                const bool eligible = below ? (up ? alpha < Scalar(0) : alpha > Scalar(0))
                                            : (up ? alpha > Scalar(0) : alpha < Scalar(0));
                if (!eligible) continue;
                const Scalar zj = z_[j] < Scalar(0) ? -z_[j] : z_[j];
                const Scalar ratio = zj / alpha_abs;
                if (enter < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && alpha_abs > best_alpha)) {
                    enter = j;
                    best_ratio = ratio;
                    best_alpha = alpha_abs;
                }
            }
            if (enter < 0) return;  // no eligible column: leave it to phase 1
            count_iteration();
            pivot(row, enter, /*leaving_to_upper=*/!below);
        }
    }

    double current_objective_estimate() const {
        double v = to_double(obj_constant_);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) v += to_double(c_[basis_[i]]) * to_double(beta_[i]);
        for (int j = 0; j < n_; ++j)
            if (vstat_[j] != Status::Basic && !(c_[j] == Scalar(0)))
                v += to_double(c_[j]) * to_double(nbval_[j]);
        return v;
    }

    SimplexOptions opt_;
    int n_ = 0, m_ = 0, total_ = 0;
    Mat a_;
    Vec b_;
    std::vector<Sense> row_sense_;
    Vec c_;
    Scalar obj_constant_{};
    std::vector<double> struct_lower_, struct_upper_;
    std::vector<double> model_lower_, model_upper_;

    // per-solve state
    Mat tab_;
    Vec binv_b_, beta_;
    RowVec z_;
    Vec lower_, upper_;
    std::vector<bool> lower_finite_, upper_finite_;
    std::vector<int> basis_;
    std::vector<Status> vstat_;
    std::vector<Scalar> nbval_;
    long iterations_ = 0;
    bool bland_ = false;
    bool bland_ever_ = false;
    bool phase2_ = false;
    int stall_count_ = 0;
    double stall_ref_ = 0.0;
    bool have_stall_ref_ = false;
    int pivots_since_refresh_ = 0;
    bool prepared_ = false;
    long pivots_since_cold_ = 0;
    static constexpr long kColdRestartPivots = 20000;
};

// Solves the model's first objective (integrality ignored).
template <class Scalar>
LpResult<Scalar> lp_solve(const LinearModel& model, const SimplexOptions& options = {}) {
    return SimplexSolver<Scalar>(model, 0, options).solve();
}

}  // namespace clscnd
