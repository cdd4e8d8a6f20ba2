#pragma once

#include <Eigen/Core>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace clscnd {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Coefficients with magnitude below this are dropped when an expression is
// compressed; generated data can carry this kind of noise.
inline constexpr double kCoefficientDropTol = 1e-15;

struct Variable {
    std::string name;
    double lower = 0.0;
    double upper = kInfinity;
    bool integral = false;
};

// Sparse linear expression: unique (variable, coefficient) terms kept sorted
// by variable id, plus a constant. The sorted-unique invariant is maintained
// on every add so instances are safe to share read-only.
class LinearExpr {
public:
    void add_term(int var, double coef);
    void add_constant(double c) { constant_ += c; }
    void add_scaled(const LinearExpr& other, double factor);
    void scale(double factor);
    // Drops terms with |coef| < kCoefficientDropTol.
    void compress();

    const std::vector<std::pair<int, double>>& terms() const { return terms_; }
    double constant() const { return constant_; }
    double coefficient(int var) const;

    template <class Derived>
    double value_at(const Eigen::MatrixBase<Derived>& x) const {
        double v = constant_;
        for (const auto& [var, coef] : terms_) v += coef * static_cast<double>(x[var]);
        return v;
    }

private:
    std::vector<std::pair<int, double>> terms_;
    double constant_ = 0.0;
};

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Constraint {
    LinearExpr expr;
    Sense sense = Sense::LessEqual;
    double rhs = 0.0;
    std::string tag;     // e.g. "c4[2]" for constraint family 4, entity 2
    int family = 0;      // 1..12 for the model's named families, 0 otherwise
    int entity = -1;
};

// Amount by which x violates the constraint (0 when satisfied).
double constraint_violation(const Constraint& c, const Eigen::VectorXd& x);

// Solver-agnostic LP/MILP container: variables with bounds and integrality,
// linear constraints, and an ordered list of minimized objectives.
class LinearModel {
public:
    int add_variable(std::string name, double lower, double upper, bool integral);
    void add_constraint(Constraint c);
    void add_objective(LinearExpr e);

    int num_variables() const { return static_cast<int>(vars_.size()); }
    int num_constraints() const { return static_cast<int>(cons_.size()); }
    int num_objectives() const { return static_cast<int>(objectives_.size()); }

    const std::vector<Variable>& variables() const { return vars_; }
    const Variable& variable(int id) const { return vars_[id]; }
    const std::vector<Constraint>& constraints() const { return cons_; }
    const Constraint& constraint(int i) const { return cons_[i]; }
    const std::vector<LinearExpr>& objectives() const { return objectives_; }
    const LinearExpr& objective(int i) const { return objectives_[i]; }

    // Id for a semantic name such as "X[2][5][1]"; throws if unknown.
    int var_id(const std::string& name) const;
    bool has_var(const std::string& name) const { return index_.count(name) > 0; }

    // Ids of integral variables, ascending.
    std::vector<int> integral_variables() const;

    void set_variable_bounds(int id, double lower, double upper);
    void set_integral(int id, bool integral) { vars_[id].integral = integral; }

private:
    std::vector<Variable> vars_;
    std::vector<Constraint> cons_;
    std::vector<LinearExpr> objectives_;
    std::unordered_map<std::string, int> index_;
};

// Pure-LP copy with every integral variable pinned to its assigned value via
// equal bounds. `assignment` covers exactly the integral variables in
// ascending id order; values must be 0 or 1.
LinearModel fix_binaries(const LinearModel& model, const std::vector<int>& assignment);

}  // namespace clscnd
