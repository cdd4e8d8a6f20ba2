#include "clscnd/linear_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clscnd {

void LinearExpr::add_term(int var, double coef) {
    if (var < 0) throw std::invalid_argument("LinearExpr: negative variable id");
    if (!std::isfinite(coef)) throw std::invalid_argument("LinearExpr: non-finite coefficient");
    if (terms_.empty() || terms_.back().first < var) {
        terms_.emplace_back(var, coef);
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), var,
                               [](const auto& t, int v) { return t.first < v; });
    if (it != terms_.end() && it->first == var) {
        it->second += coef;
    } else {
        terms_.insert(it, {var, coef});
    }
}

void LinearExpr::add_scaled(const LinearExpr& other, double factor) {
    for (const auto& [var, coef] : other.terms_) add_term(var, factor * coef);
    constant_ += factor * other.constant_;
}

void LinearExpr::scale(double factor) {
    for (auto& [var, coef] : terms_) coef *= factor;
    constant_ *= factor;
}

void LinearExpr::compress() {
    std::erase_if(terms_, [](const auto& t) { return std::abs(t.second) < kCoefficientDropTol; });
}

double LinearExpr::coefficient(int var) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), var,
                               [](const auto& t, int v) { return t.first < v; });
    return (it != terms_.end() && it->first == var) ? it->second : 0.0;
}

double constraint_violation(const Constraint& c, const Eigen::VectorXd& x) {
    const double lhs = c.expr.value_at(x);
    switch (c.sense) {
        case Sense::LessEqual: return std::max(0.0, lhs - c.rhs);
        case Sense::GreaterEqual: return std::max(0.0, c.rhs - lhs);
        case Sense::Equal: return std::abs(lhs - c.rhs);
    }
    return 0.0;
}

int LinearModel::add_variable(std::string name, double lower, double upper, bool integral) {
    if (lower > upper) throw std::invalid_argument("variable '" + name + "': lower > upper");
    if (index_.count(name)) throw std::invalid_argument("duplicate variable name '" + name + "'");
    const int id = static_cast<int>(vars_.size());
    index_.emplace(name, id);
    vars_.push_back(Variable{std::move(name), lower, upper, integral});
    return id;
}

void LinearModel::add_constraint(Constraint c) {
    if (!std::isfinite(c.rhs)) throw std::invalid_argument("constraint rhs must be finite");
    for (const auto& [var, coef] : c.expr.terms()) {
        (void)coef;
        if (var >= num_variables()) throw std::invalid_argument("constraint references unknown variable");
    }
    cons_.push_back(std::move(c));
}

void LinearModel::add_objective(LinearExpr e) {
    for (const auto& [var, coef] : e.terms()) {
        (void)coef;
        if (var >= num_variables()) throw std::invalid_argument("objective references unknown variable");
    }
    objectives_.push_back(std::move(e));
}

int LinearModel::var_id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown variable '" + name + "'");
    return it->second;
}

std::vector<int> LinearModel::integral_variables() const {
    std::vector<int> ids;
    for (int i = 0; i < num_variables(); ++i)
        if (vars_[i].integral) ids.push_back(i);
    return ids;
}

void LinearModel::set_variable_bounds(int id, double lower, double upper) {
    if (lower > upper) throw std::invalid_argument("set_variable_bounds: lower > upper");
    vars_[id].lower = lower;
    vars_[id].upper = upper;
}

LinearModel fix_binaries(const LinearModel& model, const std::vector<int>& assignment) {
    const std::vector<int> ids = model.integral_variables();
    if (assignment.size() != ids.size())
        throw std::invalid_argument("fix_binaries: assignment length " + std::to_string(assignment.size()) +
                                    " does not match integral variable count " + std::to_string(ids.size()));
    LinearModel fixed = model;
    for (size_t k = 0; k < ids.size(); ++k) {
        const int v = assignment[k];
        if (v != 0 && v != 1) throw std::invalid_argument("fix_binaries: assignment values must be 0/1");
        fixed.set_variable_bounds(ids[k], v, v);
        fixed.set_integral(ids[k], false);
    }
    return fixed;
}

}  // namespace clscnd
