#include "clscnd/lp_export.hpp"

#include <cmath>
#include <stdexcept>

#include "clscnd/json_io.hpp"

namespace clscnd {
namespace {

std::string sanitize(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (const char c : name) {
        if (c == '[') out.push_back('_');
        else if (c != ']') out.push_back(c);
    }
    return out;
}

// " + 3 x" / " - 3 x" sign-separated term chain; the first term carries no
// leading space-plus.
void append_terms(std::string& out, const LinearExpr& expr,
                  const std::vector<Variable>& vars) {
    bool first = true;
    for (const auto& [var, coef] : expr.terms()) {
        if (first) {
            if (coef < 0) out += "- ";
            first = false;
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        out += format_double(std::abs(coef));
        out += ' ';
        out += sanitize(vars[static_cast<std::size_t>(var)].name);
    }
    if (expr.constant() != 0.0 || first) {
        if (!first) out += expr.constant() < 0 ? " - " : " + ";
        else if (expr.constant() < 0) out += "- ";
        out += format_double(std::abs(expr.constant()));
    }
}

}  // namespace

std::string write_lp(const LinearModel& model, int objective_index) {
    if (objective_index < 0 || objective_index >= model.num_objectives())
        throw std::invalid_argument("write_lp: objective index out of range");

    std::string out = "\\ linear model export\nMinimize\n obj: ";
    append_terms(out, model.objective(objective_index), model.variables());
    out += "\nSubject To\n";
    for (int i = 0; i < model.num_constraints(); ++i) {
        const Constraint& c = model.constraint(i);
        out += ' ';
        out += c.tag.empty() ? "r" + std::to_string(i) : sanitize(c.tag);
        out += ": ";
        // Move the expression constant to the right-hand side.
        LinearExpr lhs = c.expr;
        const double rhs = c.rhs - lhs.constant();
        lhs.add_constant(-lhs.constant());
        append_terms(out, lhs, model.variables());
        switch (c.sense) {
            case Sense::LessEqual: out += " <= "; break;
            case Sense::GreaterEqual: out += " >= "; break;
            case Sense::Equal: out += " = "; break;
        }
        out += format_double(rhs);
        out += '\n';
    }
    out += "Bounds\n";
    for (const Variable& v : model.variables()) {
        const bool lo_inf = std::isinf(v.lower), hi_inf = std::isinf(v.upper);
        if (v.lower == 0.0 && hi_inf) continue;  // LP default bound
        out += ' ';
        if (lo_inf && hi_inf) {
            out += sanitize(v.name) + " free";
        } else if (hi_inf) {
            out += sanitize(v.name) + " >= " + format_double(v.lower);
        } else {
            out += format_double(v.lower) + " <= " + sanitize(v.name) + " <= " +
                   format_double(v.upper);
        }
        out += '\n';
    }
    bool any_binary = false;
    for (const Variable& v : model.variables())
        if (v.integral) {
            if (!any_binary) out += "Binaries\n";
            any_binary = true;
            out += ' ';
            out += sanitize(v.name);
            out += '\n';
        }
    out += "End\n";
    return out;
}

}  // namespace clscnd
