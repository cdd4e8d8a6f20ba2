#include "clscnd/model_build.hpp"

#include <cmath>
#include <string>

namespace clscnd {

namespace {

std::string idx(int a) { return "[" + std::to_string(a) + "]"; }

}  // namespace

ModelLayout ModelLayout::from(const EchelonSizes& z) {
    ModelLayout L;
    L.sz = z;
    L.p0 = 0;
    L.w0 = L.p0 + z.plants;
    L.c0 = L.w0 + z.dist_centers;
    L.d0 = L.c0 + z.recycles;
    L.x0 = L.d0 + z.disposals;
    L.y0 = L.x0 + z.plants * z.dist_centers * z.modes;
    L.z0 = L.y0 + z.dist_centers * z.customers * z.modes;
    L.rm0 = L.z0 + z.customers * z.dist_centers * z.modes;
    L.rc0 = L.rm0 + z.dist_centers * z.plants * z.modes;
    L.ds0 = L.rc0 + z.dist_centers * z.recycles * z.modes;
    L.total = L.ds0 + z.dist_centers * z.disposals * z.modes;
    return L;
}

LinearModel build_model(const Instance& inst) {
    inst.validate();
    const EchelonSizes& z = inst.sizes;
    const ModelLayout L = ModelLayout::from(z);
    LinearModel model;

    auto add_binary = [&model](const std::string& name) {
        model.add_variable(name, 0.0, 1.0, true);
    };
    auto add_flow = [&model](const std::string& name) {
        model.add_variable(name, 0.0, kInfinity, false);
    };

    for (int i = 0; i < z.plants; ++i) add_binary("P" + idx(i));
    for (int j = 0; j < z.dist_centers; ++j) add_binary("W" + idx(j));
    for (int r = 0; r < z.recycles; ++r) add_binary("C" + idx(r));
    for (int s = 0; s < z.disposals; ++s) add_binary("D" + idx(s));

    for (int i = 0; i < z.plants; ++i)
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) add_flow("X" + idx(i) + idx(j) + idx(t));
    for (int j = 0; j < z.dist_centers; ++j)
        for (int k = 0; k < z.customers; ++k)
            for (int t = 0; t < z.modes; ++t) add_flow("Y" + idx(j) + idx(k) + idx(t));
    for (int k = 0; k < z.customers; ++k)
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) add_flow("Z" + idx(k) + idx(j) + idx(t));
    for (int j = 0; j < z.dist_centers; ++j)
        for (int i = 0; i < z.plants; ++i)
            for (int t = 0; t < z.modes; ++t) add_flow("RM" + idx(j) + idx(i) + idx(t));
    for (int j = 0; j < z.dist_centers; ++j)
        for (int r = 0; r < z.recycles; ++r)
            for (int t = 0; t < z.modes; ++t) add_flow("RC" + idx(j) + idx(r) + idx(t));
    for (int j = 0; j < z.dist_centers; ++j)
        for (int s = 0; s < z.disposals; ++s)
            for (int t = 0; t < z.modes; ++t) add_flow("DS" + idx(j) + idx(s) + idx(t));

    // --- objectives ---------------------------------------------------
    LinearExpr economic, environmental, social;
    const Eigen::Vector4d& th = inst.risk_weights;
    auto facility_weight = [&th](const FacilityRiskCounts& r, int a) {
        return th[0] * r.accident[a] + th[1] * r.psychosocial[a] + th[2] * r.physical[a] +
               th[3] * r.mental_overload[a];
    };
    auto arc_weight = [&th](const ArcRiskCounts& r, int t, int a, int b) {
        return th[0] * r.accident[t](a, b) + th[1] * r.psychosocial[t](a, b) +
               th[2] * r.physical[t](a, b) + th[3] * r.mental_overload[t](a, b);
    };

    for (int i = 0; i < z.plants; ++i) {
        economic.add_term(L.P(i), inst.fixed_cost_plant[i]);
        environmental.add_term(L.P(i), inst.emission_plant[i]);
        social.add_term(L.P(i), facility_weight(inst.risk_plant, i));
    }
    for (int j = 0; j < z.dist_centers; ++j) {
        economic.add_term(L.W(j), inst.fixed_cost_dc[j]);
        environmental.add_term(L.W(j), inst.emission_dc[j]);
        social.add_term(L.W(j), facility_weight(inst.risk_dc, j));
    }
    for (int r = 0; r < z.recycles; ++r) {
        economic.add_term(L.C(r), inst.fixed_cost_recycle[r]);
        environmental.add_term(L.C(r), inst.emission_recycle[r]);
        social.add_term(L.C(r), facility_weight(inst.risk_recycle, r));
    }
    for (int s = 0; s < z.disposals; ++s) {
        economic.add_term(L.D(s), inst.fixed_cost_disposal[s]);
        environmental.add_term(L.D(s), inst.emission_disposal[s]);
        social.add_term(L.D(s), facility_weight(inst.risk_disposal, s));
    }

    // Per-arc objective rows share one iteration pattern; `id` resolves the
    // flow variable for (row a, col b, mode t) within the arc family.
    auto add_arc_terms = [&](const ModeMatrices& cost, const ModeMatrices& emis,
                             const ArcRiskCounts& risk, auto id) {
        const int rows = static_cast<int>(cost[0].rows());
        const int cols = static_cast<int>(cost[0].cols());
        for (int a = 0; a < rows; ++a)
            for (int b = 0; b < cols; ++b)
                for (int t = 0; t < z.modes; ++t) {
                    const int v = id(a, b, t);
                    economic.add_term(v, cost[t](a, b));
                    environmental.add_term(v, emis[t](a, b));
                    social.add_term(v, arc_weight(risk, t, a, b));
                }
    };
    add_arc_terms(inst.cost_plant_dc, inst.emission_plant_dc, inst.risk_plant_dc,
                  [&L](int a, int b, int t) { return L.X(a, b, t); });
    add_arc_terms(inst.cost_dc_customer, inst.emission_dc_customer, inst.risk_dc_customer,
                  [&L](int a, int b, int t) { return L.Y(a, b, t); });
    add_arc_terms(inst.cost_customer_dc, inst.emission_customer_dc, inst.risk_customer_dc,
                  [&L](int a, int b, int t) { return L.Z(a, b, t); });
    add_arc_terms(inst.cost_dc_plant, inst.emission_dc_plant, inst.risk_dc_plant,
                  [&L](int a, int b, int t) { return L.RM(a, b, t); });
    add_arc_terms(inst.cost_dc_recycle, inst.emission_dc_recycle, inst.risk_dc_recycle,
                  [&L](int a, int b, int t) { return L.RC(a, b, t); });
    add_arc_terms(inst.cost_dc_disposal, inst.emission_dc_disposal, inst.risk_dc_disposal,
                  [&L](int a, int b, int t) { return L.DS(a, b, t); });

    economic.compress();
    environmental.compress();
    social.compress();
    model.add_objective(std::move(economic));
    model.add_objective(std::move(environmental));
    model.add_objective(std::move(social));

    // --- constraint families (1)-(12) ---------------------------------
    auto add_row = [&model](LinearExpr expr, Sense sense, double rhs, int family, int entity,
                            const std::string& tag) {
        expr.compress();
        Constraint c;
        c.expr = std::move(expr);
        c.sense = sense;
        c.rhs = rhs;
        c.tag = tag;
        c.family = family;
        c.entity = entity;
        model.add_constraint(std::move(c));
    };

    const double alpha = inst.return_fraction;
    const double beta = inst.reuse_fraction;
    const double delta = inst.recycle_fraction;

    for (int k = 0; k < z.customers; ++k) {
        LinearExpr e;
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.Y(j, k, t), 1.0);
        add_row(std::move(e), Sense::GreaterEqual, inst.demand[k], 1, k, "c1" + idx(k));
    }
    for (int j = 0; j < z.dist_centers; ++j) {
        LinearExpr e;
        for (int i = 0; i < z.plants; ++i)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.X(i, j, t), 1.0);
        for (int k = 0; k < z.customers; ++k)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.Y(j, k, t), -1.0);
        add_row(std::move(e), Sense::GreaterEqual, 0.0, 2, j, "c2" + idx(j));
    }
    for (int i = 0; i < z.plants; ++i) {
        LinearExpr e;
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.X(i, j, t), 1.0);
        e.add_term(L.P(i), -inst.cap_manufacturing[i]);
        add_row(std::move(e), Sense::LessEqual, 0.0, 3, i, "c3" + idx(i));
    }
    for (int j = 0; j < z.dist_centers; ++j) {
        LinearExpr e;
        for (int k = 0; k < z.customers; ++k)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.Y(j, k, t), 1.0);
        e.add_term(L.W(j), -inst.cap_dc_forward[j]);
        add_row(std::move(e), Sense::LessEqual, 0.0, 4, j, "c4" + idx(j));
    }
    for (int k = 0; k < z.customers; ++k) {
        LinearExpr e;
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.Z(k, j, t), 1.0);
        add_row(std::move(e), Sense::GreaterEqual, alpha * inst.demand[k], 5, k, "c5" + idx(k));
    }
    for (int j = 0; j < z.dist_centers; ++j) {
        LinearExpr e;
        for (int k = 0; k < z.customers; ++k)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.Z(k, j, t), 1.0);
        e.add_term(L.W(j), -inst.cap_dc_reverse[j]);
        add_row(std::move(e), Sense::LessEqual, 0.0, 6, j, "c6" + idx(j));
    }
    for (int j = 0; j < z.dist_centers; ++j) {
        LinearExpr e;
        for (int i = 0; i < z.plants; ++i)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.RM(j, i, t), 1.0);
        for (int k = 0; k < z.customers; ++k)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.Z(k, j, t), -beta);
        add_row(std::move(e), Sense::GreaterEqual, 0.0, 7, j, "c7" + idx(j));
    }
    for (int i = 0; i < z.plants; ++i) {
        LinearExpr e;
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.RM(j, i, t), 1.0);
        e.add_term(L.P(i), -inst.cap_remanufacturing[i]);
        add_row(std::move(e), Sense::LessEqual, 0.0, 8, i, "c8" + idx(i));
    }
    for (int j = 0; j < z.dist_centers; ++j) {
        LinearExpr e;
        for (int r = 0; r < z.recycles; ++r)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.RC(j, r, t), 1.0);
        for (int k = 0; k < z.customers; ++k)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.Z(k, j, t), -delta);
        add_row(std::move(e), Sense::GreaterEqual, 0.0, 9, j, "c9" + idx(j));
    }
    for (int r = 0; r < z.recycles; ++r) {
        LinearExpr e;
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.RC(j, r, t), 1.0);
        e.add_term(L.C(r), -inst.cap_recycle[r]);
        add_row(std::move(e), Sense::LessEqual, 0.0, 10, r, "c10" + idx(r));
    }
    for (int j = 0; j < z.dist_centers; ++j) {
        LinearExpr e;
        for (int s = 0; s < z.disposals; ++s)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.DS(j, s, t), 1.0);
        for (int k = 0; k < z.customers; ++k)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.Z(k, j, t), -(1.0 - beta - delta));
        add_row(std::move(e), Sense::GreaterEqual, 0.0, 11, j, "c11" + idx(j));
    }
    for (int s = 0; s < z.disposals; ++s) {
        LinearExpr e;
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) e.add_term(L.DS(j, s, t), 1.0);
        e.add_term(L.D(s), -inst.cap_disposal[s]);
        add_row(std::move(e), Sense::LessEqual, 0.0, 12, s, "c12" + idx(s));
    }

    return model;
}

Solution extract_solution(const Instance& inst, const Eigen::VectorXd& values) {
    const EchelonSizes& z = inst.sizes;
    const ModelLayout L = ModelLayout::from(z);
    if (values.size() != L.total)
        throw std::invalid_argument("extract_solution: expected " + std::to_string(L.total) +
                                    " values, got " + std::to_string(values.size()));
    Solution s = zero_solution(z);
    for (int i = 0; i < z.plants; ++i) s.open_plant[i] = static_cast<int>(std::lround(values[L.P(i)]));
    for (int j = 0; j < z.dist_centers; ++j)
        s.open_dc[j] = static_cast<int>(std::lround(values[L.W(j)]));
    for (int r = 0; r < z.recycles; ++r)
        s.open_recycle[r] = static_cast<int>(std::lround(values[L.C(r)]));
    for (int d = 0; d < z.disposals; ++d)
        s.open_disposal[d] = static_cast<int>(std::lround(values[L.D(d)]));
    for (int i = 0; i < z.plants; ++i)
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) s.flow_plant_dc[t](i, j) = values[L.X(i, j, t)];
    for (int j = 0; j < z.dist_centers; ++j)
        for (int k = 0; k < z.customers; ++k)
            for (int t = 0; t < z.modes; ++t) s.flow_dc_customer[t](j, k) = values[L.Y(j, k, t)];
    for (int k = 0; k < z.customers; ++k)
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) s.flow_customer_dc[t](k, j) = values[L.Z(k, j, t)];
    for (int j = 0; j < z.dist_centers; ++j)
        for (int i = 0; i < z.plants; ++i)
            for (int t = 0; t < z.modes; ++t) s.flow_dc_plant[t](j, i) = values[L.RM(j, i, t)];
    for (int j = 0; j < z.dist_centers; ++j)
        for (int r = 0; r < z.recycles; ++r)
            for (int t = 0; t < z.modes; ++t) s.flow_dc_recycle[t](j, r) = values[L.RC(j, r, t)];
    for (int j = 0; j < z.dist_centers; ++j)
        for (int d = 0; d < z.disposals; ++d)
            for (int t = 0; t < z.modes; ++t) s.flow_dc_disposal[t](j, d) = values[L.DS(j, d, t)];
    s.objectives = evaluate_objectives(inst, s);
    return s;
}

Eigen::VectorXd solution_values(const Instance& inst, const Solution& sol) {
    check_dimensions(inst, sol);
    const EchelonSizes& z = inst.sizes;
    const ModelLayout L = ModelLayout::from(z);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(L.total);
    for (int i = 0; i < z.plants; ++i) v[L.P(i)] = sol.open_plant[i];
    for (int j = 0; j < z.dist_centers; ++j) v[L.W(j)] = sol.open_dc[j];
    for (int r = 0; r < z.recycles; ++r) v[L.C(r)] = sol.open_recycle[r];
    for (int d = 0; d < z.disposals; ++d) v[L.D(d)] = sol.open_disposal[d];
    for (int i = 0; i < z.plants; ++i)
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) v[L.X(i, j, t)] = sol.flow_plant_dc[t](i, j);
    for (int j = 0; j < z.dist_centers; ++j)
        for (int k = 0; k < z.customers; ++k)
            for (int t = 0; t < z.modes; ++t) v[L.Y(j, k, t)] = sol.flow_dc_customer[t](j, k);
    for (int k = 0; k < z.customers; ++k)
        for (int j = 0; j < z.dist_centers; ++j)
            for (int t = 0; t < z.modes; ++t) v[L.Z(k, j, t)] = sol.flow_customer_dc[t](k, j);
    for (int j = 0; j < z.dist_centers; ++j)
        for (int i = 0; i < z.plants; ++i)
            for (int t = 0; t < z.modes; ++t) v[L.RM(j, i, t)] = sol.flow_dc_plant[t](j, i);
    for (int j = 0; j < z.dist_centers; ++j)
        for (int r = 0; r < z.recycles; ++r)
            for (int t = 0; t < z.modes; ++t) v[L.RC(j, r, t)] = sol.flow_dc_recycle[t](j, r);
    for (int j = 0; j < z.dist_centers; ++j)
        for (int d = 0; d < z.disposals; ++d)
            for (int t = 0; t < z.modes; ++t) v[L.DS(j, d, t)] = sol.flow_dc_disposal[t](j, d);
    return v;
}

}  // namespace clscnd
