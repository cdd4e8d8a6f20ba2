#include <map>
#include <random>

#include "clscnd/feasibility.hpp"
#include "clscnd/model_build.hpp"
#include "clscnd/simplex.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace clscnd;
using namespace clscnd::testing;

namespace {

// Row-level feasibility of a raw assignment: every constraint row within
// `tol`, every variable within bounds, every integral variable integer.
bool rows_feasible(const LinearModel& m, const Eigen::VectorXd& v, double tol) {
    for (const auto& c : m.constraints())
        if (constraint_violation(c, v) > tol) return false;
    for (int i = 0; i < m.num_variables(); ++i) {
        const Variable& var = m.variable(i);
        if (v[i] < var.lower - tol || v[i] > var.upper + tol) return false;
        if (var.integral && std::abs(v[i] - std::round(v[i])) > tol) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("smallest network: 10 variables and 12 rows") {
    Instance in = blank_instance(EchelonSizes{1, 1, 1, 1, 1, 1});
    LinearModel m = build_model(in);
    CHECK(m.num_variables() == 10);
    CHECK(m.num_constraints() == 12);
    CHECK(m.num_objectives() == 3);
    CHECK(m.integral_variables() == std::vector<int>{0, 1, 2, 3});
    CHECK(m.var_id("P[0]") == 0);
    CHECK(m.var_id("X[0][0][0]") == 4);
    CHECK(m.var_id("DS[0][0][0]") == 9);
}

TEST_CASE("benchmark-scale network: 19 binaries, 1344 flows, 104 rows") {
    EchelonSizes z{5, 8, 20, 3, 3, 3};
    Instance in = blank_instance(z);
    LinearModel m = build_model(in);
    const int binaries = 5 + 8 + 3 + 3;
    const int flows = 3 * (5 * 8 + 8 * 20 + 20 * 8 + 8 * 5 + 8 * 3 + 8 * 3);
    CHECK(binaries == 19);
    CHECK(flows == 1344);
    CHECK(m.num_variables() == binaries + flows);
    CHECK(static_cast<int>(m.integral_variables().size()) == binaries);
    CHECK(m.num_constraints() == 20 + 8 + 5 + 8 + 20 + 8 + 8 + 5 + 8 + 3 + 8 + 3);

    const ModelLayout L = ModelLayout::from(z);
    CHECK(m.var_id("X[4][7][2]") == L.X(4, 7, 2));
    CHECK(m.var_id("Z[19][0][1]") == L.Z(19, 0, 1));
    CHECK(m.var_id("RM[7][4][2]") == L.RM(7, 4, 2));
}

TEST_CASE("social objective coefficient of a forward flow is the weighted risk") {
    std::mt19937_64 rng(3);
    EchelonSizes z{2, 3, 2, 1, 1, 2};
    Instance in = random_instance(z, rng);
    LinearModel m = build_model(in);
    const ModelLayout L = ModelLayout::from(z);
    const int v = L.X(1, 2, 1);
    const double expected = weighted_risk(in.risk_weights, in.risk_plant_dc.accident[1](1, 2),
                                          in.risk_plant_dc.psychosocial[1](1, 2),
                                          in.risk_plant_dc.physical[1](1, 2),
                                          in.risk_plant_dc.mental_overload[1](1, 2));
    CHECK(m.objective(2).coefficient(v) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(m.objective(0).coefficient(v) == doctest::Approx(in.cost_plant_dc[1](1, 2)));
    CHECK(m.objective(1).coefficient(v) == doctest::Approx(in.emission_plant_dc[1](1, 2)));
}

TEST_CASE("model objectives match domain evaluation on random solutions") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        EchelonSizes z{1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3),
                       1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2),
                       1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 3)};
        Instance in = random_instance(z, rng);
        LinearModel m = build_model(in);
        Solution s = random_solution(z, rng, 25.0);
        Eigen::VectorXd v = solution_values(in, s);
        ObjectiveTriple f = evaluate_objectives(in, s);
        for (int k = 0; k < 3; ++k) {
            const double model_val = m.objective(k).value_at(v);
            CHECK(model_val == doctest::Approx(f[k]).epsilon(1e-9));
        }
        // and the value vector round-trips through extraction
        Solution back = extract_solution(in, v);
        CHECK(back.open_plant == s.open_plant);
        CHECK(back.flow_dc_recycle[0] == s.flow_dc_recycle[0]);
    }
}

TEST_CASE("constraint rows and the domain checker agree on 1000 random solutions") {
    std::mt19937_64 rng(23);
    const double tol = 1e-6;
    int feasible_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 50; ++trial) {
        EchelonSizes z{1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2),
                       1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2),
                       1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2)};
        Instance in = random_instance(z, rng);
        if (trial % 5 == 0) {
            // make the trivial network feasible so both outcomes occur
            in.demand.setZero();
            in.return_fraction = 0.0;
        }
        LinearModel m = build_model(in);
        for (int rep = 0; rep < 20; ++rep) {
            Solution s = (trial % 5 == 0 && rep % 2 == 0)
                             ? zero_solution(z)
                             : random_solution(z, rng, 30.0);
            Eigen::VectorXd v = solution_values(in, s);
            FeasibilityReport report = check_feasibility(in, s, tol);
            CHECK(rows_feasible(m, v, tol) == report.feasible);
            (report.feasible ? feasible_seen : infeasible_seen)++;

            // violated families agree row-by-row with reported residuals
            std::map<std::pair<int, int>, double> row_violation;
            for (const auto& c : m.constraints()) {
                const double viol = constraint_violation(c, v);
                if (viol > tol) row_violation[{c.family, c.entity}] = viol;
            }
            std::map<std::pair<int, int>, double> reported;
            for (const auto& viol : report.violations)
                if (viol.family <= 12) reported[{viol.family, viol.entity}] = viol.residual;
            REQUIRE(row_violation.size() == reported.size());
            for (const auto& [key, residual] : row_violation)
                CHECK(reported.at(key) == doctest::Approx(residual).epsilon(1e-9));
        }
    }
    CHECK(feasible_seen > 0);
    CHECK(infeasible_seen > 0);
}

TEST_CASE("fixing all opens to one turns the hand model into the 200 LP") {
    Instance in = hand_instance();
    LinearModel m = build_model(in);
    LinearModel lp = fix_binaries(m, {1, 1, 1, 1});
    CHECK(lp.integral_variables().empty());

    auto rf = lp_solve<double>(lp);
    REQUIRE(rf.status == LpStatus::Optimal);
    CHECK(rf.objective == doctest::Approx(200.0).epsilon(1e-9));

    auto rq = lp_solve<Rational>(lp);
    REQUIRE(rq.status == LpStatus::Optimal);
    CHECK(rq.objective == Rational(200));  // all data is binary-exact

    Solution sol = extract_solution(in, rf.x);
    CHECK(check_feasibility(in, sol).feasible);
    CHECK(sol.objectives->economic == doctest::Approx(200.0));
}

TEST_CASE("fixing all opens to zero with positive demand is infeasible") {
    Instance in = hand_instance();
    LinearModel lp = fix_binaries(build_model(in), {0, 0, 0, 0});
    CHECK(lp_solve<double>(lp).status == LpStatus::Infeasible);
    CHECK(lp_solve<Rational>(lp).status == LpStatus::Infeasible);
}

TEST_CASE("fix_binaries leaves objective expressions untouched") {
    std::mt19937_64 rng(29);
    Instance in = random_instance(EchelonSizes{2, 2, 2, 1, 1, 1}, rng);
    LinearModel m = build_model(in);
    LinearModel fixed = fix_binaries(m, std::vector<int>(6, 1));
    REQUIRE(fixed.num_objectives() == m.num_objectives());
    for (int k = 0; k < m.num_objectives(); ++k) {
        const auto& a = m.objective(k).terms();
        const auto& b = fixed.objective(k).terms();
        REQUIRE(a.size() == b.size());
        for (std::size_t t = 0; t < a.size(); ++t) {
            CHECK(a[t].first == b[t].first);
            CHECK(a[t].second == b[t].second);
        }
    }
    CHECK_THROWS_AS(fix_binaries(m, {1, 0}), std::invalid_argument);  // length mismatch
    CHECK_THROWS_AS(fix_binaries(m, std::vector<int>(6, 2)), std::invalid_argument);
}
