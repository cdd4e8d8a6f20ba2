#include <cmath>
#include <random>
#include <vector>

#include "clscnd/branch_and_bound.hpp"
#include "clscnd/epsilon_constraint.hpp"
#include "clscnd/feasibility.hpp"
#include "clscnd/instance_gen.hpp"
#include "clscnd/model_build.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace clscnd;
using namespace clscnd::testing;

namespace {

// Two continuous variables in [0,4] with x + y >= 2 and objectives
// f1 = x, f2 = y, f3 = x + y. The optimal triples are computable by hand:
// f3 is constant 2 on the efficient set, so its range collapses to zero.
LinearModel corner_model() {
    LinearModel m;
    const int x = m.add_variable("x", 0.0, 4.0, false);
    const int y = m.add_variable("y", 0.0, 4.0, false);
    Constraint c;
    c.expr.add_term(x, 1.0);
    c.expr.add_term(y, 1.0);
    c.sense = Sense::GreaterEqual;
    c.rhs = 2.0;
    m.add_constraint(std::move(c));
    LinearExpr f1, f2, f3;
    f1.add_term(x, 1.0);
    f2.add_term(y, 1.0);
    f3.add_term(x, 1.0);
    f3.add_term(y, 1.0);
    m.add_objective(f1);
    m.add_objective(f2);
    m.add_objective(f3);
    return m;
}

PayoffTable hand_table(const Eigen::Matrix3d& values) {
    PayoffTable t;
    t.values = values;
    for (int k = 0; k < 3; ++k) t.trials[k] = Eigen::VectorXd::Zero(1);
    return t;
}

bool triple_equal(const ObjectiveTriple& a, const ObjectiveTriple& b) {
    return a.economic == b.economic && a.environmental == b.environmental &&
           a.social == b.social;
}

// Independent restatement of the filter contract for cross-checking:
// point i survives when no point dominates it and no earlier point
// coincides with it within tol.
std::vector<ObjectiveTriple> filter_oracle(const std::vector<ObjectiveTriple>& pts, double tol) {
    auto dom = [&](const ObjectiveTriple& a, const ObjectiveTriple& b) {
        bool better = false;
        for (int k = 0; k < 3; ++k) {
            if (a[k] > b[k] + tol) return false;
            if (a[k] < b[k] - tol) better = true;
        }
        return better;
    };
    auto same = [&](const ObjectiveTriple& a, const ObjectiveTriple& b) {
        return std::abs(a[0] - b[0]) <= tol && std::abs(a[1] - b[1]) <= tol &&
               std::abs(a[2] - b[2]) <= tol;
    };
    std::vector<ObjectiveTriple> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < pts.size() && keep; ++j) {
            if (j == i) continue;
            if (dom(pts[j], pts[i]) || (j < i && same(pts[j], pts[i]))) keep = false;
        }
        if (keep) out.push_back(pts[i]);
    }
    return out;
}

LinearModel tiny_network_model(Instance& out_instance, unsigned seed = 7) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.sizes = {1, 2, 2, 1, 1, 2};  // 5 binaries: enumeration stays cheap
    out_instance = generate(cfg);
    return build_model(out_instance);
}

}  // namespace

TEST_CASE("objective_ranges reads column extremes of the payoff table") {
    Eigen::Matrix3d v;
    // columns: economic, environmental, social
    v << 1000.0, 50649.0, 454.0,  //
        1400.0, 46145.0, 459.0,   //
        2000.0, 104930.0, 124.0;
    ObjectiveRanges r = objective_ranges(hand_table(v), {1, 2});
    REQUIRE(r.objectives == std::vector<int>{1, 2});
    CHECK(r.fmin[0] == 46145.0);
    CHECK(r.fmax[0] == 104930.0);
    CHECK(r.range[0] == 58785.0);
    CHECK(r.fmin[1] == 124.0);
    CHECK(r.fmax[1] == 459.0);
    CHECK(r.range[1] == 335.0);

    CHECK_THROWS_AS(objective_ranges(hand_table(v), {}), std::invalid_argument);
    CHECK_THROWS_AS(objective_ranges(hand_table(v), {3}), std::invalid_argument);
}

TEST_CASE("grid_points: five cuts over [0,10] hit 0, 2.5, 5, 7.5, 10 exactly") {
    ObjectiveRanges r;
    r.objectives = {1};
    r.fmin = Eigen::VectorXd::Constant(1, 0.0);
    r.fmax = Eigen::VectorXd::Constant(1, 10.0);
    r.range = Eigen::VectorXd::Constant(1, 10.0);
    GridSpec g = grid_points(r, 5);
    REQUIRE(g.e_vectors.size() == 5);
    const double expected[5] = {0.0, 2.5, 5.0, 7.5, 10.0};
    for (int j = 0; j < 5; ++j) CHECK(g.e_vectors[j][0] == expected[j]);
}

TEST_CASE("grid_points: ten cuts on two objectives give 100 lexicographic vectors") {
    ObjectiveRanges r;
    r.objectives = {1, 2};
    r.fmin.resize(2);
    r.fmax.resize(2);
    r.range.resize(2);
    r.fmin << 100.0, 7.0;
    r.fmax << 300.0, 13.0;
    r.range << 200.0, 6.0;
    GridSpec g = grid_points(r, 10);
    REQUIRE(g.e_vectors.size() == 100);
    CHECK(g.m == 10);
    CHECK(g.p == 2);
    // Endpoints are exact, the first objective is the outer digit.
    CHECK(g.e_vectors[0][0] == 100.0);
    CHECK(g.e_vectors[0][1] == 7.0);
    CHECK(g.e_vectors[9][0] == 100.0);
    CHECK(g.e_vectors[9][1] == 13.0);
    CHECK(g.e_vectors[10][1] == 7.0);
    CHECK(g.e_vectors[10][0] > 100.0);
    CHECK(g.e_vectors[99][0] == 300.0);
    CHECK(g.e_vectors[99][1] == 13.0);
    // Lexicographic: non-decreasing outer axis, inner axis cycling.
    for (int c = 1; c < 100; ++c) {
        CHECK(g.e_vectors[c][0] >= g.e_vectors[c - 1][0]);
        if (g.e_vectors[c][0] == g.e_vectors[c - 1][0])
            CHECK(g.e_vectors[c][1] > g.e_vectors[c - 1][1]);
    }
}

TEST_CASE("grid_points: collapsed range repeats the minimum; bad arguments throw") {
    ObjectiveRanges r;
    r.objectives = {2};
    r.fmin = Eigen::VectorXd::Constant(1, 42.0);
    r.fmax = Eigen::VectorXd::Constant(1, 42.0);
    r.range = Eigen::VectorXd::Constant(1, 0.0);
    GridSpec g = grid_points(r, 4);
    REQUIRE(g.e_vectors.size() == 4);
    for (const auto& e : g.e_vectors) CHECK(e[0] == 42.0);

    CHECK_THROWS_AS(grid_points(r, 1), std::invalid_argument);
    CHECK_THROWS_AS(grid_points(r, 4, 9e-7), std::invalid_argument);
    CHECK_THROWS_AS(grid_points(r, 4, 2e-3), std::invalid_argument);
    CHECK_NOTHROW(grid_points(r, 4, 1e-6));
    CHECK_NOTHROW(grid_points(r, 4, 1e-3));
}

TEST_CASE("dominance_filter drops dominated and duplicate points, keeping order") {
    const std::vector<ObjectiveTriple> pts = {{1, 2, 3}, {2, 3, 4}, {3, 1, 5}};
    const auto out = dominance_filter(pts);
    REQUIRE(out.size() == 2);
    CHECK(triple_equal(out[0], {1, 2, 3}));
    CHECK(triple_equal(out[1], {3, 1, 5}));

    const auto all_equal = dominance_filter({{5, 5, 5}, {5, 5, 5}, {5, 5, 5}});
    REQUIRE(all_equal.size() == 1);
    CHECK(triple_equal(all_equal[0], {5, 5, 5}));

    // Within tolerance counts as equal; first one survives.
    const auto near = dominance_filter({{1, 1, 1}, {1 + 5e-7, 1, 1 - 5e-7}});
    CHECK(near.size() == 1);

    // A clear one-coordinate worsening is domination.
    const auto dominated = dominance_filter({{1, 2, 3}, {1 + 2e-6, 2, 3}});
    REQUIRE(dominated.size() == 1);
    CHECK(triple_equal(dominated[0], {1, 2, 3}));

    // Incomparable points both survive.
    const auto incomparable = dominance_filter({{1, 2, 3}, {1 + 2e-6, 2 - 2e-6, 3}});
    CHECK(incomparable.size() == 2);

    CHECK(dominance_filter({}).empty());
}

TEST_CASE("dominance_filter agrees with a brute-force oracle on random points") {
    std::mt19937_64 rng(20260825);
    std::uniform_int_distribution<int> coord(0, 4);  // small grid forces ties
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<ObjectiveTriple> pts;
        for (int i = 0; i < 50; ++i)
            pts.push_back({static_cast<double>(coord(rng)), static_cast<double>(coord(rng)),
                           static_cast<double>(coord(rng))});
        const auto got = dominance_filter(pts);
        const auto expect = filter_oracle(pts, 1e-6);
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(triple_equal(got[i], expect[i]));
    }
}

TEST_CASE("payoff_table on the corner model: hand-computed rows and a zero range") {
    LinearModel m = corner_model();
    PayoffTable t = payoff_table(m);
    // Rows (trial k minimizes objective k, remaining objectives refined):
    //   trial 0: x=0, y=2 -> (0, 2, 2)
    //   trial 1: y=0, x=2 -> (2, 0, 2)
    //   trial 2: x+y=2, then x -> 0 -> (0, 2, 2)
    const double tol = 1e-5;
    CHECK(t.values(0, 0) == doctest::Approx(0.0).epsilon(tol));
    CHECK(t.values(0, 1) == doctest::Approx(2.0).epsilon(tol));
    CHECK(t.values(0, 2) == doctest::Approx(2.0).epsilon(tol));
    CHECK(t.values(1, 0) == doctest::Approx(2.0).epsilon(tol));
    CHECK(t.values(1, 1) == doctest::Approx(0.0).epsilon(tol));
    CHECK(t.values(1, 2) == doctest::Approx(2.0).epsilon(tol));
    CHECK(t.values(2, 0) == doctest::Approx(0.0).epsilon(tol));
    CHECK(t.values(2, 1) == doctest::Approx(2.0).epsilon(tol));
    CHECK(t.values(2, 2) == doctest::Approx(2.0).epsilon(tol));

    // Diagonal minimality of each column.
    for (int k = 0; k < 3; ++k)
        for (int row = 0; row < 3; ++row)
            CHECK(t.values(k, k) <= t.values(row, k) + 1e-6 * (1.0 + std::abs(t.values(k, k))));

    ObjectiveRanges r = objective_ranges(t, {1, 2});
    CHECK(r.range[0] == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(r.range[1] == doctest::Approx(0.0).epsilon(1e-5));
}

TEST_CASE("payoff_table: identical objectives collapse every range to zero") {
    LinearModel m;
    const int x = m.add_variable("x", 1.0, 4.0, false);
    LinearExpr f;
    f.add_term(x, 1.0);
    m.add_objective(f);
    m.add_objective(f);
    m.add_objective(f);
    PayoffTable t = payoff_table(m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(t.values(i, j) == doctest::Approx(1.0).epsilon(1e-9));
    ObjectiveRanges r = objective_ranges(t, {1, 2});
    CHECK(r.range[0] == doctest::Approx(0.0));
    CHECK(r.range[1] == doctest::Approx(0.0));
}

TEST_CASE("payoff_table throws when the model is infeasible") {
    LinearModel m = corner_model();
    Constraint c;
    c.expr.add_term(0, 1.0);
    c.sense = Sense::GreaterEqual;
    c.rhs = 5.0;  // x <= 4, so x >= 5 cannot hold
    m.add_constraint(std::move(c));
    CHECK_THROWS_AS(payoff_table(m), InfeasibleProblemError);
}

TEST_CASE("moo options validation") {
    LinearModel m = corner_model();
    MooOptions o;
    o.kept_objective = 1;  // collides with constrained {1,2}
    CHECK_THROWS_AS(payoff_table(m, o), std::invalid_argument);
    o = MooOptions{};
    o.jobs = 0;
    CHECK_THROWS_AS(payoff_table(m, o), std::invalid_argument);
    o = MooOptions{};
    o.constrained = {1, 1};
    CHECK_THROWS_AS(payoff_table(m, o), std::invalid_argument);
    LinearModel two;
    two.add_variable("x", 0.0, 1.0, false);
    two.add_objective(LinearExpr{});
    two.add_objective(LinearExpr{});
    CHECK_THROWS_AS(payoff_table(two), std::invalid_argument);
}

TEST_CASE("augmented_subproblem on the corner model: hand-computed optima") {
    LinearModel m = corner_model();
    PayoffTable t = payoff_table(m);
    ObjectiveRanges r = objective_ranges(t, {1, 2});
    const double eps = 1e-4;
    Eigen::VectorXd e(2);

    SUBCASE("slack-free corner reproduces the unconstrained economic optimum") {
        e << r.fmax[0], r.fmax[1];
        SubproblemResult s = augmented_subproblem(m, e, eps, r);
        REQUIRE(s.status == MilpStatus::Optimal);
        CHECK(s.objectives.economic == doctest::Approx(t.values(0, 0)).epsilon(1e-5));
        CHECK(s.objectives.environmental == doctest::Approx(2.0).epsilon(1e-4));
    }

    SUBCASE("tight environmental bound forces the trade-off point") {
        e << 0.0, 2.0;
        SubproblemResult s = augmented_subproblem(m, e, eps, r);
        REQUIRE(s.status == MilpStatus::Optimal);
        CHECK(s.objectives.economic == doctest::Approx(2.0).epsilon(1e-4));
        CHECK(s.objectives.environmental == doctest::Approx(0.0).epsilon(1e-4));
    }

    SUBCASE("interior bound lands between the extremes") {
        e << 1.0, 2.0;
        SubproblemResult s = augmented_subproblem(m, e, eps, r);
        REQUIRE(s.status == MilpStatus::Optimal);
        CHECK(s.objectives.economic == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(s.objectives.environmental == doctest::Approx(1.0).epsilon(1e-4));
        // Bounds hold as inequalities on the original objectives.
        CHECK(s.objectives.environmental <= e[0] + 1e-6);
        CHECK(s.objectives.social <= e[1] + 1e-6);
    }

    SUBCASE("e-vector below the attainable minimum is infeasible") {
        e << -1.0, 2.0;
        SubproblemResult s = augmented_subproblem(m, e, eps, r);
        CHECK(s.status == MilpStatus::Infeasible);
    }

    SUBCASE("zero-range objective still bounds through its row") {
        e << 2.0, 1.0;  // f3 <= 1 contradicts x + y >= 2
        SubproblemResult s = augmented_subproblem(m, e, eps, r);
        CHECK(s.status == MilpStatus::Infeasible);
    }

    SUBCASE("literal sign mode can settle on a different efficient point") {
        e << 0.0, 2.0;
        MooOptions literal;
        literal.sign_mode = SignMode::Literal;
        SubproblemResult s = augmented_subproblem(m, e, eps, r, literal);
        REQUIRE(s.status == MilpStatus::Optimal);
        // The literal form writes f_i - s_i = e_i, so the bound acts from
        // below and the slack penalty drives y toward e instead: x stays 0.
        CHECK(s.objectives.economic == doctest::Approx(0.0).epsilon(1e-4));
        CHECK(s.objectives.environmental == doctest::Approx(2.0).epsilon(1e-4));
    }

    SUBCASE("e-vector length must match the constrained objectives") {
        Eigen::VectorXd bad(1);
        bad << 1.0;
        CHECK_THROWS_AS(augmented_subproblem(m, bad, eps, r), std::invalid_argument);
    }
}

TEST_CASE("pareto_front on the corner model: three distinct points, duplicates collapsed") {
    LinearModel m = corner_model();
    ParetoFront front = pareto_front(m, 3);
    CHECK(front.complete);
    REQUIRE(front.grid.e_vectors.size() == 9);
    // The inner (zero-range) axis repeats, so each outer value solves one
    // fresh subproblem and two duplicates.
    REQUIRE(front.members.size() == 3);
    CHECK(front.members[0].objectives.economic == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(front.members[1].objectives.economic == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(front.members[2].objectives.economic == doctest::Approx(0.0).epsilon(1e-4));
    int optimal = 0, duplicate = 0;
    for (const auto& cell : front.cells) {
        if (cell.status == CellStatus::Optimal) ++optimal;
        if (cell.status == CellStatus::Duplicate) ++duplicate;
    }
    CHECK(optimal == 3);
    CHECK(duplicate == 6);
    // Members report the grid cell they came from, in grid order.
    for (std::size_t i = 1; i < front.members.size(); ++i)
        CHECK(front.members[i].cell > front.members[i - 1].cell);
    // Original model rows hold at the returned variable values.
    for (const auto& member : front.members)
        for (const auto& c : m.constraints())
            CHECK(constraint_violation(c, member.values) <= 1e-7);
}

TEST_CASE("pareto_front on a tiny network agrees with exhaustive enumeration") {
    Instance in;
    LinearModel m = tiny_network_model(in);

    PayoffTable t = payoff_table(m);
    for (int k = 0; k < 3; ++k) {
        MilpResult oracle = enumerate_oracle(m, k);
        REQUIRE(oracle.status == MilpStatus::Optimal);
        CHECK(t.values(k, k) ==
              doctest::Approx(oracle.objective).epsilon(1e-6));
        // Diagonal minimality across rows.
        for (int row = 0; row < 3; ++row)
            CHECK(t.values(k, k) <= t.values(row, k) + 1e-6 * (1.0 + std::abs(t.values(k, k))));
    }

    ParetoFront front = pareto_front(m, 3);
    CHECK(front.complete);
    REQUIRE(!front.members.empty());

    double best_economic = front.members[0].objectives.economic;
    for (const auto& member : front.members) {
        // Every member maps to a feasible network plan.
        Solution sol = extract_solution(in, member.values);
        CHECK(check_feasibility(in, sol, 1e-6).feasible);
        // Every member is efficient per the reference enumeration.
        CHECK(efficient_against_enumeration(m, member.objectives, 1e-6));
        // Constrained objectives respect their grid bounds.
        for (int i = 0; i < 2; ++i) {
            const double e = member.e[i];
            CHECK(member.objectives[front.ranges.objectives[i]] <=
                  e + 1e-6 * (1.0 + std::abs(e)));
        }
        best_economic = std::min(best_economic, member.objectives.economic);
    }
    // The slackest corner is always a grid point, so the unconstrained
    // economic optimum appears in the front.
    CHECK(best_economic ==
          doctest::Approx(t.values(0, 0)).epsilon(1e-6));

    // Mutual non-domination of the reported front.
    const double tol = 1e-6;
    for (std::size_t a = 0; a < front.members.size(); ++a)
        for (std::size_t b = 0; b < front.members.size(); ++b) {
            if (a == b) continue;
            const auto& pa = front.members[a].objectives;
            const auto& pb = front.members[b].objectives;
            const bool weakly_better = pa.economic <= pb.economic + tol &&
                                       pa.environmental <= pb.environmental + tol &&
                                       pa.social <= pb.social + tol;
            const bool strictly = pa.economic < pb.economic - tol ||
                                  pa.environmental < pb.environmental - tol ||
                                  pa.social < pb.social - tol;
            CHECK(!(weakly_better && strictly));
        }
}

TEST_CASE("pareto_front is deterministic and identical across worker counts") {
    Instance in;
    LinearModel m = tiny_network_model(in, 11);
    MooOptions serial;
    serial.jobs = 1;
    MooOptions parallel;
    parallel.jobs = 4;
    ParetoFront a = pareto_front(m, 3, 1e-4, serial);
    ParetoFront b = pareto_front(m, 3, 1e-4, parallel);
    REQUIRE(a.members.size() == b.members.size());
    for (std::size_t i = 0; i < a.members.size(); ++i) {
        CHECK(a.members[i].cell == b.members[i].cell);
        CHECK(a.members[i].objectives.economic == b.members[i].objectives.economic);
        CHECK(a.members[i].objectives.environmental == b.members[i].objectives.environmental);
        CHECK(a.members[i].objectives.social == b.members[i].objectives.social);
        CHECK(a.members[i].values == b.members[i].values);
    }
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        CHECK(a.cells[i].status == b.cells[i].status);
}

namespace {

// Every payoff solve finishes at the root, but bounding f2 at its midpoint
// forces a fractional binary and therefore branching: the LP picks
// b1 = 1, b2 = 1/3 to cover 2*b1 + 3*b2 + x >= 3 at minimal cost, and the
// integer optimum (b2 = 1) needs two child nodes on top of the root.
LinearModel branchy_model() {
    LinearModel m;
    const int b1 = m.add_variable("b1", 0.0, 1.0, true);
    const int b2 = m.add_variable("b2", 0.0, 1.0, true);
    const int x = m.add_variable("x", 0.0, 1.0, false);
    LinearExpr f1, f2, f3;
    f1.add_term(b1, 3.0);
    f1.add_term(b2, 5.0);
    f1.add_term(x, 1.0);
    f2.add_constant(8.0);
    f2.add_term(b1, -2.0);
    f2.add_term(b2, -3.0);
    f2.add_term(x, -1.0);
    f3.add_term(x, 1.0);
    m.add_objective(f1);
    m.add_objective(f2);
    m.add_objective(f3);
    return m;
}

}  // namespace

TEST_CASE("resource limits propagate from subproblems and flag partial fronts") {
    LinearModel m = branchy_model();

    // Unrestricted reference run: payoff rows are root solves, the e2 = 5
    // column branches. Expected rows: (0,8,0), (9,2,1), (0,8,0).
    ParetoFront full = pareto_front(m, 3);
    CHECK(full.complete);
    CHECK(full.payoff.values(0, 1) == doctest::Approx(8.0).epsilon(1e-5));
    CHECK(full.payoff.values(1, 1) == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(full.ranges.range[0] == doctest::Approx(6.0).epsilon(1e-5));
    CHECK(full.ranges.range[1] == doctest::Approx(1.0).epsilon(1e-5));

    // Direct propagation out of a single subproblem.
    MooOptions capped;
    capped.bnb.node_budget = 2;
    Eigen::VectorXd e(2);
    e << 5.0, 0.0;
    CHECK_THROWS_AS(augmented_subproblem(m, e, 1e-4, full.ranges, capped),
                    ResourceLimitError);

    // Same budget through the full sweep: the payoff table still fits, the
    // branching column is reported instead of aborting the run.
    ParetoFront partial = pareto_front(m, 3, 1e-4, capped);
    CHECK(!partial.complete);
    int limited = 0;
    for (const auto& cell : partial.cells)
        if (cell.status == CellStatus::ResourceLimit) ++limited;
    CHECK(limited >= 1);
    CHECK(partial.members.size() < full.members.size());
    // What it did return is still internally consistent.
    for (const auto& cell : partial.cells)
        if (cell.status == CellStatus::ResourceLimit) CHECK(cell.nodes_explored >= 1);
}

TEST_CASE("cell status names used in reports") {
    CHECK(std::string(cell_status_name(CellStatus::Optimal)) == "optimal");
    CHECK(std::string(cell_status_name(CellStatus::Infeasible)) == "infeasible");
    CHECK(std::string(cell_status_name(CellStatus::Duplicate)) == "duplicate");
    CHECK(std::string(cell_status_name(CellStatus::Dominated)) == "dominated");
    CHECK(std::string(cell_status_name(CellStatus::ResourceLimit)) == "resource-limit");
}
