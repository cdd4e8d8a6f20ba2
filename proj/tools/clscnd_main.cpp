// Command-line surface: gen / solve / payoff / pareto / check subcommands
// over the clscnd library. Exit codes: 0 success, 2 usage or input error,
// 3 infeasible, 4 resource limit.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "clscnd/branch_and_bound.hpp"
#include "clscnd/epsilon_constraint.hpp"
#include "clscnd/feasibility.hpp"
#include "clscnd/instance_gen.hpp"
#include "clscnd/json_io.hpp"
#include "clscnd/lp_export.hpp"
#include "clscnd/model_build.hpp"
#include "clscnd/svg_plot.hpp"
#include "clscnd/version.hpp"

namespace {

using namespace clscnd;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitResourceLimit = 4;

// Wall-clock bookkeeping for the run manifest.
class StageTimer {
  public:
    void stage(const std::string& name) {
        const auto now = std::chrono::steady_clock::now();
        stages_[name] = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
        last_ = now;
    }
    long wall_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }
    const Json& stages() const { return stages_; }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    std::chrono::steady_clock::time_point last_ = start_;
    Json stages_ = Json::object();
};

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

// Every run emits a manifest: to `path` when given, otherwise one line on
// stderr. Only the timing fields vary between identical runs.
void emit_manifest(const std::string& command, const Json& config,
                   std::optional<std::uint64_t> seed, const StageTimer& timer,
                   const std::string& path) {
    Json m;
    m["tool"] = "clscnd";
    m["version"] = kToolVersion;
    m["command"] = command;
    m["config_hash"] = hash_hex(fnv1a64(config.dump()));
    if (seed) m["seed"] = *seed;
    m["config"] = config;
    m["wall_ms"] = timer.wall_ms();
    m["stages"] = timer.stages();
    if (path.empty())
        std::clog << m.dump() << '\n';
    else
        write_text_file(path, m.dump(2) + "\n");
}

Instance load_instance(const std::string& path) {
    const Json j = path.empty() ? Json::parse(read_text(std::cin)) : load_json_file(path);
    return instance_from_json(j);
}

int objective_index(const std::string& name) {
    for (int k = 0; k < 3; ++k)
        if (name == objective_name(k)) return k;
    throw CLI::ValidationError("--objective",
                               "expected economic, environmental or social, got " + name);
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        write_text_file(path, text);
}

std::string triple_line(const ObjectiveTriple& t) {
    return "economic=" + format_double(t.economic) +
           " environmental=" + format_double(t.environmental) +
           " social=" + format_double(t.social);
}

// --- gen ----------------------------------------------------------------

struct GenFlags {
    std::uint64_t seed = 1;
    int plants = 5, dcs = 8, customers = 20, recycles = 3, disposals = 3, modes = 3;
    double side = 500.0, inflation = 1.0;
    std::string out, manifest;
};

int cmd_gen(const GenFlags& f) {
    StageTimer timer;
    GenConfig cfg = benchmark_config(f.seed);
    cfg.sizes = {f.plants, f.dcs, f.customers, f.recycles, f.disposals, f.modes};
    cfg.region_side_miles = f.side;
    cfg.inflation_factor = f.inflation;
    cfg.validate();
    const Instance inst = generate(cfg);
    timer.stage("generate");
    write_or_print(f.out, to_json(inst).dump(2) + "\n");
    timer.stage("write");
    emit_manifest("gen", to_json(cfg), cfg.seed, timer, f.manifest);
    return kExitOk;
}

// --- solve ----------------------------------------------------------------

struct SolveFlags {
    std::string instance, objective = "economic", out, dump_lp, manifest;
    long node_budget = 200000;
};

int cmd_solve(const SolveFlags& f) {
    StageTimer timer;
    const int k = objective_index(f.objective);
    const Instance inst = load_instance(f.instance);
    const LinearModel model = build_model(inst);
    timer.stage("load");
    if (!f.dump_lp.empty()) write_text_file(f.dump_lp, write_lp(model, k));
    BnbOptions opt;
    opt.node_budget = f.node_budget;
    const MilpResult res = solve_single_objective(model, k, opt);
    timer.stage("solve");
    Json config{{"objective", f.objective}, {"node_budget", f.node_budget}};
    if (res.status != MilpStatus::Optimal) {
        std::cerr << "infeasible: no plan satisfies the flow and capacity rows\n";
        emit_manifest("solve", config, std::nullopt, timer, f.manifest);
        return kExitInfeasible;
    }
    Solution sol = extract_solution(inst, res.values);
    std::cout << triple_line(*sol.objectives) << " nodes=" << res.nodes_explored << '\n';
    if (!f.out.empty()) write_text_file(f.out, to_json(sol).dump(2) + "\n");
    timer.stage("write");
    emit_manifest("solve", config, std::nullopt, timer, f.manifest);
    return kExitOk;
}

// --- payoff ----------------------------------------------------------------

struct PayoffFlags {
    std::string instance, out, manifest;
    long node_budget = 200000;
};

int cmd_payoff(const PayoffFlags& f) {
    StageTimer timer;
    const Instance inst = load_instance(f.instance);
    const LinearModel model = build_model(inst);
    timer.stage("load");
    MooOptions mo;
    mo.bnb.node_budget = f.node_budget;
    const PayoffTable table = payoff_table(model, mo);
    timer.stage("payoff");
    std::printf("%-16s%16s%16s%16s\n", "trial", "Economic", "Environmental", "Social");
    static const char* kLabels[3] = {"Economic", "Environmental", "Social"};
    for (int r = 0; r < 3; ++r)
        std::printf("%-16s%16.4f%16.4f%16.4f\n", kLabels[r], table.values(r, 0),
                    table.values(r, 1), table.values(r, 2));
    if (!f.out.empty()) write_text_file(f.out, to_json(table).dump(2) + "\n");
    timer.stage("write");
    emit_manifest("payoff", Json{{"node_budget", f.node_budget}}, std::nullopt, timer,
                  f.manifest);
    return kExitOk;
}

// --- pareto ----------------------------------------------------------------

struct ParetoFlags {
    std::string instance, csv = "front.csv", report = "front.json";
    std::string plot, solutions, manifest, kept = "economic";
    int cuts = 10;
    double epsilon = 1e-4;
    int jobs = 0;  // 0 -> hardware concurrency
    long node_budget = 200000;
    bool literal = false;
};

int cmd_pareto(const ParetoFlags& f) {
    StageTimer timer;
    const Instance inst = load_instance(f.instance);
    const LinearModel model = build_model(inst);
    timer.stage("load");

    MooOptions mo;
    mo.kept_objective = objective_index(f.kept);
    int pos = 0;
    for (int k = 0; k < 3; ++k)
        if (k != mo.kept_objective) mo.constrained[pos++] = k;
    mo.jobs = f.jobs > 0 ? f.jobs
                         : std::max(1u, std::thread::hardware_concurrency());
    mo.bnb.node_budget = f.node_budget;
    mo.sign_mode = f.literal ? SignMode::Literal : SignMode::Standard;

    const ParetoFront front = pareto_front(model, f.cuts, f.epsilon, mo);
    timer.stage("front");

    write_text_file(f.csv, front_csv(front, inst));
    write_text_file(f.report, run_report(front, inst).dump(2) + "\n");
    if (!f.plot.empty()) write_text_file(f.plot, front_svg(front));
    if (!f.solutions.empty()) {
        std::filesystem::create_directories(f.solutions);
        char name[32];
        for (std::size_t i = 0; i < front.members.size(); ++i) {
            std::snprintf(name, sizeof(name), "member_%03zu.json", i);
            const Solution sol = extract_solution(inst, front.members[i].values);
            write_text_file((std::filesystem::path(f.solutions) / name).string(),
                            to_json(sol).dump(2) + "\n");
        }
    }
    timer.stage("write");

    std::cout << "front members: " << front.members.size() << " of "
              << front.grid.e_vectors.size() << " cells"
              << (front.complete ? "" : " (partial: node budget hit)") << '\n';
    const Json config{{"cuts", f.cuts},
                      {"epsilon", f.epsilon},
                      {"kept", f.kept},
                      {"node_budget", f.node_budget},
                      {"sign_mode", f.literal ? "literal" : "standard"}};
    emit_manifest("pareto", config, std::nullopt, timer, f.manifest);
    return front.complete ? kExitOk : kExitResourceLimit;
}

// --- check ----------------------------------------------------------------

struct CheckFlags {
    std::string instance, solution, out, manifest;
};

int cmd_check(const CheckFlags& f) {
    StageTimer timer;
    const Instance inst = load_instance(f.instance);
    const Solution sol = solution_from_json(load_json_file(f.solution));
    timer.stage("load");
    const FeasibilityReport report = check_feasibility(inst, sol, 1e-6);
    const ObjectiveTriple t = evaluate_objectives(inst, sol);
    timer.stage("check");
    std::cout << (report.feasible ? "feasible" : "infeasible") << ' ' << triple_line(t) << '\n';
    for (const Violation& v : report.violations)
        std::cout << "violation " << v.label << " residual=" << format_double(v.residual)
                  << '\n';
    if (!f.out.empty()) write_text_file(f.out, to_json(report).dump(2) + "\n");
    emit_manifest("check", Json::object(), std::nullopt, timer, f.manifest);
    return report.feasible ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-loop supply-chain network design: generate, solve, sweep, check"};
    app.set_version_flag("--version", std::string("clscnd ") + kToolVersion);
    app.require_subcommand(1);

    GenFlags gen;
    CLI::App* g = app.add_subcommand("gen", "draw a seeded instance and write its JSON");
    g->add_option("--seed", gen.seed, "RNG seed");
    g->add_option("--plants", gen.plants, "candidate plant sites");
    g->add_option("--dcs", gen.dcs, "candidate distribution/inspection sites");
    g->add_option("--customers", gen.customers, "customer zones");
    g->add_option("--recycles", gen.recycles, "candidate recycling sites");
    g->add_option("--disposals", gen.disposals, "candidate disposal sites");
    g->add_option("--modes", gen.modes, "transport modes");
    g->add_option("--side", gen.side, "placement square side, miles");
    g->add_option("--inflation", gen.inflation, "cost rate multiplier");
    g->add_option("--out", gen.out, "instance file (default: stdout)");
    g->add_option("--manifest", gen.manifest, "manifest file (default: stderr)");

    SolveFlags solve;
    CLI::App* s = app.add_subcommand("solve", "minimize one objective exactly");
    s->add_option("--instance", solve.instance, "instance file (default: stdin)");
    s->add_option("--objective", solve.objective, "economic | environmental | social");
    s->add_option("--out", solve.out, "solution file");
    s->add_option("--node-budget", solve.node_budget, "tree nodes before giving up");
    s->add_option("--dump-lp", solve.dump_lp, "write the relaxation in LP text format");
    s->add_option("--manifest", solve.manifest, "manifest file (default: stderr)");

    PayoffFlags payoff;
    CLI::App* p = app.add_subcommand("payoff", "3x3 payoff table with refined trials");
    p->add_option("--instance", payoff.instance, "instance file (default: stdin)");
    p->add_option("--out", payoff.out, "payoff JSON file");
    p->add_option("--node-budget", payoff.node_budget, "tree nodes before giving up");
    p->add_option("--manifest", payoff.manifest, "manifest file (default: stderr)");

    ParetoFlags pareto;
    CLI::App* pf = app.add_subcommand("pareto", "sweep the grid and report the front");
    pf->add_option("--instance", pareto.instance, "instance file (default: stdin)");
    pf->add_option("--cuts", pareto.cuts, "grid cuts per constrained objective");
    pf->add_option("--epsilon", pareto.epsilon, "augmentation weight");
    pf->add_option("--csv", pareto.csv, "front CSV file");
    pf->add_option("--report", pareto.report, "run report JSON file");
    pf->add_option("--plot", pareto.plot, "SVG scatter file");
    pf->add_option("--solutions", pareto.solutions, "directory for member solution files");
    pf->add_option("--jobs", pareto.jobs, "concurrent grid chains (default: hardware)");
    pf->add_option("--node-budget", pareto.node_budget, "tree nodes per subproblem");
    pf->add_option("--kept", pareto.kept, "objective kept in subproblems");
    pf->add_flag("--literal-augmentation", pareto.literal,
                 "subtract slacks in the bound rows instead of adding them");
    pf->add_option("--manifest", pareto.manifest, "manifest file (default: stderr)");

    CheckFlags check;
    CLI::App* c = app.add_subcommand("check", "audit a solution against every row");
    c->add_option("--instance", check.instance, "instance file (default: stdin)");
    c->add_option("--solution", check.solution, "solution file")->required();
    c->add_option("--out", check.out, "feasibility report JSON file");
    c->add_option("--manifest", check.manifest, "manifest file (default: stderr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (g->parsed()) return cmd_gen(gen);
        if (s->parsed()) return cmd_solve(solve);
        if (p->parsed()) return cmd_payoff(payoff);
        if (pf->parsed()) return cmd_pareto(pareto);
        if (c->parsed()) return cmd_check(check);
    } catch (const InfeasibleProblemError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "; best bound "
                  << format_double(e.partial().bound) << '\n';
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
