#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutcount/hardgen.hpp"
#include "cutcount/oracle.hpp"
#include "cutcount/problems.hpp"

using namespace cutcount;
using json = nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitUnknown = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

// --directed turns the edge lines of a "p tw" file into arcs
AnyGraph load_graph(const std::string& path, bool directed) {
    auto text = slurp(path);
    if (ends_with(path, ".json")) return parse_graph(text, GraphFormat::EdgeListJson);
    if (directed) {
        auto pos = text.find("p tw ");
        if (pos != std::string::npos) text.replace(pos, 5, "p dtw ");
    }
    return parse_graph(text, GraphFormat::PaceGr);
}

std::vector<int> one_based(const std::vector<int>& ids, int n, const char* what) {
    std::vector<int> out;
    for (int v : ids) {
        if (v < 1 || v > n) throw UsageError(std::string(what) + " vertex out of range: " + std::to_string(v));
        out.push_back(v - 1);
    }
    return out;
}

struct Config {
    std::string problem;
    std::string graph;
    std::string td;
    int k = 0;
    int l = -1;
    std::vector<int> terminals;
    std::vector<int> required;
    int root = 1;
    int reps = 20;
    uint64_t seed = 1;
    bool json = false;
    bool directed = false;
};

void add_instance_flags(CLI::App* cmd, Config& c) {
    cmd->add_option("problem", c.problem, "problem name")->required();
    cmd->add_option("--graph", c.graph, "PACE .gr (p tw / p dtw) or edge-list .json");
    cmd->add_option("--td", c.td, "PACE .td decomposition (heuristic when absent)");
    cmd->add_option("--k", c.k, "size / count / budget parameter");
    cmd->add_option("--l", c.l, "covered vertices for pcc (default n)");
    cmd->add_option("--terminals", c.terminals, "terminal vertices, 1-based")->delimiter(',');
    cmd->add_option("--required", c.required, "required vertices, 1-based")->delimiter(',');
    cmd->add_option("--root", c.root, "outbranching root, 1-based");
    cmd->add_option("--reps", c.reps, "Monte Carlo repetitions")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "master seed");
    cmd->add_flag("--json", c.json, "JSON report");
    cmd->add_flag("--directed", c.directed, "read edge lines as arcs");
}

Problem problem_of(const std::string& name) {
    auto p = parse_problem(name);
    if (!p) {
        std::string all;
        for (auto q : all_problems()) all += std::string(" ") + problem_name(q);
        throw UsageError("unsupported problem '" + name + "'; choose from:" + all);
    }
    return *p;
}

struct Loaded {
    Problem p;
    Instance in;
    TreeDecomposition td;
    bool heuristic = false;
};

Loaded load_instance(const Config& c) {
    Loaded L;
    L.p = problem_of(c.problem);
    if (c.graph.empty()) throw UsageError("--graph is required");
    auto any = load_graph(c.graph, c.directed || problem_is_directed(L.p, false));
    bool file_directed = std::holds_alternative<DirectedGraph>(any);
    bool directed = problem_is_directed(L.p, file_directed);
    if (directed != file_directed) throw UsageError(std::string(problem_name(L.p)) + (directed ? " needs arcs (p dtw or --directed)" : " needs an undirected graph"));
    auto& in = L.in;
    in.directed = directed;
    if (directed)
        in.dg = std::get<DirectedGraph>(any);
    else
        in.g = std::get<UndirectedGraph>(any);
    int n = directed ? in.dg.n : in.g.n;
    in.k = c.k;
    in.l = c.l < 0 ? n : c.l;
    in.set = one_based(L.p == Problem::Steiner ? c.terminals : c.required, n, "set");
    if (L.p == Problem::KLeafOutbranching) in.root = one_based({c.root}, n, "root").front();
    if (!c.td.empty()) {
        L.td = parse_pace_td(slurp(c.td));
    } else {
        L.td = heuristic_decompose(decomposition_graph(in));
        L.heuristic = true;
    }
    return L;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_solve(const Config& c) {
    auto L = load_instance(c);
    SolveOptions opt;
    opt.repetitions = c.reps;
    opt.seed = c.seed;
    auto t0 = std::chrono::steady_clock::now();
    auto ans = solve_problem(L.p, L.in, L.td, opt);
    double ms = ms_since(t0);
    if (c.json) {
        json j{{"problem", problem_name(L.p)}, {"verdict", verdict_name(ans.verdict)}, {"seed", ans.seed},
               {"repetitions", ans.repetitions}, {"runs_used", ans.runs_used}, {"width", L.td.width()},
               {"heuristic_decomposition", L.heuristic}, {"time_ms", ms}};
        std::cout << j.dump() << '\n';
    } else {
        std::printf("%s\nproblem %s  seed %llu  repetitions %d  width %d%s  time %.1f ms\n", verdict_name(ans.verdict), problem_name(L.p),
                    static_cast<unsigned long long>(ans.seed), ans.repetitions, L.td.width(), L.heuristic ? " (heuristic)" : "", ms);
    }
    return ans.verdict == Verdict::Yes ? kExitYes : kExitUnknown;
}

int cmd_verify(const Config& c, int random_count) {
    struct Tally {
        int total = 0, yes = 0, false_pos = 0, false_neg = 0;
    } t;
    SolveOptions opt;
    opt.repetitions = c.reps;
    auto run = [&](Problem p, const Instance& in, const TreeDecomposition& td, bool truth, uint64_t seed) {
        opt.seed = seed;
        bool said = solve_problem(p, in, td, opt).verdict == Verdict::Yes;
        ++t.total;
        t.yes += truth;
        t.false_pos += said && !truth;
        t.false_neg += !said && truth;
    };
    Problem p = problem_of(c.problem);
    if (random_count > 0) {
        Rng rng(derive_seed(c.seed, static_cast<uint64_t>(p)));
        for (int i = 0; i < random_count; ++i) {
            auto r = random_instance(p, rng);
            run(p, r.in, r.td, r.answer, derive_seed(c.seed, 1000 + i));
        }
    } else {
        auto L = load_instance(c);
        run(p, L.in, L.td, oracle_solve(p, L.in), c.seed);
    }
    if (c.json) {
        std::cout << json{{"problem", problem_name(p)}, {"instances", t.total}, {"oracle_yes", t.yes},
                          {"false_positives", t.false_pos}, {"false_negatives", t.false_neg}, {"repetitions", c.reps}}.dump()
                  << '\n';
    } else {
        std::printf("%s: %d instances, %d oracle-yes, %d false positives, %d false negatives (r=%d)\n", problem_name(p), t.total, t.yes,
                    t.false_pos, t.false_neg, c.reps);
    }
    // a false positive is a bug; misses are the expected one-sided error
    return t.false_pos == 0 ? kExitYes : kExitUnknown;
}

int cmd_genhard(const std::string& cnf_path, int beta, const std::string& out) {
    auto f = parse_dimacs(slurp(cnf_path));
    std::optional<std::vector<bool>> a;
    if (f.vars <= 24) a = brute_force_sat(f);
    auto inst = gen_steiner(f, beta, a);
    spit(out + ".gr", to_pace_gr(inst.g));
    spit(out + ".td", to_pace_td(inst.pd.to_tree(), inst.g.n));
    spit(out + ".json", hard_instance_json(inst));
    std::printf("wrote %s.gr %s.td %s.json\nvertices %d  edges %d  K %lld  width %d (bound %lld)  %s\n", out.c_str(), out.c_str(), out.c_str(),
                inst.g.n, inst.g.m(), static_cast<long long>(inst.K), inst.pd.width(), static_cast<long long>(width_bound(inst.params)),
                a ? "satisfiable, witness included" : "unsatisfiable or not checked");
    return kExitYes;
}

int cmd_decompose(const std::string& graph, const std::string& out) {
    auto any = load_graph(graph, false);
    auto td = std::visit([](auto& g) { return heuristic_decompose(g); }, any);
    int n = std::visit([](auto& g) { return g.n; }, any);
    auto text = to_pace_td(td, n);
    if (out.empty())
        std::cout << text;
    else
        spit(out, text);
    std::fprintf(stderr, "width %d\n", td.width());
    return kExitYes;
}

// path power: every window of t consecutive vertices is a clique, so bags have t vertices
int cmd_bench(const std::string& name, int from, int to, bool as_json) {
    Problem p = problem_of(name);
    if (from < 1 || to < from || to > 9) throw UsageError("bench: need 1 <= from <= to <= 9");
    json rows = json::array();
    if (!as_json) std::printf("%4s %12s %12s %10s\n", "bag", "axis", "peak_cells", "ms");
    for (int t = from; t <= to; ++t) {
        int n = 2 * t + 2;
        Instance in;
        in.directed = problem_is_directed(p, false);
        UndirectedGraph g(n);
        DirectedGraph dg(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n && v - u < t; ++v) {
                g.add_edge(u, v);
                dg.add_arc(u, v);
                dg.add_arc(v, u);
            }
        in.g = g;
        in.dg = dg;
        in.set = {0, n - 1};
        in.k = n;
        in.l = n;
        DpStats stats;
        SolveOptions opt;
        opt.repetitions = 1;
        opt.stats = &stats;
        auto td = heuristic_decompose(decomposition_graph(in));
        auto t0 = std::chrono::steady_clock::now();
        solve_problem(p, in, td, opt);
        double ms = ms_since(t0);
        uint64_t axis = 0;
        for (auto [bag, size] : stats.axis)
            if (bag == t) axis = std::max(axis, size);
        if (as_json)
            rows.push_back({{"bag", t}, {"axis", axis}, {"peak_cells", stats.peak_cells}, {"ms", ms}});
        else
            std::printf("%4d %12llu %12llu %10.1f\n", t, static_cast<unsigned long long>(axis), static_cast<unsigned long long>(stats.peak_cells), ms);
    }
    if (as_json) std::cout << json{{"problem", problem_name(p)}, {"rows", rows}}.dump() << '\n';
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cut&Count solvers for connectivity problems on bounded treewidth graphs"};
    app.require_subcommand(1);

    Config solve_cfg, verify_cfg;
    auto* solve = app.add_subcommand("solve", "Monte Carlo decision: YES or UNKNOWN");
    add_instance_flags(solve, solve_cfg);

    auto* verify = app.add_subcommand("verify", "compare the solver with the brute-force oracle");
    add_instance_flags(verify, verify_cfg);
    verify_cfg.reps = 16;
    int random_count = 0;
    verify->add_option("--random", random_count, "random instances instead of --graph");

    std::string cnf, out = "hard";
    int beta = 1;
    auto* genhard = app.add_subcommand("genhard", "Steiner tree instance from a CNF formula");
    genhard->add_option("--cnf", cnf, "DIMACS CNF")->required();
    genhard->add_option("--beta", beta, "block size")->check(CLI::Range(1, 6));
    genhard->add_option("--out", out, "output prefix");

    std::string dgraph, dout;
    auto* decompose = app.add_subcommand("decompose", "heuristic tree decomposition to PACE .td");
    decompose->add_option("--graph", dgraph, "graph file")->required();
    decompose->add_option("--out", dout, "output .td (stdout when absent)");

    std::string bproblem;
    int bfrom = 3, bto = 6;
    bool bjson = false;
    auto* bench = app.add_subcommand("bench", "coloring-axis and table size per bag size");
    bench->add_option("problem", bproblem, "problem name")->required();
    bench->add_option("--from", bfrom, "smallest bag size");
    bench->add_option("--to", bto, "largest bag size");
    bench->add_flag("--json", bjson, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(solve_cfg);
        if (*verify) return cmd_verify(verify_cfg, random_count);
        if (*genhard) return cmd_genhard(cnf, beta, out);
        if (*decompose) return cmd_decompose(dgraph, dout);
        if (*bench) return cmd_bench(bproblem, bfrom, bto, bjson);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
