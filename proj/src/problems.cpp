#include "cutcount/problems.hpp"

#include <stdexcept>

#include "cutcount/edge_solvers.hpp"
#include "cutcount/vertex_solvers.hpp"

namespace cutcount {

namespace {

struct NameEntry {
    Problem p;
    const char* name;
};

const NameEntry kNames[] = {
    {Problem::Steiner, "steiner"},
    {Problem::Cvc, "cvc"},
    {Problem::Cds, "cds"},
    {Problem::Coct, "coct"},
    {Problem::Fvs, "fvs"},
    {Problem::Cfvs, "cfvs"},
    {Problem::PccUndirected, "pcc"},
    {Problem::PccDirected, "dpcc"},
    {Problem::LongestPath, "longest_path"},
    {Problem::Gmtsp, "gmtsp"},
    {Problem::KLeafSpanningTree, "k_leaf_st"},
    {Problem::KLeafOutbranching, "outbranching"},
    {Problem::FullDegreeSpanningTree, "mfdst"},
    {Problem::HamCycle, "hamcycle"},
    {Problem::MinCycleCover, "min_cycle_cover"},
    {Problem::LongestCycle, "longest_cycle"},
};

}  // namespace

const char* problem_name(Problem p) {
    for (auto& e : kNames)
        if (e.p == p) return e.name;
    return "?";
}

std::optional<Problem> parse_problem(const std::string& s) {
    for (auto& e : kNames)
        if (s == e.name) return e.p;
    return std::nullopt;
}

const std::vector<Problem>& all_problems() {
    static const std::vector<Problem> all = [] {
        std::vector<Problem> v;
        for (auto& e : kNames) v.push_back(e.p);
        return v;
    }();
    return all;
}

const std::vector<Problem>& core_problems() {
    static const std::vector<Problem> core(all_problems().begin(), all_problems().begin() + 13);
    return core;
}

bool problem_is_directed(Problem p, bool directed_flag) {
    if (p == Problem::PccDirected || p == Problem::KLeafOutbranching) return true;
    return problem_has_both_orientations(p) && directed_flag;
}

bool problem_has_both_orientations(Problem p) {
    return p == Problem::LongestPath || p == Problem::HamCycle || p == Problem::MinCycleCover || p == Problem::LongestCycle;
}

UndirectedGraph decomposition_graph(const Instance& in) {
    return in.directed ? in.dg.underlying() : in.g;
}

MonteCarloAnswer solve_problem(Problem p, const Instance& in, const TreeDecomposition& td, const SolveOptions& opt) {
    bool directed = problem_is_directed(p, in.directed);
    if (directed != in.directed)
        throw std::invalid_argument(std::string(problem_name(p)) + (directed ? " needs a directed graph" : " needs an undirected graph"));
    auto bad = validate(td, decomposition_graph(in));
    if (!bad.empty()) throw DecompositionError("invalid decomposition: " + bad.front());

    if (p == Problem::LongestPath)
        return directed ? solve_longest_path(in.dg, td, in.k, opt) : solve_longest_path(in.g, td, in.k, opt);

    if (directed) {
        auto ntd = make_nice(td, in.dg);
        const auto& g = in.dg;
        switch (p) {
        case Problem::PccDirected: return solve_pcc(g, ntd, in.k, in.l, opt);
        case Problem::KLeafOutbranching: return solve_k_leaf_outbranching(g, ntd, in.root, in.k, opt);
        case Problem::HamCycle: return solve_hamcycle(g, ntd, opt);
        case Problem::MinCycleCover: return solve_min_cycle_cover(g, ntd, in.k, opt);
        case Problem::LongestCycle: return solve_longest_cycle(g, ntd, in.k, opt);
        default: break;
        }
        throw std::logic_error("unhandled directed problem");
    }

    auto ntd = make_nice(td, in.g);
    const auto& g = in.g;
    switch (p) {
    case Problem::Steiner: return solve_steiner(g, ntd, in.set, in.k, opt);
    case Problem::Cvc: return solve_cvc(g, ntd, in.set, in.k, opt);
    case Problem::Cds: return solve_cds(g, ntd, in.set, in.k, opt);
    case Problem::Coct: return solve_coct(g, ntd, in.set, in.k, opt);
    case Problem::Fvs: return solve_fvs(g, ntd, in.set, in.k, opt);
    case Problem::Cfvs: return solve_cfvs(g, ntd, in.set, in.k, opt);
    case Problem::PccUndirected: return solve_pcc(g, ntd, in.k, in.l, opt);
    case Problem::Gmtsp: return solve_gmtsp(g, ntd, in.k, opt);
    case Problem::KLeafSpanningTree: return solve_k_leaf_spanning_tree(g, ntd, in.k, opt);
    case Problem::FullDegreeSpanningTree: return solve_full_degree_st(g, ntd, in.k, opt);
    case Problem::HamCycle: return solve_hamcycle(g, ntd, opt);
    case Problem::MinCycleCover: return solve_min_cycle_cover(g, ntd, in.k, opt);
    case Problem::LongestCycle: return solve_longest_cycle(g, ntd, in.k, opt);
    default: break;
    }
    throw std::logic_error("unhandled problem");
}

}  // namespace cutcount
