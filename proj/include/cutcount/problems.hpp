#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutcount/decomposition.hpp"
#include "cutcount/engine.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

enum class Problem {
    Steiner,
    Cvc,
    Cds,
    Coct,
    Fvs,
    Cfvs,
    PccUndirected,
    PccDirected,
    LongestPath,
    Gmtsp,
    KLeafSpanningTree,
    KLeafOutbranching,
    FullDegreeSpanningTree,
    // wrappers over the partial cycle cover
    HamCycle,
    MinCycleCover,
    LongestCycle,
};

const char* problem_name(Problem p);
std::optional<Problem> parse_problem(const std::string& s);
const std::vector<Problem>& all_problems();
// the thirteen counting entry points (no wrappers)
const std::vector<Problem>& core_problems();

// which instance fields a problem reads:
//   steiner                 set = terminals, k = max tree vertices
//   cvc cds coct fvs cfvs   set = required S, k = max solution size
//   pcc                     k = max cycles, l = covered vertices (exactly)
//   longest_path            k = edges on a simple path
//   gmtsp                   k = closed-walk length budget
//   k_leaf_st, outbranching k = exact leaf count (root for outbranching)
//   mfdst                   k = at least k full-degree vertices
//   hamcycle                nothing
//   min_cycle_cover         k = max cycles covering all vertices
//   longest_cycle           k = cycle length at least k
struct Instance {
    bool directed = false;
    UndirectedGraph g;   // undirected problems
    DirectedGraph dg;    // directed problems
    std::vector<int> set;
    int k = 0;
    int l = 0;
    int root = 0;
};

bool problem_is_directed(Problem p, bool directed_flag);
// problems where --directed is meaningful
bool problem_has_both_orientations(Problem p);

// undirected graph used for the decomposition (underlying graph when directed)
UndirectedGraph decomposition_graph(const Instance& in);

MonteCarloAnswer solve_problem(Problem p, const Instance& in, const TreeDecomposition& td, const SolveOptions& opt = {});

}  // namespace cutcount
