#pragma once

#include <vector>

#include "cutcount/engine.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

// Universes
//   pcc (both):          (e, X) -> 2e, (e, M) -> 2e+1
//   gmtsp:               (e, 1) -> 2e, (e, 2) -> 2e+1
//   k-leaf st, mfdst:    e
//   outbranching:        arc a
// The nice decomposition must be built for the same edge (arc) list.

// Coloring digits
//   pcc undirected : 0, 1_1, 1_2, 2
//   pcc directed   : 00, 01_1, 01_2, 10_1, 10_2, 11   (indegree, outdegree)
//   gmtsp          : side * 2 + degree parity
//   k-leaf st      : 0_0, 0_1 (declared leaf, degree so far), 1_1, 1_2
//   outbranching   : s * 2 + s_in with s in {R, 1_1, 1_2}
//   mfdst          : side * 2 + "an incident edge was left out"

// marked cycle covers: exactly l covered vertices, exactly k markers
WParity pcc_undirected_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, int l);
WParity pcc_directed_countc(const WeightFunction& w, const DirectedGraph& g, const NiceTreeDecomposition& td, int k, int l);

// index i = total multiplicity, i in [0, budget]
std::vector<WParity> gmtsp_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, int budget);

// index l = number of declared leaves; v1 must be an internal vertex of the tree
std::vector<WParity> k_leaf_spanning_tree_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, int v1);
std::vector<WParity> k_leaf_outbranching_countc(const WeightFunction& w, const DirectedGraph& g, const NiceTreeDecomposition& td, int root);
// solve sum_k C(k, l) x_k = bar_l over GF(2) for every W
std::vector<WParity> k_leaf_invert(const std::vector<WParity>& bar);

// spanning trees with exactly k full-degree vertices
WParity full_degree_st_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, int k);

// ---- Monte Carlo solvers ----
MonteCarloAnswer solve_pcc(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, int l, const SolveOptions& opt = {});
MonteCarloAnswer solve_pcc(const DirectedGraph& g, const NiceTreeDecomposition& td, int k, int l, const SolveOptions& opt = {});
MonteCarloAnswer solve_hamcycle(const UndirectedGraph& g, const NiceTreeDecomposition& td, const SolveOptions& opt = {});
MonteCarloAnswer solve_hamcycle(const DirectedGraph& g, const NiceTreeDecomposition& td, const SolveOptions& opt = {});
MonteCarloAnswer solve_min_cycle_cover(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt = {});
MonteCarloAnswer solve_min_cycle_cover(const DirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt = {});
// a cycle on at least k vertices
MonteCarloAnswer solve_longest_cycle(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt = {});
MonteCarloAnswer solve_longest_cycle(const DirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt = {});
// closed walk through every vertex of length at most budget
MonteCarloAnswer solve_gmtsp(const UndirectedGraph& g, const NiceTreeDecomposition& td, int budget, const SolveOptions& opt = {});
// exactly k leaves
MonteCarloAnswer solve_k_leaf_spanning_tree(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt = {});
MonteCarloAnswer solve_k_leaf_outbranching(const DirectedGraph& g, const NiceTreeDecomposition& td, int root, int k, const SolveOptions& opt = {});
// at least k full-degree vertices
MonteCarloAnswer solve_full_degree_st(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt = {});

// simple path with k edges; td is a decomposition of g (not nice)
MonteCarloAnswer solve_longest_path(const UndirectedGraph& g, const TreeDecomposition& td, int k, const SolveOptions& opt = {});
MonteCarloAnswer solve_longest_path(const DirectedGraph& g, const TreeDecomposition& td, int k, const SolveOptions& opt = {});

}  // namespace cutcount
