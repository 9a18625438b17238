#pragma once

#include <vector>

#include "cutcount/engine.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

// Universes (element ids of the WeightFunction):
//   steiner, cvc, cds:  vertex v -> v
//   coct:               (v, X) -> 2v, (v, L) -> 2v+1
//   fvs, cfvs:          (v, F) -> 2v, (v, M) -> 2v+1
size_t vertex_universe(int n);
size_t paired_universe(int n);

// Coloring digits
//   steiner / cvc / fvs : 0, 1_1, 1_2
//   cds                 : 0_N, 0_Y, 1_1, 1_2
//   coct                : 0_L, 0_R, 1_1, 1_2
//   cfvs                : 0_1, 0_2, 1_1, 1_2

// per-W parity of the candidate counts for one size slice (Exact mode)
WParity steiner_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& T, int k);
// S must be nonempty; v1 = min(S) is fixed to side 1
WParity cvc_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k);
WParity cds_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k);
WParity coct_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k);
// A forest vertices, B forest edges, C markers; S is forced out of the forest
WParity fvs_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int A, int B, int C);
// S nonempty, v1 = min(S) on side Y_1
WParity cfvs_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int A, int B, int C);

// user-facing Monte Carlo solvers, all answering "solution of size at most k"
MonteCarloAnswer solve_steiner(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& T, int k, const SolveOptions& opt = {});
MonteCarloAnswer solve_cvc(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt = {});
MonteCarloAnswer solve_cds(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt = {});
MonteCarloAnswer solve_coct(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt = {});
MonteCarloAnswer solve_fvs(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt = {});
MonteCarloAnswer solve_cfvs(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt = {});

// ---- lower level, shared with the compression solvers ----

struct VertexRun {
    const WeightFunction* w = nullptr;
    const WeightAlgebra* alg = nullptr;
    std::vector<char> required;  // forced into the connected side (X for cvc, Y for cfvs, out of forest for fvs)
    int v1 = -1;
    DpOptions dp;
};

// root tables; accumulator layout: field 0 = size / forest vertices,
// fvs and cfvs: field 1 = edges, field 2 = markers (merged into field 1 when !split)
ParityTable cvc_root(const UndirectedGraph& g, const NiceTreeDecomposition& td, const VertexRun& run, int kmax);
ParityTable fvs_root(const UndirectedGraph& g, const NiceTreeDecomposition& td, const VertexRun& run, bool split);
ParityTable cfvs_root(const UndirectedGraph& g, const NiceTreeDecomposition& td, const VertexRun& run, bool split);

// nonzero cell for "forest of A vertices, one marker per component" in a merged fvs/cfvs root
bool forest_slice_nonzero(const ParityTable& root, int A);

// vertex sets every solution must meet, used to pick v1 when S is empty
std::vector<int> shortest_cycle(const UndirectedGraph& g);
std::vector<int> shortest_odd_cycle(const UndirectedGraph& g);

}  // namespace cutcount
