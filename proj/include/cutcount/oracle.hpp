#pragma once

#include <stdexcept>
#include <vector>

#include "cutcount/decomposition.hpp"
#include "cutcount/engine.hpp"
#include "cutcount/graph.hpp"
#include "cutcount/problems.hpp"

namespace cutcount {

struct OracleLimit {
    int max_n = 14;
    int max_edges = 22;
};

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Optimal values by exhaustive search; -1 when no feasible solution exists.
// The empty vertex set counts as connected (see the k = 0 conventions).
int oracle_steiner_min(const UndirectedGraph& g, const std::vector<int>& T, const OracleLimit& lim = {});
int oracle_cvc_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim = {});
int oracle_cds_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim = {});
int oracle_coct_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim = {});
int oracle_fvs_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim = {});
int oracle_cfvs_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim = {});

// at most k vertex-disjoint cycles covering exactly l vertices
bool oracle_pcc(const UndirectedGraph& g, int k, int l, const OracleLimit& lim = {});
bool oracle_pcc(const DirectedGraph& g, int k, int l, const OracleLimit& lim = {});
// minimum number of cycles covering exactly l vertices, -1 if impossible
int oracle_pcc_min_cycles(const UndirectedGraph& g, int l, const OracleLimit& lim = {});
int oracle_pcc_min_cycles(const DirectedGraph& g, int l, const OracleLimit& lim = {});

// edges on a longest simple path
int oracle_longest_path(const UndirectedGraph& g, const OracleLimit& lim = {});
int oracle_longest_path(const DirectedGraph& g, const OracleLimit& lim = {});
// vertices on a longest cycle, 0 if acyclic
int oracle_longest_cycle(const UndirectedGraph& g, const OracleLimit& lim = {});
int oracle_longest_cycle(const DirectedGraph& g, const OracleLimit& lim = {});

// shortest closed walk visiting every vertex, -1 when disconnected
int oracle_gmtsp(const UndirectedGraph& g, const OracleLimit& lim = {});

// leaf counts achievable by spanning trees / outbranchings from root
std::vector<char> oracle_leaf_counts(const UndirectedGraph& g, const OracleLimit& lim = {});
std::vector<char> oracle_outbranching_leaf_counts(const DirectedGraph& g, int root, const OracleLimit& lim = {});
// max number of full-degree vertices over spanning trees, -1 when disconnected
int oracle_full_degree_max(const UndirectedGraph& g, const OracleLimit& lim = {});

// literal yes/no answer for the instance semantics of problems.hpp
bool oracle_solve(Problem p, const Instance& in, const OracleLimit& lim = {});

// Random instance near the yes/no boundary: the parameter is placed one
// step either side of (or at) the oracle optimum. Rejection-samples graphs
// until the heuristic width and the oracle edge limit are respected.
struct RandomSpec {
    int min_n = 3;
    int max_n = 10;
    int max_width = 5;
    OracleLimit limit;
};

struct RandomInstance {
    Instance in;
    TreeDecomposition td;
    bool answer = false;  // oracle verdict
};

RandomInstance random_instance(Problem p, Rng& rng, const RandomSpec& spec = {});

}  // namespace cutcount
