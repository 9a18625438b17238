#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcount/decomposition.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

// literals are +v / -v with v in [1, vars]
struct Cnf {
    int vars = 0;
    std::vector<std::vector<int>> clauses;
};

struct CnfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Cnf parse_dimacs(const std::string& text);
bool satisfies(const Cnf& f, const std::vector<bool>& assignment);  // assignment[v] for v in [1, vars]
// exhaustive; empty when unsatisfiable
std::optional<std::vector<bool>> brute_force_sat(const Cnf& f);

struct GadgetParams {
    int beta = 1;
    int beta_vars = 1;  // floor(log2 3^beta)
    int groups = 1;     // n'
    int clauses = 1;    // m
    int columns = 1;    // a_1 = m (5 beta n' + 1)
    int64_t N = 0;      // vertex count of the generated graph
    int64_t a[7] = {};  // a[1..6]
};

// vertex ids by gadget coordinates; F = group, b = column (0-based), l = position in the group
struct GadgetMap {
    int root = 0;
    // [F][b][l][j], j in {0,1,2}
    std::vector<std::vector<std::vector<std::vector<int>>>> v, guard;
    // [F][b][l][j], j in {0,1}
    std::vector<std::vector<std::vector<std::vector<int>>>> h;
    // [F][b][S], S = index of the sequence in {1,2,3}^beta, first coordinate most significant
    std::vector<std::vector<std::vector<int>>> x, xp;
    // [F][b][l] for b < a_1 - 1
    std::vector<std::vector<std::vector<int>>> p, q;
    std::vector<std::vector<int>> w;  // [F][l]
    std::vector<std::vector<int>> c;  // [clause][j], j < 5 beta n' + 1
};

struct HardInstance {
    GadgetParams params;
    UndirectedGraph g;
    EdgeWeightMap weight;  // per edge of g
    std::vector<int> terminals;
    int64_t K = 0;
    PathDecomposition pd;
    GadgetMap map;
    std::vector<int> witness;  // edge ids, filled when an assignment is supplied
};

// the extra bag slots over beta n' are 10 beta + 2 * 3^beta + 1, so this c covers beta >= 1
inline constexpr int kWidthSlack = 6;

inline int64_t width_bound(const GadgetParams& p) {
    int64_t pow3 = 1;
    for (int i = 0; i < p.beta; ++i) pow3 *= 3;
    return int64_t{p.beta} * p.groups + kWidthSlack * pow3;
}

GadgetParams gadget_params(int vars, int clauses, int beta);
// sequence of {1,2,3}^beta assigned to a group assignment (bit i = variable i of the group)
std::vector<int> sequence_of(int assignment, int beta);

// assignment (indexed from 1) adds the explicit spanning tree and checks that it weighs exactly K
HardInstance gen_steiner(const Cnf& f, int beta, const std::optional<std::vector<bool>>& assignment = std::nullopt);
PathDecomposition gen_path_decomposition(const HardInstance& inst);

// edge set forms a tree containing every terminal
bool is_steiner_tree(const UndirectedGraph& g, const std::vector<int>& terminals, const std::vector<int>& edge_ids);
int64_t edge_weight_sum(const HardInstance& inst, const std::vector<int>& edge_ids);

struct UnweightedInstance {
    UndirectedGraph g;
    std::vector<int> terminals;
    int64_t K_edges = 0;  // a Steiner tree with at most this many edges
    PathDecomposition pd;
};

// subdivides every edge weight - 1 times; throws GraphError past the subdivision size guard
UnweightedInstance to_unweighted(const HardInstance& inst);
// vertex count to_unweighted would produce
int64_t subdivided_size(const HardInstance& inst);

std::string hard_instance_json(const HardInstance& inst);

}  // namespace cutcount
