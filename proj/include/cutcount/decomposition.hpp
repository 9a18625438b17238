#pragma once

#include <string>
#include <vector>

#include "cutcount/graph.hpp"

namespace cutcount {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<Edge> tree;  // edges between bag ids
    int root = 0;

    int width() const;
};

struct PathDecomposition {
    std::vector<std::vector<int>> bags;

    int width() const;
    TreeDecomposition to_tree() const;
};

enum class NodeType { Leaf, IntroduceVertex, IntroduceEdge, Forget, Join };

struct NiceNode {
    NodeType type = NodeType::Leaf;
    int vertex = -1;      // introduce / forget
    int edge = -1;        // introduce-edge: index into the edge list the decomposition was built for
    int u = -1, v = -1;   // introduce-edge endpoints (tail, head for arcs)
    std::vector<int> children;
    std::vector<int> bag;  // sorted
};

// nodes are stored children-first; root is the last node
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
    TreeDecomposition as_tree() const;
};

// violation messages; empty means valid
std::vector<std::string> validate(const TreeDecomposition& td, int n, const std::vector<Edge>& edges);
std::vector<std::string> validate(const TreeDecomposition& td, const UndirectedGraph& g);
std::vector<std::string> validate(const PathDecomposition& pd, const UndirectedGraph& g);
std::vector<std::string> validate(const NiceTreeDecomposition& ntd, int n, const std::vector<Edge>& edges);
std::vector<std::string> validate(const NiceTreeDecomposition& ntd, const UndirectedGraph& g);
std::vector<std::string> validate(const NiceTreeDecomposition& ntd, const DirectedGraph& g);

struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// edges may contain antiparallel arcs; each list entry gets its own IntroduceEdge node
NiceTreeDecomposition make_nice(const TreeDecomposition& td, int n, const std::vector<Edge>& edges);
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const UndirectedGraph& g);
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const DirectedGraph& g);

TreeDecomposition heuristic_decompose(const UndirectedGraph& g);
TreeDecomposition heuristic_decompose(const DirectedGraph& g);

PathDecomposition pd_after_subdivision(const PathDecomposition& pd, const UndirectedGraph& g, const EdgeWeightMap& w);

// PACE 2017 .td
std::string to_pace_td(const TreeDecomposition& td, int n);
TreeDecomposition parse_pace_td(const std::string& text);
std::string nice_to_json(const NiceTreeDecomposition& ntd);

}  // namespace cutcount
