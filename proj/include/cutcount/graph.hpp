#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cutcount {

using Edge = std::pair<int, int>;

struct UndirectedGraph {
    int n = 0;
    std::vector<Edge> edges;  // stored with first < second
    bool multigraph = false;

    UndirectedGraph() = default;
    explicit UndirectedGraph(int n_, bool multi = false) : n(n_), multigraph(multi) {}

    // throws on self-loop, bad id, or duplicate when !multigraph
    int add_edge(int u, int v);
    int m() const { return static_cast<int>(edges.size()); }

    std::vector<std::vector<int>> adjacency() const;
    bool has_edge(int u, int v) const;
};

struct DirectedGraph {
    int n = 0;
    std::vector<Edge> arcs;  // (tail, head)

    DirectedGraph() = default;
    explicit DirectedGraph(int n_) : n(n_) {}

    int add_arc(int u, int v);
    int m() const { return static_cast<int>(arcs.size()); }

    std::vector<std::vector<int>> out_adjacency() const;
    // underlying simple undirected graph (antiparallel arcs merged)
    UndirectedGraph underlying() const;
};

using EdgeWeightMap = std::vector<int64_t>;

enum class GraphFormat { PaceGr, EdgeListJson };

using AnyGraph = std::variant<UndirectedGraph, DirectedGraph>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

AnyGraph parse_graph(const std::string& text, GraphFormat fmt, bool multigraph = false);
std::string to_pace_gr(const UndirectedGraph& g);
std::string to_edge_list_json(const UndirectedGraph& g);
std::string to_edge_list_json(const DirectedGraph& g);

struct Subdivision {
    UndirectedGraph graph;
    std::vector<int> origin_edge;  // for vertex id >= old n: index of the edge it subdivides
    std::vector<std::vector<int>> chain;  // per old edge, its internal vertices in order u->v
};

Subdivision subdivide_weighted(const UndirectedGraph& g, const EdgeWeightMap& w);

// small helpers shared by solvers, oracle and tests
bool is_connected(const UndirectedGraph& g);
bool is_connected_subset(const UndirectedGraph& g, const std::vector<char>& in);
bool is_forest_without(const UndirectedGraph& g, const std::vector<char>& removed);
bool is_bipartite_without(const UndirectedGraph& g, const std::vector<char>& removed);
std::vector<int> component_ids(const UndirectedGraph& g, int* count = nullptr);

}  // namespace cutcount
