#include "cutcount/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cutcount {

int UndirectedGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("vertex id out of range: " + std::to_string(u) + "," + std::to_string(v));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!multigraph && has_edge(u, v))
        throw GraphError("duplicate edge " + std::to_string(u) + "," + std::to_string(v));
    edges.emplace_back(u, v);
    return m() - 1;
}

bool UndirectedGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end();
}

std::vector<std::vector<int>> UndirectedGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

int DirectedGraph::add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("vertex id out of range: " + std::to_string(u) + "," + std::to_string(v));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (std::find(arcs.begin(), arcs.end(), Edge{u, v}) != arcs.end())
        throw GraphError("duplicate arc " + std::to_string(u) + "," + std::to_string(v));
    arcs.emplace_back(u, v);
    return m() - 1;
}

std::vector<std::vector<int>> DirectedGraph::out_adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : arcs) adj[u].push_back(v);
    return adj;
}

UndirectedGraph DirectedGraph::underlying() const {
    UndirectedGraph g(n);
    std::set<Edge> seen;
    for (auto [u, v] : arcs) {
        Edge e{std::min(u, v), std::max(u, v)};
        if (seen.insert(e).second) g.add_edge(e.first, e.second);
    }
    return g;
}

namespace {

AnyGraph parse_pace(const std::string& text, bool multigraph) {
    std::istringstream in(text);
    std::string line;
    bool header = false;
    bool directed = false;
    int n = 0;
    long declared = 0;
    UndirectedGraph ug;
    DirectedGraph dg;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!header) {
            std::string p, kind;
            ls >> p >> kind >> n >> declared;
            if (!ls || p != "p" || (kind != "tw" && kind != "ds" && kind != "dtw") || n < 0 || declared < 0)
                throw GraphError("malformed PACE header: " + line);
            directed = kind == "dtw";
            header = true;
            ug = UndirectedGraph(n, multigraph);
            dg = DirectedGraph(n);
            continue;
        }
        long a, b;
        if (!(ls >> a >> b)) throw GraphError("malformed edge line: " + line);
        if (a < 1 || b < 1 || a > n || b > n) throw GraphError("vertex id out of range in line: " + line);
        if (directed)
            dg.add_arc(static_cast<int>(a - 1), static_cast<int>(b - 1));
        else
            ug.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (!header) throw GraphError("missing PACE header");
    long got = directed ? dg.m() : ug.m();
    if (got != declared) throw GraphError("edge count mismatch: header says " + std::to_string(declared));
    if (directed) return dg;
    return ug;
}

AnyGraph parse_json(const std::string& text, bool multigraph) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("bad json: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw GraphError("json graph needs integer n");
    int n = j["n"].get<int>();
    if (n < 0) throw GraphError("negative n");
    bool directed = j.value("directed", false);
    auto edges = j.value("edges", nlohmann::json::array());
    if (directed) {
        DirectedGraph g(n);
        for (auto& e : edges) g.add_arc(e.at(0).get<int>(), e.at(1).get<int>());
        return g;
    }
    UndirectedGraph g(n, multigraph);
    for (auto& e : edges) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

}  // namespace

AnyGraph parse_graph(const std::string& text, GraphFormat fmt, bool multigraph) {
    if (fmt == GraphFormat::PaceGr) return parse_pace(text, multigraph);
    return parse_json(text, multigraph);
}

std::string to_pace_gr(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "p tw " << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string to_edge_list_json(const UndirectedGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["directed"] = false;
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    return j.dump();
}

std::string to_edge_list_json(const DirectedGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["directed"] = true;
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.arcs) j["edges"].push_back({u, v});
    return j.dump();
}

Subdivision subdivide_weighted(const UndirectedGraph& g, const EdgeWeightMap& w) {
    if (static_cast<int>(w.size()) != g.m()) throw GraphError("weight map size mismatch");
    constexpr int64_t kLimit = 50'000'000;
    int64_t extra = 0;
    for (auto c : w)
        if (c < 1) throw GraphError("edge weight must be positive");
    for (auto c : w) {
        // compare before adding so huge weights cannot overflow
        if (c - 1 > kLimit - g.n - extra) throw GraphError("subdivided graph would exceed " + std::to_string(kLimit) + " vertices");
        extra += c - 1;
    }
    Subdivision s;
    s.graph = UndirectedGraph(static_cast<int>(g.n + extra), true);
    s.origin_edge.assign(s.graph.n, -1);
    s.chain.resize(g.m());
    int next = g.n;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        int prev = u;
        for (int64_t i = 1; i < w[e]; ++i) {
            s.origin_edge[next] = e;
            s.chain[e].push_back(next);
            s.graph.edges.emplace_back(std::min(prev, next), std::max(prev, next));
            prev = next++;
        }
        s.graph.edges.emplace_back(std::min(prev, v), std::max(prev, v));
    }
    s.graph.multigraph = g.multigraph;
    return s;
}

std::vector<int> component_ids(const UndirectedGraph& g, int* count) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges) parent[find(u)] = find(v);
    std::vector<int> id(g.n, -1), root_id(g.n, -1);
    int c = 0;
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (root_id[r] < 0) root_id[r] = c++;
        id[v] = root_id[r];
    }
    if (count) *count = c;
    return id;
}

bool is_connected(const UndirectedGraph& g) {
    int c = 0;
    component_ids(g, &c);
    return c <= 1;
}

bool is_connected_subset(const UndirectedGraph& g, const std::vector<char>& in) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges)
        if (in[u] && in[v]) parent[find(u)] = find(v);
    int root = -1;
    for (int v = 0; v < g.n; ++v) {
        if (!in[v]) continue;
        if (root < 0)
            root = find(v);
        else if (find(v) != root)
            return false;
    }
    return root >= 0;
}

bool is_forest_without(const UndirectedGraph& g, const std::vector<char>& removed) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges) {
        if (removed[u] || removed[v]) continue;
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

bool is_bipartite_without(const UndirectedGraph& g, const std::vector<char>& removed) {
    auto adj = g.adjacency();
    std::vector<int> side(g.n, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (removed[s] || side[s] >= 0) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (removed[v]) continue;
                if (side[v] < 0) {
                    side[v] = side[u] ^ 1;
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace cutcount
