#include "cutcount/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cutcount {

namespace {

int max_bag(const std::vector<std::vector<int>>& bags) {
    size_t best = 0;
    for (auto& b : bags) best = std::max(best, b.size());
    return static_cast<int>(best) - 1;
}

bool contains(const std::vector<int>& sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::vector<std::vector<int>> sorted_bags(const std::vector<std::vector<int>>& bags) {
    auto out = bags;
    for (auto& b : out) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    return out;
}

}  // namespace

int TreeDecomposition::width() const { return max_bag(bags); }
int PathDecomposition::width() const { return max_bag(bags); }

TreeDecomposition PathDecomposition::to_tree() const {
    TreeDecomposition td;
    td.bags = bags;
    for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) td.tree.emplace_back(i, i + 1);
    td.root = 0;
    return td;
}

int NiceTreeDecomposition::width() const {
    size_t best = 0;
    for (auto& x : nodes) best = std::max(best, x.bag.size());
    return static_cast<int>(best) - 1;
}

TreeDecomposition NiceTreeDecomposition::as_tree() const {
    TreeDecomposition td;
    for (auto& x : nodes) td.bags.push_back(x.bag);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        for (int c : nodes[i].children) td.tree.emplace_back(c, i);
    td.root = root;
    return td;
}

std::vector<std::string> validate(const TreeDecomposition& td0, int n, const std::vector<Edge>& edges) {
    std::vector<std::string> bad;
    auto bags = sorted_bags(td0.bags);
    int nb = static_cast<int>(bags.size());
    for (int i = 0; i < nb; ++i)
        for (int v : bags[i])
            if (v < 0 || v >= n) bad.push_back("bag " + std::to_string(i) + " has out-of-range vertex " + std::to_string(v));
    if (!bad.empty()) return bad;
    if (nb == 0) {
        if (n > 0) bad.push_back("no bags for nonempty graph");
        return bad;
    }
    // tree shape
    if (static_cast<int>(td0.tree.size()) != nb - 1) bad.push_back("decomposition graph has " + std::to_string(td0.tree.size()) + " edges, need " + std::to_string(nb - 1));
    std::vector<int> parent(nb);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : td0.tree) {
        if (a < 0 || b < 0 || a >= nb || b >= nb) {
            bad.push_back("tree edge refers to missing bag");
            return bad;
        }
        int ra = find(a), rb = find(b);
        if (ra == rb) bad.push_back("tree has a cycle through bags " + std::to_string(a) + "," + std::to_string(b));
        parent[ra] = rb;
    }
    for (int i = 1; i < nb; ++i)
        if (find(i) != find(0)) {
            bad.push_back("decomposition tree is disconnected");
            break;
        }
    // vertex coverage and connectivity: bags holding v induce a forest, so connected iff edges = bags - 1
    std::vector<int> occ(n, 0), links(n, 0);
    for (auto& b : bags)
        for (int v : b) ++occ[v];
    for (auto [a, b] : td0.tree) {
        std::vector<int> common;
        std::set_intersection(bags[a].begin(), bags[a].end(), bags[b].begin(), bags[b].end(), std::back_inserter(common));
        for (int v : common) ++links[v];
    }
    for (int v = 0; v < n; ++v) {
        if (occ[v] == 0)
            bad.push_back("vertex " + std::to_string(v) + " not covered");
        else if (links[v] != occ[v] - 1)
            bad.push_back("bags containing vertex " + std::to_string(v) + " are not connected");
    }
    // edge coverage
    std::vector<std::vector<int>> where(n);
    for (int i = 0; i < nb; ++i)
        for (int v : bags[i]) where[v].push_back(i);
    for (auto [u, v] : edges) {
        bool ok = false;
        for (int i : where[u])
            if (contains(bags[i], v)) {
                ok = true;
                break;
            }
        if (!ok) bad.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " not covered");
    }
    return bad;
}

std::vector<std::string> validate(const TreeDecomposition& td, const UndirectedGraph& g) { return validate(td, g.n, g.edges); }
std::vector<std::string> validate(const PathDecomposition& pd, const UndirectedGraph& g) { return validate(pd.to_tree(), g.n, g.edges); }

std::vector<std::string> validate(const NiceTreeDecomposition& ntd, int n, const std::vector<Edge>& edges) {
    std::vector<std::string> bad;
    int nn = static_cast<int>(ntd.nodes.size());
    if (nn == 0 || ntd.root != nn - 1) {
        bad.push_back("root must be the last node");
        return bad;
    }
    std::vector<int> parents(nn, 0);
    std::vector<int> introduced(edges.size(), 0);
    for (int i = 0; i < nn; ++i) {
        auto& x = ntd.nodes[i];
        std::string at = "node " + std::to_string(i) + ": ";
        if (!std::is_sorted(x.bag.begin(), x.bag.end())) bad.push_back(at + "bag not sorted");
        for (int c : x.children) {
            if (c < 0 || c >= i) bad.push_back(at + "child not before parent");
            else ++parents[c];
        }
        if (!bad.empty()) return bad;
        auto child_bag = [&](int k) -> const std::vector<int>& { return ntd.nodes[x.children[k]].bag; };
        switch (x.type) {
        case NodeType::Leaf:
            if (!x.children.empty() || !x.bag.empty()) bad.push_back(at + "leaf must be empty with no children");
            break;
        case NodeType::IntroduceVertex: {
            if (x.children.size() != 1) { bad.push_back(at + "introduce needs one child"); break; }
            auto b = child_bag(0);
            if (contains(b, x.vertex)) bad.push_back(at + "introduced vertex already present");
            b.push_back(x.vertex);
            std::sort(b.begin(), b.end());
            if (b != x.bag) bad.push_back(at + "introduce bag mismatch");
            break;
        }
        case NodeType::Forget: {
            if (x.children.size() != 1) { bad.push_back(at + "forget needs one child"); break; }
            auto b = x.bag;
            if (contains(b, x.vertex)) bad.push_back(at + "forgotten vertex still present");
            b.push_back(x.vertex);
            std::sort(b.begin(), b.end());
            if (b != child_bag(0)) bad.push_back(at + "forget bag mismatch");
            break;
        }
        case NodeType::IntroduceEdge:
            if (x.children.size() != 1) { bad.push_back(at + "introduce-edge needs one child"); break; }
            if (child_bag(0) != x.bag) bad.push_back(at + "introduce-edge changes bag");
            if (x.edge < 0 || x.edge >= static_cast<int>(edges.size())) { bad.push_back(at + "edge index out of range"); break; }
            if (edges[x.edge] != Edge{x.u, x.v}) bad.push_back(at + "edge endpoints mismatch");
            if (!contains(x.bag, x.u) || !contains(x.bag, x.v)) bad.push_back(at + "edge endpoints not in bag");
            ++introduced[x.edge];
            break;
        case NodeType::Join:
            if (x.children.size() != 2) { bad.push_back(at + "join needs two children"); break; }
            if (child_bag(0) != x.bag || child_bag(1) != x.bag) bad.push_back(at + "join bags differ");
            break;
        }
    }
    for (int i = 0; i + 1 < nn; ++i)
        if (parents[i] != 1) bad.push_back("node " + std::to_string(i) + " has " + std::to_string(parents[i]) + " parents");
    if (!ntd.nodes[ntd.root].bag.empty()) bad.push_back("root bag not empty");
    for (size_t e = 0; e < edges.size(); ++e)
        if (introduced[e] != 1)
            bad.push_back("edge " + std::to_string(edges[e].first) + "-" + std::to_string(edges[e].second) + " introduced " + std::to_string(introduced[e]) + " times");
    auto more = validate(ntd.as_tree(), n, edges);
    bad.insert(bad.end(), more.begin(), more.end());
    return bad;
}

std::vector<std::string> validate(const NiceTreeDecomposition& ntd, const UndirectedGraph& g) { return validate(ntd, g.n, g.edges); }
std::vector<std::string> validate(const NiceTreeDecomposition& ntd, const DirectedGraph& g) { return validate(ntd, g.n, g.arcs); }

NiceTreeDecomposition make_nice(const TreeDecomposition& td0, int n, const std::vector<Edge>& edges) {
    std::vector<Edge> undirected;
    for (auto [u, v] : edges) undirected.emplace_back(std::min(u, v), std::max(u, v));
    auto problems = validate(td0, n, undirected);
    if (!problems.empty()) throw DecompositionError("invalid tree decomposition: " + problems.front());

    auto bags = sorted_bags(td0.bags);
    int nb = static_cast<int>(bags.size());
    std::vector<NiceNode> nodes;
    auto add = [&](NiceNode x) {
        nodes.push_back(std::move(x));
        return static_cast<int>(nodes.size()) - 1;
    };
    auto introduce = [&](int child, int v) {
        NiceNode x;
        x.type = NodeType::IntroduceVertex;
        x.vertex = v;
        x.children = {child};
        x.bag = nodes[child].bag;
        x.bag.insert(std::upper_bound(x.bag.begin(), x.bag.end(), v), v);
        return add(std::move(x));
    };
    auto forget = [&](int child, int v) {
        NiceNode x;
        x.type = NodeType::Forget;
        x.vertex = v;
        x.children = {child};
        x.bag = nodes[child].bag;
        x.bag.erase(std::find(x.bag.begin(), x.bag.end(), v));
        return add(std::move(x));
    };
    // move from node `cur` to the target bag: forgets first, then introduces
    auto transition = [&](int cur, const std::vector<int>& target) {
        auto have = nodes[cur].bag;
        for (int v : have)
            if (!contains(target, v)) cur = forget(cur, v);
        for (int v : target)
            if (!contains(have, v)) cur = introduce(cur, v);
        return cur;
    };

    if (nb == 0) {
        int leaf = add(NiceNode{});
        return NiceTreeDecomposition{nodes, leaf};
    }

    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : td0.tree) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int root = (td0.root >= 0 && td0.root < nb) ? td0.root : 0;
    std::vector<int> par(nb, -1), order;
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        int b = stack.back();
        stack.pop_back();
        order.push_back(b);
        for (int c : adj[b])
            if (!seen[c]) {
                seen[c] = 1;
                par[c] = b;
                stack.push_back(c);
            }
    }
    std::vector<std::vector<int>> kids(nb);
    for (int b : order)
        if (par[b] >= 0) kids[par[b]].push_back(b);
    std::vector<int> top(nb, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int b = *it;
        std::vector<int> subs;
        for (int c : kids[b]) subs.push_back(transition(top[c], bags[b]));
        if (subs.empty()) subs.push_back(transition(add(NiceNode{}), bags[b]));
        int cur = subs[0];
        for (size_t i = 1; i < subs.size(); ++i) {
            NiceNode j;
            j.type = NodeType::Join;
            j.children = {cur, subs[i]};
            j.bag = bags[b];
            cur = add(std::move(j));
        }
        top[b] = cur;
    }
    int last = transition(top[root], {});

    // splice edge nodes above the first node (in this children-first order) holding both endpoints
    int nn = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> hang(nn);
    std::vector<std::vector<int>> holders(n);
    for (int i = 0; i < nn; ++i)
        if (nodes[i].type == NodeType::IntroduceVertex) holders[nodes[i].vertex].push_back(i);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        auto [u, v] = edges[e];
        int best = -1;
        // the first node containing both is an introduce of one of them
        for (int i : holders[u])
            if (contains(nodes[i].bag, v) && (best < 0 || i < best)) best = i;
        for (int i : holders[v])
            if (contains(nodes[i].bag, u) && (best < 0 || i < best)) best = i;
        if (best < 0) throw DecompositionError("edge not covered after nicification");
        hang[best].push_back(e);
    }
    NiceTreeDecomposition out;
    std::vector<int> remap(nn, -1);
    for (int i = 0; i < nn; ++i) {
        NiceNode x = nodes[i];
        for (int& c : x.children) c = remap[c];
        out.nodes.push_back(std::move(x));
        int cur = static_cast<int>(out.nodes.size()) - 1;
        for (int e : hang[i]) {
            NiceNode y;
            y.type = NodeType::IntroduceEdge;
            y.edge = e;
            y.u = edges[e].first;
            y.v = edges[e].second;
            y.children = {cur};
            y.bag = out.nodes[cur].bag;
            out.nodes.push_back(std::move(y));
            cur = static_cast<int>(out.nodes.size()) - 1;
        }
        remap[i] = cur;
    }
    out.root = remap[last];
    return out;
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const UndirectedGraph& g) { return make_nice(td, g.n, g.edges); }
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const DirectedGraph& g) { return make_nice(td, g.n, g.arcs); }

TreeDecomposition heuristic_decompose(const UndirectedGraph& g) {
    TreeDecomposition td;
    if (g.n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<int> pos(g.n, -1);
    std::vector<std::vector<int>> nbrs(g.n);
    std::vector<char> gone(g.n, 0);
    std::vector<int> elim;
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!gone[v] && (best < 0 || adj[v].size() < adj[best].size())) best = v;
        pos[best] = step;
        elim.push_back(best);
        nbrs[best].assign(adj[best].begin(), adj[best].end());
        for (int a : nbrs[best]) {
            adj[a].erase(best);
            for (int b : nbrs[best])
                if (a != b) adj[a].insert(b);
        }
        gone[best] = 1;
        adj[best].clear();
    }
    for (int i = 0; i < g.n; ++i) {
        int v = elim[i];
        std::vector<int> bag = nbrs[v];
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);
    }
    int prev_root = -1;
    for (int i = 0; i < g.n; ++i) {
        int v = elim[i];
        if (nbrs[v].empty()) {
            // component root: chain roots together, they share no vertices
            if (prev_root >= 0) td.tree.emplace_back(prev_root, i);
            prev_root = i;
            continue;
        }
        int p = g.n;
        for (int a : nbrs[v]) p = std::min(p, pos[a]);
        td.tree.emplace_back(i, p);
    }
    td.root = prev_root;
    return td;
}

TreeDecomposition heuristic_decompose(const DirectedGraph& g) { return heuristic_decompose(g.underlying()); }

PathDecomposition pd_after_subdivision(const PathDecomposition& pd, const UndirectedGraph& g, const EdgeWeightMap& w) {
    auto problems = validate(pd, g);
    if (!problems.empty()) throw DecompositionError("invalid path decomposition: " + problems.front());
    auto sub = subdivide_weighted(g, w);
    auto bags = sorted_bags(pd.bags);
    std::vector<std::vector<int>> after(bags.size());
    for (int e = 0; e < g.m(); ++e) {
        if (w[e] == 1) continue;
        auto [u, v] = g.edges[e];
        for (size_t i = 0; i < bags.size(); ++i)
            if (contains(bags[i], u) && contains(bags[i], v)) {
                after[i].push_back(e);
                break;
            }
    }
    PathDecomposition out;
    for (size_t i = 0; i < bags.size(); ++i) {
        out.bags.push_back(bags[i]);
        for (int e : after[i]) {
            auto [u, v] = g.edges[e];
            std::vector<int> path{u};
            path.insert(path.end(), sub.chain[e].begin(), sub.chain[e].end());
            path.push_back(v);
            for (size_t j = 0; j + 1 < path.size(); ++j) {
                auto b = bags[i];
                b.push_back(path[j]);
                b.push_back(path[j + 1]);
                std::sort(b.begin(), b.end());
                b.erase(std::unique(b.begin(), b.end()), b.end());
                out.bags.push_back(std::move(b));
            }
        }
    }
    return out;
}

std::string to_pace_td(const TreeDecomposition& td, int n) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

TreeDecomposition parse_pace_td(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    TreeDecomposition td;
    long nbags = -1, maxbag = 0, n = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s, kind;
            ls >> s >> kind >> nbags >> maxbag >> n;
            if (!ls || kind != "td" || nbags < 0) throw DecompositionError("malformed td header: " + line);
            td.bags.assign(nbags, {});
            continue;
        }
        if (nbags < 0) throw DecompositionError("td body before header");
        if (line[0] == 'b') {
            std::string b;
            long id, v;
            ls >> b >> id;
            if (!ls || id < 1 || id > nbags) throw DecompositionError("bad bag line: " + line);
            while (ls >> v) {
                if (v < 1 || v > n) throw DecompositionError("bag vertex out of range: " + line);
                td.bags[id - 1].push_back(static_cast<int>(v - 1));
            }
            continue;
        }
        long a, b;
        if (!(ls >> a >> b) || a < 1 || b < 1 || a > nbags || b > nbags) throw DecompositionError("bad tree edge: " + line);
        td.tree.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (nbags < 0) throw DecompositionError("missing td header");
    for (auto& b : td.bags) std::sort(b.begin(), b.end());
    return td;
}

std::string nice_to_json(const NiceTreeDecomposition& ntd) {
    static const char* names[] = {"leaf", "introduce_vertex", "introduce_edge", "forget", "join"};
    nlohmann::json j;
    j["root"] = ntd.root;
    j["nodes"] = nlohmann::json::array();
    for (auto& x : ntd.nodes) {
        nlohmann::json o;
        o["type"] = names[static_cast<int>(x.type)];
        o["bag"] = x.bag;
        o["children"] = x.children;
        if (x.type == NodeType::IntroduceVertex || x.type == NodeType::Forget) o["vertex"] = x.vertex;
        if (x.type == NodeType::IntroduceEdge) o["edge"] = {x.u, x.v};
        j["nodes"].push_back(o);
    }
    return j.dump();
}

}  // namespace cutcount
