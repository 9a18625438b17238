#include "cutcount/fpt.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <set>

#include "cutcount/vertex_solvers.hpp"

namespace cutcount {

bool is_feedback_vertex_set(const UndirectedGraph& g, const std::vector<int>& X) {
    std::vector<char> rm(g.n, 0);
    for (int v : X) rm[v] = 1;
    return is_forest_without(g, rm);
}

bool is_connected_vertex_cover(const UndirectedGraph& g, const std::vector<int>& X) {
    std::vector<char> in(g.n, 0);
    for (int v : X) in[v] = 1;
    for (auto [u, v] : g.edges)
        if (!in[u] && !in[v]) return false;
    return X.empty() || is_connected_subset(g, in);
}

bool is_connected_feedback_vertex_set(const UndirectedGraph& g, const std::vector<int>& X) {
    std::vector<char> in(g.n, 0);
    for (int v : X) in[v] = 1;
    return is_forest_without(g, in) && (X.empty() || is_connected_subset(g, in));
}

namespace {

enum class Kind { Fvs, Cvc, Cfvs };

bool feasible(Kind kind, const UndirectedGraph& g, const std::vector<int>& X, int k) {
    if (static_cast<int>(X.size()) > k) return false;
    switch (kind) {
    case Kind::Fvs: return is_feedback_vertex_set(g, X);
    case Kind::Cvc: return is_connected_vertex_cover(g, X);
    case Kind::Cfvs: return is_connected_feedback_vertex_set(g, X);
    }
    return false;
}

// width-1 decomposition of the forest H - B with B added to every bag
TreeDecomposition hull_decomposition(const UndirectedGraph& h, const std::vector<int>& B) {
    std::vector<char> inB(h.n, 0);
    for (int v : B) inB[v] = 1;
    auto adj = h.adjacency();
    std::vector<int> parent(h.n, -2), bag_of(h.n, -1);
    TreeDecomposition td;
    int prev_root = -1;
    for (int s = 0; s < h.n; ++s) {
        if (inB[s] || parent[s] != -2) continue;
        std::queue<int> q;
        parent[s] = -1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            std::vector<int> bag = B;
            bag.push_back(v);
            if (parent[v] >= 0) bag.push_back(parent[v]);
            std::sort(bag.begin(), bag.end());
            bag_of[v] = static_cast<int>(td.bags.size());
            td.bags.push_back(bag);
            if (parent[v] >= 0)
                td.tree.push_back({bag_of[parent[v]], bag_of[v]});
            else if (prev_root >= 0)
                td.tree.push_back({prev_root, bag_of[v]});
            if (parent[v] < 0) prev_root = bag_of[v];
            for (int w : adj[v])
                if (!inB[w] && parent[w] == -2) {
                    parent[w] = v;
                    q.push(w);
                }
        }
    }
    if (td.bags.empty()) {
        auto bag = B;
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);
    }
    return td;
}

struct Compressor {
    Kind kind;
    const UndirectedGraph& h;
    std::vector<int> B;
    int k;
    const FptOptions& opt;
    FptStats& st;
    uint64_t& counter;
    NiceTreeDecomposition ntd;

    Compressor(Kind kd, const UndirectedGraph& h_, std::vector<int> B_, int k_, const FptOptions& o, FptStats& s, uint64_t& c)
        : kind(kd), h(h_), B(std::move(B_)), k(k_), opt(o), st(s), counter(c) {
        ntd = make_nice(hull_decomposition(h, B), h);
    }

    int radix() const { return kind == Kind::Cfvs ? 4 : 3; }

    std::vector<int> allowed(int v, const std::vector<char>& req, int v1) const {
        switch (kind) {
        case Kind::Fvs: return req[v] ? std::vector<int>{0} : std::vector<int>{0, 1, 2};
        case Kind::Cvc:
            if (v == v1) return {1};
            return req[v] ? std::vector<int>{1, 2} : std::vector<int>{0, 1, 2};
        case Kind::Cfvs:
            if (v == v1) return {0};
            return req[v] ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 2, 3};
        }
        return {};
    }

    bool edge_ok(int a, int b) const {
        switch (kind) {
        case Kind::Fvs: return !(a && b && a != b);
        case Kind::Cvc: return !(a == 0 && b == 0) && !(a && b && a != b);
        case Kind::Cfvs: return (a < 2) != (b < 2) || a == b;
        }
        return false;
    }

    // core evaluations B -> digits, walked along a BFS forest of G[B] so that
    // each vertex only takes digits compatible with its parent
    void for_each_core(const std::vector<char>& req, int v1, std::vector<int>& fixed, const std::function<void()>& visit) const {
        std::vector<char> inB(h.n, 0);
        for (int v : B) inB[v] = 1;
        auto adj = h.adjacency();
        std::vector<int> order, par(h.n, -2);
        for (int s : B) {
            if (par[s] != -2) continue;
            par[s] = -1;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                order.push_back(v);
                for (int w : adj[v])
                    if (inB[w] && par[w] == -2) {
                        par[w] = v;
                        q.push(w);
                    }
            }
        }
        std::vector<Edge> inner;
        for (auto [u, v] : h.edges)
            if (inB[u] && inB[v]) inner.push_back({u, v});
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == order.size()) {
                for (auto [u, v] : inner)
                    if (!edge_ok(fixed[u], fixed[v])) return;
                visit();
                return;
            }
            int v = order[i];
            for (int d : allowed(v, req, v1)) {
                if (par[v] >= 0 && !edge_ok(fixed[par[v]], d)) continue;
                fixed[v] = d;
                rec(i + 1);
            }
            fixed[v] = -1;
        };
        rec(0);
    }

    std::vector<int> v1_candidates(const std::vector<int>& S) const {
        if (kind == Kind::Fvs) return {-1};
        if (!S.empty()) return {*std::min_element(S.begin(), S.end())};
        if (kind == Kind::Cvc) return {h.edges[0].first, h.edges[0].second};
        return shortest_cycle(h);
    }

    bool slice_hit(const ParityTable& sum) const {
        auto nz = [&](uint64_t acc) {
            auto v = root_cell(sum, acc);
            return v && !sum.alg().is_zero(v);
        };
        if (kind == Kind::Cvc) {
            for (int i = 1; i <= k; ++i)
                if (nz(i * acc_unit(0))) return true;
            return false;
        }
        for (int kp = kind == Kind::Fvs ? 0 : 1; kp <= k; ++kp)
            if (forest_slice_nonzero(sum, h.n - kp)) return true;
        return false;
    }

    bool query(const std::vector<int>& S) {
        ++st.queries;
        int n = h.n;
        std::vector<char> req(n, 0);
        for (int v : S) req[v] = 1;
        auto cands = v1_candidates(S);
        size_t universe = kind == Kind::Cvc ? vertex_universe(n) : paired_universe(n);
        int maxw = kind == Kind::Cvc ? 2 * n * k : 8 * n * n;
        uint64_t bound = static_cast<uint64_t>(radix() * radix()) * (n + 1) * (n + 1) * (n + 1);
        uint64_t base = derive_seed(opt.seed, counter++);
        auto ans = amplified_solve([&](uint64_t seed) {
            auto w = sample_weights(universe, derive_seed(seed, 1));
            auto alg = run_algebra(opt.mode, maxw, seed);
            for (int v1 : cands) {
                auto r = req;
                if (v1 >= 0) r[v1] = 1;
                std::vector<int> fixed(n, -1);
                DpStats ds;
                VertexRun run{&w, &alg, r, v1, {}};
                run.dp.fixed = &fixed;
                run.dp.stats = &ds;
                ParityTable sum(radix(), {}, &alg);
                for_each_core(r, v1, fixed, [&] {
                    ds = DpStats{};
                    ParityTable root = kind == Kind::Fvs ? fvs_root(h, ntd, run, false)
                                       : kind == Kind::Cvc ? cvc_root(h, ntd, run, k)
                                                           : cfvs_root(h, ntd, run, false);
                    ++st.evaluations;
                    st.peak_cells = std::max(st.peak_cells, ds.peak_cells);
                    st.cell_bound = std::max(st.cell_bound, bound * alg.words());
                    if (ds.peak_words > bound * alg.words()) throw SpaceBoundError("core evaluation exceeded the polynomial cell bound");
                    for (auto& e : root.entries()) sum.add(e.col, e.acc, root.value(e));
                });
                if (slice_hit(sum)) return true;
            }
            return false;
        }, opt.repetitions, base);
        return ans.verdict == Verdict::Yes;
    }

    // test, then rebuild a solution vertex by vertex with constrained queries
    std::optional<std::vector<int>> run() {
        ++st.compressions;
        st.max_hull = std::max(st.max_hull, static_cast<int>(B.size()));
        if (!query({})) return std::nullopt;
        std::vector<int> K;
        for (int v = 0; v < h.n && !feasible(kind, h, K, k); ++v) {
            if (static_cast<int>(K.size()) >= k) break;
            auto S = K;
            S.push_back(v);
            if (query(S)) K = S;
        }
        // exhausting the vertices without a solution means a test erred
        if (!feasible(kind, h, K, k)) return std::nullopt;
        return K;
    }
};

UndirectedGraph induced_prefix(const UndirectedGraph& g, int i) {
    UndirectedGraph h(i);
    for (auto [u, v] : g.edges)
        if (u < i && v < i) h.add_edge(u, v);
    return h;
}

// contraction sequence along a BFS tree: G_i keeps the first i BFS vertices,
// every other vertex merged into its nearest kept ancestor
struct Contraction {
    std::vector<int> order, pos, parent;
    explicit Contraction(const UndirectedGraph& g) : pos(g.n, -1), parent(g.n, -1) {
        auto adj = g.adjacency();
        std::queue<int> q;
        q.push(0);
        pos[0] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : adj[v])
                if (pos[w] < 0) {
                    pos[w] = static_cast<int>(order.size() + q.size());
                    parent[w] = v;
                    q.push(w);
                }
        }
    }
    int rep(int u, int i) const {
        while (pos[u] >= i) u = parent[u];
        return pos[u];
    }
    UndirectedGraph graph(const UndirectedGraph& g, int i) const {
        std::set<Edge> es;
        for (auto [u, v] : g.edges) {
            int a = rep(u, i), b = rep(v, i);
            if (a != b) es.insert({std::min(a, b), std::max(a, b)});
        }
        UndirectedGraph h(i);
        for (auto [a, b] : es) h.add_edge(a, b);
        return h;
    }
};

FptResult finish(const UndirectedGraph& g, Kind kind, std::vector<int> A, int k, FptStats st) {
    FptResult r;
    r.stats = st;
    std::sort(A.begin(), A.end());
    if (feasible(kind, g, A, k)) {
        r.verdict = Verdict::Yes;
        r.solution = A;
    }
    return r;
}

FptResult unknown(FptStats st) {
    FptResult r;
    r.stats = st;
    return r;
}

FptResult contraction_solver(Kind kind, const UndirectedGraph& g, int k, const FptOptions& opt) {
    if (k < 0) throw std::invalid_argument("negative k");
    if (g.n > 0 && !is_connected(g)) throw std::invalid_argument("input graph must be connected");
    FptStats st;
    if (feasible(kind, g, {}, k)) return finish(g, kind, {}, k, st);
    if (k == 0) return unknown(st);
    Contraction c(g);
    uint64_t counter = 0;
    std::vector<int> A;  // in BFS positions of the current G_i
    for (int i = 1; i < g.n; ++i) {
        auto h = c.graph(g, i + 1);
        int u = i, p = c.pos[c.parent[c.order[i]]];
        std::vector<int> B = A;
        for (int x : {u, p})
            if (std::find(B.begin(), B.end(), x) == B.end()) B.push_back(x);
        std::sort(B.begin(), B.end());
        if (feasible(kind, h, B, k)) {
            A = B;
            continue;
        }
        if (feasible(kind, h, A, k)) continue;  // the old set may still do
        Compressor comp(kind, h, B, k, opt, st, counter);
        auto sol = comp.run();
        if (!sol) return unknown(st);
        A = *sol;
    }
    std::vector<int> orig;
    for (int x : A) orig.push_back(c.order[x]);
    return finish(g, kind, orig, k, st);
}

}  // namespace

FptResult fvs_3k(const UndirectedGraph& g, int k, const FptOptions& opt) {
    if (k < 0) throw std::invalid_argument("negative k");
    FptStats st;
    if (is_feedback_vertex_set(g, {})) return finish(g, Kind::Fvs, {}, k, st);
    if (k == 0) return unknown(st);
    uint64_t counter = 0;
    std::vector<int> A;
    for (int i = 1; i <= g.n; ++i) {
        auto h = induced_prefix(g, i);
        if (feasible(Kind::Fvs, h, A, k)) continue;
        std::vector<int> B = A;
        B.push_back(i - 1);
        if (static_cast<int>(B.size()) <= k) {
            A = B;
            continue;
        }
        Compressor comp(Kind::Fvs, h, B, k, opt, st, counter);
        auto sol = comp.run();
        if (!sol) return unknown(st);
        A = *sol;
    }
    return finish(g, Kind::Fvs, A, k, st);
}

FptResult cvc_2k(const UndirectedGraph& g, int k, const FptOptions& opt) { return contraction_solver(Kind::Cvc, g, k, opt); }

FptResult cfvs_3k(const UndirectedGraph& g, int k, const FptOptions& opt) { return contraction_solver(Kind::Cfvs, g, k, opt); }

}  // namespace cutcount
