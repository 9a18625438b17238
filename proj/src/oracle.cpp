#include "cutcount/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>

namespace cutcount {

namespace {

void check_n(int n, const OracleLimit& lim) {
    if (n > lim.max_n) throw OracleError("oracle: too many vertices");
}

void check_m(int m, const OracleLimit& lim) {
    if (m > lim.max_edges) throw OracleError("oracle: too many edges");
}

std::vector<char> bits(int n, uint32_t mask) {
    std::vector<char> in(n);
    for (int v = 0; v < n; ++v) in[v] = mask >> v & 1;
    return in;
}

uint32_t mask_of(const std::vector<int>& S) {
    uint32_t m = 0;
    for (int v : S) m |= uint32_t{1} << v;
    return m;
}

bool connected_or_empty(const UndirectedGraph& g, uint32_t X) {
    return X == 0 || is_connected_subset(g, bits(g.n, X));
}

// smallest |X| over X superset of S satisfying ok(X)
int min_subset(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim, const std::function<bool(uint32_t)>& ok) {
    check_n(g.n, lim);
    for (int v : S)
        if (v < 0 || v >= g.n) throw OracleError("oracle: vertex out of range");
    uint32_t req = mask_of(S);
    int best = -1;
    for (uint32_t X = 0; X < (uint32_t{1} << g.n); ++X) {
        if ((X & req) != req) continue;
        int c = std::popcount(X);
        if (best >= 0 && c >= best) continue;
        if (ok(X)) best = c;
    }
    return best;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// every spanning tree of g, given as edge index lists
void spanning_trees(const UndirectedGraph& g, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> pick;
    std::function<void(int, Dsu)> rec = [&](int i, Dsu d) {
        if (static_cast<int>(pick.size()) == g.n - 1) {
            visit(pick);
            return;
        }
        if (g.m() - i < g.n - 1 - static_cast<int>(pick.size())) return;
        auto [u, v] = g.edges[i];
        Dsu d2 = d;
        if (d2.unite(u, v)) {
            pick.push_back(i);
            rec(i + 1, d2);
            pick.pop_back();
        }
        rec(i + 1, d);
    };
    if (g.n == 0) return;
    rec(0, Dsu(g.n));
}

}  // namespace

int oracle_steiner_min(const UndirectedGraph& g, const std::vector<int>& T, const OracleLimit& lim) {
    if (T.empty()) throw OracleError("oracle: empty terminal set");
    return min_subset(g, T, lim, [&](uint32_t X) { return connected_or_empty(g, X); });
}

int oracle_cvc_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim) {
    return min_subset(g, S, lim, [&](uint32_t X) {
        for (auto [u, v] : g.edges)
            if (!(X >> u & 1) && !(X >> v & 1)) return false;
        return connected_or_empty(g, X);
    });
}

int oracle_cds_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim) {
    return min_subset(g, S, lim, [&](uint32_t X) {
        uint32_t dom = X;
        for (auto [u, v] : g.edges) {
            if (X >> u & 1) dom |= uint32_t{1} << v;
            if (X >> v & 1) dom |= uint32_t{1} << u;
        }
        if (dom != (uint32_t{1} << g.n) - 1) return false;
        return connected_or_empty(g, X);
    });
}

int oracle_coct_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim) {
    return min_subset(g, S, lim, [&](uint32_t X) { return is_bipartite_without(g, bits(g.n, X)) && connected_or_empty(g, X); });
}

int oracle_fvs_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim) {
    return min_subset(g, S, lim, [&](uint32_t X) { return is_forest_without(g, bits(g.n, X)); });
}

int oracle_cfvs_min(const UndirectedGraph& g, const std::vector<int>& S, const OracleLimit& lim) {
    return min_subset(g, S, lim, [&](uint32_t X) { return is_forest_without(g, bits(g.n, X)) && connected_or_empty(g, X); });
}

// ---- cycle covers ----

namespace {

// visits every edge subset in which all degrees are 0 or 2; reports (covered, cycles)
void undirected_covers(const UndirectedGraph& g, const std::function<void(int, int)>& visit) {
    std::vector<int> deg(g.n, 0), last(g.n, -1);
    for (int i = 0; i < g.m(); ++i) {
        last[g.edges[i].first] = i;
        last[g.edges[i].second] = i;
    }
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int i) {
        if (i == g.m()) {
            int covered = 0;
            for (int v = 0; v < g.n; ++v) covered += deg[v] == 2;
            // each component of a 2-regular edge set is one cycle
            Dsu d(g.n);
            int cycles = covered;
            for (int e : pick)
                if (d.unite(g.edges[e].first, g.edges[e].second)) --cycles;
            visit(covered, cycles);
            return;
        }
        auto [u, v] = g.edges[i];
        auto fine = [&](int x) { return last[x] != i || deg[x] == 0 || deg[x] == 2; };
        if (fine(u) && fine(v)) rec(i + 1);
        if (deg[u] < 2 && deg[v] < 2) {
            ++deg[u], ++deg[v];
            pick.push_back(i);
            if (fine(u) && fine(v)) rec(i + 1);
            pick.pop_back();
            --deg[u], --deg[v];
        }
    };
    rec(0);
}

void directed_covers(const DirectedGraph& g, const std::function<void(int, int)>& visit) {
    std::vector<int> in(g.n, 0), out(g.n, 0), last(g.n, -1);
    for (int i = 0; i < g.m(); ++i) {
        last[g.arcs[i].first] = i;
        last[g.arcs[i].second] = i;
    }
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int i) {
        if (i == g.m()) {
            int covered = 0;
            for (int v = 0; v < g.n; ++v) covered += out[v];
            Dsu d(g.n);
            int cycles = covered;
            for (int e : pick)
                if (d.unite(g.arcs[e].first, g.arcs[e].second)) --cycles;
            visit(covered, cycles);
            return;
        }
        auto [u, v] = g.arcs[i];
        auto fine = [&](int x) { return last[x] != i || in[x] == out[x]; };
        if (fine(u) && fine(v)) rec(i + 1);
        if (out[u] == 0 && in[v] == 0) {
            ++out[u], ++in[v];
            pick.push_back(i);
            if (fine(u) && fine(v)) rec(i + 1);
            pick.pop_back();
            --out[u], --in[v];
        }
    };
    rec(0);
}

template <class G, class Enum>
int min_cycles(const G& g, int l, const OracleLimit& lim, Enum en) {
    check_n(g.n, lim);
    check_m(g.m(), lim);
    int best = -1;
    en(g, [&](int covered, int cycles) {
        if (covered == l && (best < 0 || cycles < best)) best = cycles;
    });
    return best;
}

}  // namespace

int oracle_pcc_min_cycles(const UndirectedGraph& g, int l, const OracleLimit& lim) { return min_cycles(g, l, lim, undirected_covers); }
int oracle_pcc_min_cycles(const DirectedGraph& g, int l, const OracleLimit& lim) { return min_cycles(g, l, lim, directed_covers); }

bool oracle_pcc(const UndirectedGraph& g, int k, int l, const OracleLimit& lim) {
    int c = oracle_pcc_min_cycles(g, l, lim);
    return c >= 0 && c <= k;
}

bool oracle_pcc(const DirectedGraph& g, int k, int l, const OracleLimit& lim) {
    int c = oracle_pcc_min_cycles(g, l, lim);
    return c >= 0 && c <= k;
}

// ---- paths and cycles ----

namespace {

int longest_path_impl(int n, const std::vector<std::vector<int>>& adj) {
    int best = 0;
    std::vector<char> seen(n, 0);
    std::function<void(int, int)> dfs = [&](int v, int len) {
        best = std::max(best, len);
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                dfs(w, len + 1);
                seen[w] = 0;
            }
    };
    for (int s = 0; s < n; ++s) {
        seen[s] = 1;
        dfs(s, 0);
        seen[s] = 0;
    }
    return best;
}

int longest_cycle_impl(int n, const std::vector<std::vector<int>>& adj, int min_len) {
    int best = 0;
    std::vector<char> seen(n, 0);
    // cycles through their smallest vertex s
    for (int s = 0; s < n; ++s) {
        std::function<void(int, int)> dfs = [&](int v, int len) {
            for (int w : adj[v]) {
                if (w == s && len + 1 >= min_len) best = std::max(best, len + 1);
                if (w > s && !seen[w]) {
                    seen[w] = 1;
                    dfs(w, len + 1);
                    seen[w] = 0;
                }
            }
        };
        seen[s] = 1;
        dfs(s, 0);
        seen[s] = 0;
    }
    return best;
}

}  // namespace

int oracle_longest_path(const UndirectedGraph& g, const OracleLimit& lim) {
    check_n(g.n, lim);
    return longest_path_impl(g.n, g.adjacency());
}

int oracle_longest_path(const DirectedGraph& g, const OracleLimit& lim) {
    check_n(g.n, lim);
    return longest_path_impl(g.n, g.out_adjacency());
}

int oracle_longest_cycle(const UndirectedGraph& g, const OracleLimit& lim) {
    check_n(g.n, lim);
    return longest_cycle_impl(g.n, g.adjacency(), 3);
}

int oracle_longest_cycle(const DirectedGraph& g, const OracleLimit& lim) {
    check_n(g.n, lim);
    return longest_cycle_impl(g.n, g.out_adjacency(), 2);
}

// ---- graph metric TSP ----

int oracle_gmtsp(const UndirectedGraph& g, const OracleLimit& lim) {
    check_n(g.n, lim);
    check_m(g.m(), lim);
    if (g.n <= 1) return 0;
    if (!is_connected(g)) return -1;
    // closed walk <=> connected spanning even-degree multigraph, multiplicities <= 2
    std::vector<int> last(g.n, -1), par(g.n, 0), mult(g.m(), 0);
    for (int i = 0; i < g.m(); ++i) {
        last[g.edges[i].first] = i;
        last[g.edges[i].second] = i;
    }
    int best = 2 * (g.n - 1);  // a doubled spanning tree
    std::function<void(int, int)> rec = [&](int i, int sum) {
        if (sum >= best) return;
        if (i == g.m()) {
            UndirectedGraph h(g.n);
            for (int e = 0; e < g.m(); ++e)
                if (mult[e]) h.add_edge(g.edges[e].first, g.edges[e].second);
            if (is_connected(h)) best = sum;
            return;
        }
        auto [u, v] = g.edges[i];
        for (int c = 0; c <= 2; ++c) {
            mult[i] = c;
            par[u] ^= c & 1;
            par[v] ^= c & 1;
            bool ok = (last[u] != i || !par[u]) && (last[v] != i || !par[v]);
            if (ok) rec(i + 1, sum + c);
            par[u] ^= c & 1;
            par[v] ^= c & 1;
        }
        mult[i] = 0;
    };
    rec(0, 0);
    return best;
}

// ---- spanning trees ----

std::vector<char> oracle_leaf_counts(const UndirectedGraph& g, const OracleLimit& lim) {
    check_n(g.n, lim);
    check_m(g.m(), lim);
    std::vector<char> can(g.n + 1, 0);
    if (g.n == 1) can[0] = 1;
    spanning_trees(g, [&](const std::vector<int>& t) {
        std::vector<int> deg(g.n, 0);
        for (int e : t) ++deg[g.edges[e].first], ++deg[g.edges[e].second];
        can[std::count(deg.begin(), deg.end(), 1)] = 1;
    });
    return can;
}

std::vector<char> oracle_outbranching_leaf_counts(const DirectedGraph& g, int root, const OracleLimit& lim) {
    check_n(g.n, lim);
    if (root < 0 || root >= g.n) throw OracleError("oracle: root out of range");
    std::vector<std::vector<int>> in(g.n);
    for (auto [u, v] : g.arcs)
        if (v != root) in[v].push_back(u);
    std::vector<char> can(g.n + 1, 0);
    std::vector<int> parent(g.n, -1);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            // every vertex must reach the root through parents
            std::vector<int> outdeg(g.n, 0);
            for (int x = 0; x < g.n; ++x) {
                if (x == root) continue;
                ++outdeg[parent[x]];
                int y = x, steps = 0;
                while (y != root && steps <= g.n) y = parent[y], ++steps;
                if (y != root) return;
            }
            can[std::count(outdeg.begin(), outdeg.end(), 0)] = 1;
            return;
        }
        if (v == root) return rec(v + 1);
        for (int u : in[v]) {
            parent[v] = u;
            rec(v + 1);
        }
    };
    rec(0);
    return can;
}

int oracle_full_degree_max(const UndirectedGraph& g, const OracleLimit& lim) {
    check_n(g.n, lim);
    check_m(g.m(), lim);
    if (g.n == 0) return 0;
    if (!is_connected(g)) return -1;
    std::vector<int> gdeg(g.n, 0);
    for (auto [u, v] : g.edges) ++gdeg[u], ++gdeg[v];
    int best = g.n == 1 ? 1 : -1;
    spanning_trees(g, [&](const std::vector<int>& t) {
        std::vector<int> deg(g.n, 0);
        for (int e : t) ++deg[g.edges[e].first], ++deg[g.edges[e].second];
        int c = 0;
        for (int v = 0; v < g.n; ++v) c += deg[v] == gdeg[v];
        best = std::max(best, c);
    });
    return best;
}

bool oracle_solve(Problem p, const Instance& in, const OracleLimit& lim) {
    auto le = [&](int opt) { return opt >= 0 && opt <= in.k; };
    const auto& g = in.g;
    switch (p) {
    case Problem::Steiner: return le(oracle_steiner_min(g, in.set, lim));
    case Problem::Cvc: return le(oracle_cvc_min(g, in.set, lim));
    case Problem::Cds: return le(oracle_cds_min(g, in.set, lim));
    case Problem::Coct: return le(oracle_coct_min(g, in.set, lim));
    case Problem::Fvs: return le(oracle_fvs_min(g, in.set, lim));
    case Problem::Cfvs: return le(oracle_cfvs_min(g, in.set, lim));
    case Problem::PccUndirected: return oracle_pcc(g, in.k, in.l, lim);
    case Problem::PccDirected: return oracle_pcc(in.dg, in.k, in.l, lim);
    case Problem::LongestPath:
        return (in.directed ? oracle_longest_path(in.dg, lim) : oracle_longest_path(g, lim)) >= in.k;
    case Problem::Gmtsp: return le(oracle_gmtsp(g, lim));
    case Problem::KLeafSpanningTree: {
        auto c = oracle_leaf_counts(g, lim);
        return in.k >= 0 && in.k < static_cast<int>(c.size()) && c[in.k];
    }
    case Problem::KLeafOutbranching: {
        auto c = oracle_outbranching_leaf_counts(in.dg, in.root, lim);
        return in.k >= 0 && in.k < static_cast<int>(c.size()) && c[in.k];
    }
    case Problem::FullDegreeSpanningTree: return oracle_full_degree_max(g, lim) >= in.k;
    case Problem::HamCycle: {
        int n = in.directed ? in.dg.n : g.n;
        int c = in.directed ? oracle_pcc_min_cycles(in.dg, n, lim) : oracle_pcc_min_cycles(g, n, lim);
        return n > 0 && c == 1;
    }
    case Problem::MinCycleCover: {
        int n = in.directed ? in.dg.n : g.n;
        int c = in.directed ? oracle_pcc_min_cycles(in.dg, n, lim) : oracle_pcc_min_cycles(g, n, lim);
        return c >= 0 && c <= in.k;
    }
    case Problem::LongestCycle:
        return (in.directed ? oracle_longest_cycle(in.dg, lim) : oracle_longest_cycle(g, lim)) >= std::max(in.k, 1);
    }
    return false;
}

namespace {

bool edge_limited(Problem p) {
    switch (p) {
    case Problem::Steiner:
    case Problem::Cvc:
    case Problem::Cds:
    case Problem::Coct:
    case Problem::Fvs:
    case Problem::Cfvs:
    case Problem::LongestPath:
    case Problem::LongestCycle:
        return false;
    default:
        return true;
    }
}

std::vector<int> random_subset(int n, int size, Rng& rng) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

RandomInstance random_instance(Problem p, Rng& rng, const RandomSpec& spec) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    bool directed = p == Problem::PccDirected || p == Problem::KLeafOutbranching ||
                    (problem_has_both_orientations(p) && uniform(0, 1));
    RandomInstance r;
    auto& in = r.in;
    in.directed = directed;
    for (;;) {
        int n = uniform(spec.min_n, spec.max_n);
        int density = uniform(20, 70);
        if (directed) {
            in.dg = DirectedGraph(n);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (u != v && uniform(0, 99) < density * 3 / 5) in.dg.add_arc(u, v);
            in.g = UndirectedGraph();
        } else {
            in.g = UndirectedGraph(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (uniform(0, 99) < density) in.g.add_edge(u, v);
        }
        int m = directed ? in.dg.m() : in.g.m();
        if (edge_limited(p) && m > spec.limit.max_edges) continue;
        r.td = directed ? heuristic_decompose(in.dg) : heuristic_decompose(in.g);
        if (r.td.width() <= spec.max_width) break;
    }
    const auto& g = in.g;
    int n = directed ? in.dg.n : g.n;
    // minimization: k = opt + {-1, 0, 0, +1}; maximization mirrored
    int shift = std::array{-1, 0, 0, 1}[uniform(0, 3)];
    auto around_min = [&](int opt, int fallback_hi) { return opt < 0 ? uniform(0, fallback_hi) : std::max(0, opt + shift); };
    auto around_max = [&](int opt) { return std::max(0, opt - shift); };
    switch (p) {
    case Problem::Steiner:
        in.set = random_subset(n, uniform(1, std::min(n, 4)), rng);
        in.k = around_min(oracle_steiner_min(g, in.set, spec.limit), n);
        break;
    case Problem::Cvc:
    case Problem::Cds:
    case Problem::Coct:
    case Problem::Fvs:
    case Problem::Cfvs: {
        in.set = random_subset(n, std::array{0, 0, 1, 2}[uniform(0, 3)], rng);
        int opt = p == Problem::Cvc    ? oracle_cvc_min(g, in.set, spec.limit)
                  : p == Problem::Cds  ? oracle_cds_min(g, in.set, spec.limit)
                  : p == Problem::Coct ? oracle_coct_min(g, in.set, spec.limit)
                  : p == Problem::Fvs  ? oracle_fvs_min(g, in.set, spec.limit)
                                       : oracle_cfvs_min(g, in.set, spec.limit);
        in.k = around_min(opt, n);
        break;
    }
    case Problem::PccUndirected:
    case Problem::PccDirected:
    case Problem::MinCycleCover: {
        auto min_cycles = [&](int l) {
            return directed ? oracle_pcc_min_cycles(in.dg, l, spec.limit) : oracle_pcc_min_cycles(g, l, spec.limit);
        };
        std::vector<int> feasible;
        for (int l = 1; l <= n; ++l)
            if (min_cycles(l) >= 0) feasible.push_back(l);
        in.l = p == Problem::MinCycleCover ? n
               : !feasible.empty() && uniform(0, 1) ? feasible[uniform(0, static_cast<int>(feasible.size()) - 1)]
                                                    : uniform(0, n);
        in.k = around_min(min_cycles(in.l), 3);
        if (p == Problem::MinCycleCover) in.l = 0;
        break;
    }
    case Problem::LongestPath:
        in.k = around_max(directed ? oracle_longest_path(in.dg, spec.limit) : oracle_longest_path(g, spec.limit));
        break;
    case Problem::Gmtsp:
        in.k = around_min(oracle_gmtsp(g, spec.limit), 2 * n);
        break;
    case Problem::KLeafSpanningTree:
    case Problem::KLeafOutbranching: {
        if (p == Problem::KLeafOutbranching) {
            // mostly a root that reaches everything, so outbranchings exist
            std::vector<int> good;
            auto out = in.dg.out_adjacency();
            for (int r0 = 0; r0 < n; ++r0) {
                std::vector<char> seen(n, 0);
                std::vector<int> st{r0};
                seen[r0] = 1;
                int cnt = 1;
                while (!st.empty()) {
                    int u = st.back();
                    st.pop_back();
                    for (int v : out[u])
                        if (!seen[v]) seen[v] = 1, ++cnt, st.push_back(v);
                }
                if (cnt == n) good.push_back(r0);
            }
            in.root = !good.empty() && uniform(0, 3) ? good[uniform(0, static_cast<int>(good.size()) - 1)] : uniform(0, n - 1);
        }
        auto counts = p == Problem::KLeafSpanningTree ? oracle_leaf_counts(g, spec.limit)
                                                      : oracle_outbranching_leaf_counts(in.dg, in.root, spec.limit);
        std::vector<int> ok;
        for (int i = 0; i < static_cast<int>(counts.size()); ++i)
            if (counts[i]) ok.push_back(i);
        // half the time an achievable count, otherwise anything in range
        in.k = !ok.empty() && uniform(0, 1) ? ok[uniform(0, static_cast<int>(ok.size()) - 1)] : uniform(1, n);
        break;
    }
    case Problem::FullDegreeSpanningTree: {
        int best = oracle_full_degree_max(g, spec.limit);
        in.k = best < 0 ? uniform(0, n) : around_max(best);
        break;
    }
    case Problem::HamCycle:
        break;
    case Problem::LongestCycle:
        in.k = around_max(directed ? oracle_longest_cycle(in.dg, spec.limit) : oracle_longest_cycle(g, spec.limit));
        break;
    }
    r.answer = oracle_solve(p, in, spec.limit);
    return r;
}

}  // namespace cutcount
