#include "cut_enum.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <type_traits>

#include "cutcount/edge_solvers.hpp"
#include "cutcount/vertex_solvers.hpp"

using namespace cutcount;

namespace {

using Mask = uint32_t;
using Parity = std::vector<uint8_t>;

void flip(Parity& p, int W) {
    if (W >= static_cast<int>(p.size())) p.resize(W + 1, 0);
    p[W] ^= 1;
}

bool bit(Mask m, int i) { return m >> i & 1; }

// side assignments of `active` (bit set = side 2) with every listed pair on
// one side and `forced` on side 1
int count_cuts(int n, Mask active, const std::vector<Edge>& same, Mask forced) {
    int count = 0;
    for (Mask two = 0; two < (Mask{1} << n); ++two) {
        if ((two & ~active) || (two & forced)) continue;
        bool ok = true;
        for (auto [u, v] : same)
            if (bit(active, u) && bit(active, v) && bit(two, u) != bit(two, v)) {
                ok = false;
                break;
            }
        count += ok;
    }
    return count;
}

std::vector<Edge> induced(const UndirectedGraph& g, Mask X) {
    std::vector<Edge> out;
    for (auto [u, v] : g.edges)
        if (bit(X, u) && bit(X, v)) out.emplace_back(u, v);
    return out;
}

// components of (vertices in X, edge list)
int components(int n, Mask X, const std::vector<Edge>& edges) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    int c = std::popcount(X);
    for (auto [u, v] : edges) {
        if (!bit(X, u) || !bit(X, v)) continue;
        int a = find(u), b = find(v);
        if (a != b) p[a] = b, --c;
    }
    return c;
}

Mask mask_of(const std::vector<int>& s) {
    Mask m = 0;
    for (int v : s) m |= Mask{1} << v;
    return m;
}

struct Checker {
    CancellationReport& rep;
    std::string where;

    void compare(const Parity& c, const Parity& s, const WParity& dp, const std::string& slice) {
        ++rep.slices;
        int top = std::max({static_cast<int>(c.size()), static_cast<int>(s.size()), dp.max_weight() + 1});
        for (int W = 0; W < top; ++W) {
            bool cw = W < static_cast<int>(c.size()) && c[W];
            bool sw = W < static_cast<int>(s.size()) && s[W];
            rep.odd_cells += cw;
            if (cw != sw) {
                ++rep.cut_vs_solution;
                note("C/S", slice, W);
            }
            if (dp.test(W) != cw) {
                ++rep.dp_vs_cut;
                note("dp/C", slice, W);
            }
        }
    }
    void note(const char* what, const std::string& slice, int W) {
        if (!rep.first_failure.empty()) return;
        std::ostringstream os;
        os << where << ' ' << slice << " W=" << W << " (" << what << ")";
        rep.first_failure = os.str();
    }
};

UndirectedGraph random_graph(Rng& rng, int n, int max_m) {
    std::uniform_int_distribution<int> pct(0, 99);
    int density = 25 + pct(rng) / 2;
    for (;;) {
        UndirectedGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (pct(rng) < density) g.add_edge(u, v);
        if (g.m() >= 1 && g.m() <= max_m) return g;
    }
}

DirectedGraph random_digraph(Rng& rng, int n, int max_m) {
    std::uniform_int_distribution<int> pct(0, 99);
    int density = 20 + pct(rng) / 3;
    for (;;) {
        DirectedGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && pct(rng) < density) g.add_arc(u, v);
        if (g.m() >= 1 && g.m() <= max_m) return g;
    }
}

std::vector<int> random_subset(Rng& rng, int n, int lo, int hi) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::uniform_int_distribution<int>(lo, hi)(rng));
    std::sort(all.begin(), all.end());
    return all;
}

// ---- vertex subset problems ----

// candidates X of size k with X >= S, cut on G[X] with v1 on side 1
template <class Feasible>
void connected_family(Checker& ck, const UndirectedGraph& g, const WeightFunction& w, const std::vector<int>& S, int k, Feasible feasible,
                      const WParity& dp) {
    int n = g.n;
    Mask req = mask_of(S);
    Mask v1 = Mask{1} << *std::min_element(S.begin(), S.end());
    Parity c, s;
    for (Mask X = 0; X < (Mask{1} << n); ++X) {
        if ((X & req) != req || std::popcount(X) != k || !feasible(X)) continue;
        int W = 0;
        for (int v = 0; v < n; ++v)
            if (bit(X, v)) W += w[v];
        auto e = induced(g, X);
        if (count_cuts(n, X, e, v1) & 1) flip(c, W);
        if (components(n, X, e) == 1) flip(s, W);
    }
    ck.compare(c, s, dp, "k=" + std::to_string(k));
}

void check_steiner(Checker& ck, Rng& rng, int n) {
    auto g = random_graph(rng, n, 99);
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto T = random_subset(rng, n, 1, std::min(n, 3));
    auto w = sample_weights(vertex_universe(n), rng);
    for (int k = static_cast<int>(T.size()); k <= n; ++k)
        connected_family(ck, g, w, T, k, [](Mask) { return true; }, steiner_countc(w, g, ntd, T, k));
}

void check_cvc(Checker& ck, Rng& rng, int n) {
    auto g = random_graph(rng, n, 99);
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto S = random_subset(rng, n, 1, 2);
    auto w = sample_weights(vertex_universe(n), rng);
    auto cover = [&](Mask X) {
        for (auto [u, v] : g.edges)
            if (!bit(X, u) && !bit(X, v)) return false;
        return true;
    };
    for (int k = static_cast<int>(S.size()); k <= n; ++k) connected_family(ck, g, w, S, k, cover, cvc_countc(w, g, ntd, S, k));
}

void check_cds(Checker& ck, Rng& rng, int n) {
    auto g = random_graph(rng, n, 99);
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto S = random_subset(rng, n, 1, 2);
    auto w = sample_weights(vertex_universe(n), rng);
    auto adj = g.adjacency();
    auto dominating = [&](Mask X) {
        for (int v = 0; v < n; ++v) {
            bool ok = bit(X, v);
            for (int u : adj[v]) ok = ok || bit(X, u);
            if (!ok) return false;
        }
        return true;
    };
    for (int k = static_cast<int>(S.size()); k <= n; ++k) connected_family(ck, g, w, S, k, dominating, cds_countc(w, g, ntd, S, k));
}

void check_coct(Checker& ck, Rng& rng, int n) {
    auto g = random_graph(rng, n, 99);
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto S = random_subset(rng, n, 1, 2);
    auto w = sample_weights(paired_universe(n), rng);
    Mask req = mask_of(S), v1 = Mask{1} << S.front();
    for (int k = static_cast<int>(S.size()); k <= n; ++k) {
        Parity c, s;
        for (Mask X = 0; X < (Mask{1} << n); ++X) {
            if ((X & req) != req || std::popcount(X) != k) continue;
            auto e = induced(g, X);
            int cuts = count_cuts(n, X, e, v1);
            bool conn = components(n, X, e) == 1;
            Mask rest = ((Mask{1} << n) - 1) & ~X;
            for (Mask L = rest;; L = (L - 1) & rest) {
                Mask R = rest & ~L;
                bool proper = true;
                for (auto [u, v] : g.edges)
                    if ((bit(L, u) && bit(L, v)) || (bit(R, u) && bit(R, v))) proper = false;
                if (proper) {
                    int W = 0;
                    for (int v = 0; v < n; ++v) W += bit(X, v) ? w[2 * v] : bit(L, v) ? w[2 * v + 1] : 0;
                    if (cuts & 1) flip(c, W);
                    if (conn) flip(s, W);
                }
                if (!L) break;
            }
        }
        ck.compare(c, s, coct_countc(w, g, ntd, S, k), "k=" + std::to_string(k));
    }
}

// forest side Y with markers M; for cfvs the cuts of X = V \ Y multiply in
void forest_family(Checker& ck, const UndirectedGraph& g, const WeightFunction& w, const std::vector<int>& S, bool connected_x,
                   const std::function<WParity(int, int, int)>& dp) {
    int n = g.n;
    Mask req = mask_of(S), all = (Mask{1} << n) - 1;
    Mask v1 = S.empty() ? 0 : Mask{1} << S.front();
    // (A, C) -> parities, slice B = A - C
    std::map<std::pair<int, int>, std::pair<Parity, Parity>> acc;
    for (Mask Y = 0; Y <= all; ++Y) {
        if (Y & req) continue;
        Mask X = all & ~Y;
        auto ey = induced(g, Y);
        int A = std::popcount(Y), B = static_cast<int>(ey.size());
        int outer = 1;
        bool x_ok = true;
        if (connected_x) {
            auto ex = induced(g, X);
            outer = count_cuts(n, X, ex, v1);
            x_ok = components(n, X, ex) == 1;
        }
        int cc = components(n, Y, ey);
        bool forest = B == A - cc;
        for (Mask M = Y;; M = (M - 1) & Y) {
            int C = std::popcount(M);
            if (B == A - C) {
                int W = 0;
                for (int v = 0; v < n; ++v) W += (bit(Y, v) ? w[2 * v] : 0) + (bit(M, v) ? w[2 * v + 1] : 0);
                auto& [c, s] = acc[{A, C}];
                if ((outer * count_cuts(n, Y, ey, M)) & 1) flip(c, W);
                // one marker per component of a forest
                if (x_ok && forest && C == cc) {
                    bool one_each = true;
                    std::vector<int> p(n);
                    for (int i = 0; i < n; ++i) p[i] = i;
                    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
                    for (auto [u, v] : ey) p[find(u)] = find(v);
                    std::map<int, int> per;
                    for (int v = 0; v < n; ++v)
                        if (bit(M, v)) ++per[find(v)];
                    for (auto& [r, cnt] : per) one_each = one_each && cnt == 1;
                    if (one_each) flip(s, W);
                }
            }
            if (!M) break;
        }
    }
    for (int A = 0; A <= n; ++A)
        for (int C = 0; C <= A; ++C) {
            int B = A - C;
            if (B >= std::max(n, 1)) continue;
            static const std::pair<Parity, Parity> none;
            auto it = acc.find({A, C});
            auto& cs = it == acc.end() ? none : it->second;
            ck.compare(cs.first, cs.second, dp(A, B, C), "A=" + std::to_string(A) + " C=" + std::to_string(C));
        }
}

void check_fvs(Checker& ck, Rng& rng, int n) {
    auto g = random_graph(rng, n, 99);
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto S = random_subset(rng, n, 0, 1);
    auto w = sample_weights(paired_universe(n), rng);
    forest_family(ck, g, w, S, false, [&](int A, int B, int C) { return fvs_countc(w, g, ntd, S, A, B, C); });
}

void check_cfvs(Checker& ck, Rng& rng, int n) {
    auto g = random_graph(rng, n, 99);
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto S = random_subset(rng, n, 1, 2);
    auto w = sample_weights(paired_universe(n), rng);
    forest_family(ck, g, w, S, true, [&](int A, int B, int C) { return cfvs_countc(w, g, ntd, S, A, B, C); });
}

// ---- edge subset problems ----

template <class G>
std::vector<Edge> arcs_of(const G& g) {
    if constexpr (std::is_same_v<G, DirectedGraph>)
        return g.arcs;
    else
        return g.edges;
}

// cycle covers of part of the graph, with markers on edges
template <class G>
void check_pcc_graph(Checker& ck, const G& g, Rng& rng, bool directed) {
    int n = g.n;
    auto E = arcs_of(g);
    int m = static_cast<int>(E.size());
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto w = sample_weights(2 * static_cast<size_t>(m), rng);
    // (k, l) -> parities
    std::map<std::pair<int, int>, std::pair<Parity, Parity>> acc;
    std::vector<int> indeg(n), outdeg(n);
    std::vector<int> chosen;
    auto visit = [&] {
        for (int v = 0; v < n; ++v) {
            if (directed && indeg[v] != outdeg[v]) return;
            if (!directed && indeg[v] != 0 && indeg[v] != 2) return;
        }
        Mask active = 0;
        std::vector<Edge> same;
        for (int e : chosen) {
            active |= Mask{1} << E[e].first | Mask{1} << E[e].second;
            same.push_back(E[e]);
        }
        int l = static_cast<int>(chosen.size());
        int q = l;
        for (Mask mk = 0; mk < (Mask{1} << q); ++mk) {
            Mask forced = 0;
            int W = 0;
            for (int i = 0; i < q; ++i) {
                W += w[2 * chosen[i]];
                if (bit(mk, i)) {
                    W += w[2 * chosen[i] + 1];
                    forced |= Mask{1} << E[chosen[i]].first | Mask{1} << E[chosen[i]].second;
                }
            }
            auto& [c, s] = acc[{std::popcount(mk), l}];
            if (count_cuts(n, active, same, forced) & 1) flip(c, W);
            // every cycle carries a marker: each component of the cover meets a marked edge
            std::vector<int> p(n);
            for (int i = 0; i < n; ++i) p[i] = i;
            std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
            for (auto [u, v] : same) p[find(u)] = find(v);
            bool all_marked = true;
            for (int v = 0; v < n; ++v)
                if (bit(active, v) && find(v) == v) {
                    bool marked = false;
                    for (int i = 0; i < q; ++i)
                        if (bit(mk, i) && find(E[chosen[i]].first) == v) marked = true;
                    all_marked = all_marked && marked;
                }
            if (all_marked) flip(s, W);
        }
    };
    std::function<void(int)> rec = [&](int e) {
        if (e == m) return visit();
        rec(e + 1);
        auto [u, v] = E[e];
        int cap = directed ? 1 : 2;
        if (directed ? (outdeg[u] < cap && indeg[v] < cap) : (indeg[u] < cap && indeg[v] < cap)) {
            if (directed)
                ++outdeg[u], ++indeg[v];
            else
                ++indeg[u], ++indeg[v];
            chosen.push_back(e);
            rec(e + 1);
            chosen.pop_back();
            if (directed)
                --outdeg[u], --indeg[v];
            else
                --indeg[u], --indeg[v];
        }
    };
    rec(0);
    for (int l = 0; l <= n; ++l)
        for (int k = 0; k <= l; ++k) {
            static const std::pair<Parity, Parity> none;
            auto it = acc.find({k, l});
            auto& cs = it == acc.end() ? none : it->second;
            WParity dp;
            if constexpr (std::is_same_v<G, DirectedGraph>)
                dp = pcc_directed_countc(w, g, ntd, k, l);
            else
                dp = pcc_undirected_countc(w, g, ntd, k, l);
            ck.compare(cs.first, cs.second, dp, "k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
}

void check_pcc(Checker& ck, Rng& rng, int n, bool directed) {
    if (directed)
        check_pcc_graph(ck, random_digraph(rng, n, 12), rng, true);
    else
        check_pcc_graph(ck, random_graph(rng, n, 12), rng, false);
}

// the path closing gadget of the longest path reduction: t - p_1 - ... - p_n - s
void check_longest_path(Checker& ck, Rng& rng, int n) {
    n = std::min(n, 4);
    bool directed = rng() & 1;
    int s = static_cast<int>(rng() % n), t = static_cast<int>((s + 1 + rng() % (n - 1)) % n);
    if (directed) {
        auto g = random_digraph(rng, n, 6);
        DirectedGraph h(2 * n);
        for (auto [u, v] : g.arcs) h.add_arc(u, v);
        h.add_arc(t, n);
        for (int i = 1; i < n; ++i) h.add_arc(n + i - 1, n + i);
        h.add_arc(2 * n - 1, s);
        check_pcc_graph(ck, h, rng, true);
    } else {
        auto g = random_graph(rng, n, 6);
        UndirectedGraph h(2 * n);
        for (auto [u, v] : g.edges) h.add_edge(u, v);
        h.add_edge(std::min(t, n), std::max(t, n));
        for (int i = 1; i < n; ++i) h.add_edge(n + i - 1, n + i);
        h.add_edge(s, 2 * n - 1);
        check_pcc_graph(ck, h, rng, false);
    }
}

void check_gmtsp(Checker& ck, Rng& rng, int n) {
    auto g = random_graph(rng, n, 9);
    int m = g.m();
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto w = sample_weights(2 * static_cast<size_t>(m), rng);
    int budget = 2 * m;
    std::vector<std::pair<Parity, Parity>> acc(budget + 1);
    std::vector<int> phi(m, 0);
    int total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
        int x = code, mult = 0, W = 0;
        std::vector<int> deg(n, 0);
        std::vector<Edge> support;
        for (int e = 0; e < m; ++e) {
            phi[e] = x % 3;
            x /= 3;
            if (!phi[e]) continue;
            mult += phi[e];
            W += w[phi[e] == 1 ? 2 * e : 2 * e + 1];
            deg[g.edges[e].first] += phi[e];
            deg[g.edges[e].second] += phi[e];
            support.push_back(g.edges[e]);
        }
        bool even = std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
        if (!even) continue;
        Mask all = (Mask{1} << n) - 1;
        auto& [c, s] = acc[mult];
        if (count_cuts(n, all, support, 1) & 1) flip(c, W);
        if (components(n, all, support) == 1) flip(s, W);
    }
    auto dp = gmtsp_countc(w, g, ntd, budget);
    for (int i = 0; i <= budget; ++i) ck.compare(acc[i].first, acc[i].second, dp[i], "i=" + std::to_string(i));
}

// edge sets of the given size
template <class Fn>
void for_each_sized(int m, int size, Fn fn) {
    for (Mask X = 0; X < (Mask{1} << m); ++X)
        if (std::popcount(X) == size) fn(X);
}

void check_k_leaf(Checker& ck, Rng& rng, int n) {
    n = std::max(n, 3);
    auto g = random_graph(rng, n, 12);
    int m = g.m();
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto w = sample_weights(static_cast<size_t>(m), rng);
    int v1 = static_cast<int>(rng() % n);
    std::vector<std::pair<Parity, Parity>> acc(n + 1);
    Mask all = (Mask{1} << n) - 1;
    for_each_sized(m, n - 1, [&](Mask X) {
        std::vector<int> deg(n, 0);
        std::vector<Edge> ex;
        int W = 0;
        for (int e = 0; e < m; ++e)
            if (bit(X, e)) {
                ++deg[g.edges[e].first], ++deg[g.edges[e].second];
                ex.push_back(g.edges[e]);
                W += w[e];
            }
        if (deg[v1] < 2) return;
        bool tree = components(n, all, ex) == 1;
        Mask rest = all & ~(Mask{1} << v1);
        for (Mask L = rest;; L = (L - 1) & rest) {
            bool ok = true;
            for (int v = 0; v < n; ++v)
                if (bit(L, v) && deg[v] != 1) ok = false;
            for (auto [u, v] : ex)
                if (bit(L, u) && bit(L, v)) ok = false;
            if (ok) {
                auto& [c, s] = acc[std::popcount(L)];
                if (count_cuts(n, all & ~L, ex, Mask{1} << v1) & 1) flip(c, W);
                if (tree) flip(s, W);
            }
            if (!L) break;
        }
    });
    auto dp = k_leaf_spanning_tree_countc(w, g, ntd, v1);
    for (int l = 0; l <= n; ++l) ck.compare(acc[l].first, acc[l].second, dp[l], "leaves=" + std::to_string(l));
}

void check_outbranching(Checker& ck, Rng& rng, int n) {
    auto g = random_digraph(rng, n, 12);
    int m = g.m();
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto w = sample_weights(static_cast<size_t>(m), rng);
    int r = static_cast<int>(rng() % n);
    std::vector<std::pair<Parity, Parity>> acc(n + 1);
    Mask all = (Mask{1} << n) - 1;
    for_each_sized(m, n - 1, [&](Mask X) {
        std::vector<int> in(n, 0), out(n, 0);
        std::vector<Edge> ex;
        int W = 0;
        for (int e = 0; e < m; ++e)
            if (bit(X, e)) {
                ++out[g.arcs[e].first], ++in[g.arcs[e].second];
                ex.push_back(g.arcs[e]);
                W += w[e];
            }
        for (int v = 0; v < n; ++v)
            if (in[v] != (v == r ? 0 : 1)) return;
        // in-degree one everywhere but r: an outbranching iff weakly connected
        bool tree = components(n, all, ex) == 1;
        Mask rest = all & ~(Mask{1} << r);
        for (Mask L = rest;; L = (L - 1) & rest) {
            bool ok = true;
            for (int v = 0; v < n; ++v)
                if (bit(L, v) && out[v]) ok = false;
            if (ok) {
                auto& [c, s] = acc[std::popcount(L)];
                if (count_cuts(n, all & ~L, ex, Mask{1} << r) & 1) flip(c, W);
                if (tree) flip(s, W);
            }
            if (!L) break;
        }
    });
    auto dp = k_leaf_outbranching_countc(w, g, ntd, r);
    for (int l = 0; l <= n; ++l) ck.compare(acc[l].first, acc[l].second, dp[l], "leaves=" + std::to_string(l));
}

void check_mfdst(Checker& ck, Rng& rng, int n) {
    auto g = random_graph(rng, n, 12);
    int m = g.m();
    auto ntd = make_nice(heuristic_decompose(g), g);
    auto w = sample_weights(static_cast<size_t>(m), rng);
    std::vector<std::pair<Parity, Parity>> acc(n + 1);
    std::vector<int> full(n, 0);
    for (auto [u, v] : g.edges) ++full[u], ++full[v];
    Mask all = (Mask{1} << n) - 1;
    for_each_sized(m, n - 1, [&](Mask X) {
        std::vector<int> deg(n, 0);
        std::vector<Edge> ex;
        int W = 0;
        for (int e = 0; e < m; ++e)
            if (bit(X, e)) {
                ++deg[g.edges[e].first], ++deg[g.edges[e].second];
                ex.push_back(g.edges[e]);
                W += w[e];
            }
        int k = 0;
        for (int v = 0; v < n; ++v) k += deg[v] == full[v];
        auto& [c, s] = acc[k];
        if (count_cuts(n, all, ex, 1) & 1) flip(c, W);
        if (components(n, all, ex) == 1) flip(s, W);
    });
    for (int k = 0; k <= n; ++k)
        ck.compare(acc[k].first, acc[k].second, full_degree_st_countc(w, g, ntd, k), "k=" + std::to_string(k));
}

}  // namespace

CancellationReport cancellation_check(Problem p, int instances, uint64_t seed, int max_n) {
    CancellationReport rep;
    Rng rng(derive_seed(seed, static_cast<uint64_t>(p)));
    for (int i = 0; i < instances; ++i) {
        int n = std::uniform_int_distribution<int>(3, max_n)(rng);
        Checker ck{rep, std::string(problem_name(p)) + " #" + std::to_string(i)};
        switch (p) {
        case Problem::Steiner: check_steiner(ck, rng, n); break;
        case Problem::Cvc: check_cvc(ck, rng, n); break;
        case Problem::Cds: check_cds(ck, rng, n); break;
        case Problem::Coct: check_coct(ck, rng, n); break;
        case Problem::Fvs: check_fvs(ck, rng, n); break;
        case Problem::Cfvs: check_cfvs(ck, rng, n); break;
        case Problem::PccUndirected: check_pcc(ck, rng, n, false); break;
        case Problem::PccDirected: check_pcc(ck, rng, n, true); break;
        case Problem::LongestPath: check_longest_path(ck, rng, n); break;
        case Problem::Gmtsp: check_gmtsp(ck, rng, n); break;
        case Problem::KLeafSpanningTree: check_k_leaf(ck, rng, n); break;
        case Problem::KLeafOutbranching: check_outbranching(ck, rng, n); break;
        case Problem::FullDegreeSpanningTree: check_mfdst(ck, rng, n); break;
        default: return rep;
        }
        ++rep.instances;
    }
    return rep;
}
