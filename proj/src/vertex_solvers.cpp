#include "cutcount/vertex_solvers.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace cutcount {

size_t vertex_universe(int n) { return static_cast<size_t>(n); }
size_t paired_universe(int n) { return 2 * static_cast<size_t>(n); }

namespace {

constexpr int kSize = 0;  // i, or a for the forest problems
constexpr int kEdges = 1;
constexpr int kMarks = 2;

struct Base : DpProblem {
    const UndirectedGraph& g;
    const VertexRun& run;
    AccLimits lim;

    Base(const UndirectedGraph& g_, const VertexRun& r) : g(g_), run(r) {}
    int w(int u) const { return (*run.w)[u]; }
    bool req(int v) const { return !run.required.empty() && run.required[v]; }

    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries()) out.add(in.erase_digit(e.col, p), e.acc, in.value(e));
    }
};

// ---- Steiner tree: digits 0, 1_1, 1_2 ----
struct SteinerDp : Base {
    using Base::Base;
    int radix() const override { return 3; }
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            if (!req(v)) out.add(out.insert_digit(e.col, p, 0), e.acc, val);
            uint64_t a = e.acc + acc_unit(kSize);
            if (!lim.ok(a)) continue;
            out.add_shifted(out.insert_digit(e.col, p, 1), a, val, w(v));
            if (v != run.v1) out.add_shifted(out.insert_digit(e.col, p, 2), a, val, w(v));
        }
    }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            if (du && dv && du != dv) continue;  // edge across the cut
            out.add(e.col, e.acc, in.value(e));
        }
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        diagonal_join(a, b, out, lim, [&](uint64_t col) {
            JoinCorrection c;
            for (int p = 0; p < static_cast<int>(a.bag().size()); ++p)
                if (a.digit(col, p)) {
                    c.acc += acc_unit(kSize);
                    c.w += w(a.bag()[p]);
                }
            return c;
        }, [](uint64_t&) { return true; });
    }
};

// ---- connected vertex cover: digits 0, 1_1, 1_2 ----
struct CvcDp : SteinerDp {
    using SteinerDp::SteinerDp;
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            if (du == 0 && dv == 0) continue;  // uncovered
            if (du && dv && du != dv) continue;
            out.add(e.col, e.acc, in.value(e));
        }
    }
};

// ---- connected dominating set: digits 0_N, 0_Y, 1_1, 1_2 ----
struct CdsDp : Base {
    using Base::Base;
    int radix() const override { return 4; }
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            if (!req(v)) out.add(out.insert_digit(e.col, p, 0), e.acc, val);
            uint64_t a = e.acc + acc_unit(kSize);
            if (!lim.ok(a)) continue;
            out.add_shifted(out.insert_digit(e.col, p, 2), a, val, w(v));
            if (v != run.v1) out.add_shifted(out.insert_digit(e.col, p, 3), a, val, w(v));
        }
    }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            const uint64_t* val = in.value(e);
            if (du < 2 && dv < 2) {
                out.add(e.col, e.acc, val);
            } else if (du >= 2 && dv >= 2) {
                if (du == dv) out.add(e.col, e.acc, val);
            } else {
                // a solution vertex next to an outside one: 0_N turns into 0_Y
                int po = du < 2 ? pu : pv;
                int dother = du < 2 ? du : dv;
                out.add(dother == 1 ? e.col : in.with_digit(e.col, po, 1), e.acc, val);
            }
        }
    }
    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries())
            if (in.digit(e.col, p) != 0) out.add(in.erase_digit(e.col, p), e.acc, in.value(e));
    }
    void join(const ParityTable& a0, const ParityTable& b0, ParityTable& out) override {
        // covering product over the dominated flags: zeta 0_N -> 0_Y, multiply, zeta back
        static const std::vector<int> up{1, -1, -1, -1};
        ParityTable a = a0, b = b0;
        digit_zeta(a, up);
        digit_zeta(b, up);
        a.normalize();
        b.normalize();
        diagonal_join(a, b, out, lim, [&](uint64_t col) {
            JoinCorrection c;
            for (int p = 0; p < static_cast<int>(a.bag().size()); ++p)
                if (a.digit(col, p) >= 2) {
                    c.acc += acc_unit(kSize);
                    c.w += w(a.bag()[p]);
                }
            return c;
        }, [](uint64_t&) { return true; });
        digit_zeta(out, up);
    }
};

// ---- connected odd cycle transversal: digits 0_L, 0_R, 1_1, 1_2 ----
struct CoctDp : Base {
    using Base::Base;
    int radix() const override { return 4; }
    int wx(int v) const { return w(2 * v); }
    int wl(int v) const { return w(2 * v + 1); }
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            if (!req(v)) {
                out.add_shifted(out.insert_digit(e.col, p, 0), e.acc, val, wl(v));
                out.add(out.insert_digit(e.col, p, 1), e.acc, val);
            }
            uint64_t a = e.acc + acc_unit(kSize);
            if (!lim.ok(a)) continue;
            out.add_shifted(out.insert_digit(e.col, p, 2), a, val, wx(v));
            if (v != run.v1) out.add_shifted(out.insert_digit(e.col, p, 3), a, val, wx(v));
        }
    }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            if (du >= 2 && dv >= 2 && du != dv) continue;
            if (du < 2 && du == dv) continue;  // both on the same side of the bipartition
            out.add(e.col, e.acc, in.value(e));
        }
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        diagonal_join(a, b, out, lim, [&](uint64_t col) {
            JoinCorrection c;
            for (int p = 0; p < static_cast<int>(a.bag().size()); ++p) {
                int d = a.digit(col, p), v = a.bag()[p];
                if (d >= 2) {
                    c.acc += acc_unit(kSize);
                    c.w += wx(v);
                } else if (d == 0) {
                    c.w += wl(v);
                }
            }
            return c;
        }, [](uint64_t&) { return true; });
    }
};

// ---- feedback vertex set (forest side counted): digits 0, 1_1, 1_2 ----
struct FvsDp : Base {
    int edge_field, mark_field;
    FvsDp(const UndirectedGraph& g_, const VertexRun& r, bool split) : Base(g_, r), edge_field(kEdges), mark_field(split ? kMarks : kEdges) {}
    int radix() const override { return 3; }
    int wf(int v) const { return w(2 * v); }
    int wm(int v) const { return w(2 * v + 1); }
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            out.add(out.insert_digit(e.col, p, 0), e.acc, val);
            if (req(v)) continue;
            uint64_t a = e.acc + acc_unit(kSize);
            if (!lim.ok(a)) continue;
            out.add_shifted(out.insert_digit(e.col, p, 1), a, val, wf(v));
            out.add_shifted(out.insert_digit(e.col, p, 2), a, val, wf(v));
        }
    }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            if (du && dv && du != dv) continue;
            uint64_t a = e.acc;
            if (du && du == dv) {
                a += acc_unit(edge_field);
                if (!lim.ok(a)) continue;
            }
            out.add(e.col, a, in.value(e));
        }
    }
    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries()) {
            uint64_t col = in.erase_digit(e.col, p);
            out.add(col, e.acc, in.value(e));
            // markers are chosen at the forget node, on side 1 only
            if (in.digit(e.col, p) == 1) {
                uint64_t a = e.acc + acc_unit(mark_field);
                if (lim.ok(a)) out.add_shifted(col, a, in.value(e), wm(v));
            }
        }
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        diagonal_join(a, b, out, lim, [&](uint64_t col) {
            JoinCorrection c;
            for (int p = 0; p < static_cast<int>(a.bag().size()); ++p)
                if (a.digit(col, p)) {
                    c.acc += acc_unit(kSize);
                    c.w += wf(a.bag()[p]);
                }
            return c;
        }, [](uint64_t&) { return true; });
    }
};

// ---- connected feedback vertex set: digits 0_1, 0_2 (Y cut), 1_1, 1_2 (forest cut) ----
struct CfvsDp : FvsDp {
    using FvsDp::FvsDp;
    int radix() const override { return 4; }
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            out.add(out.insert_digit(e.col, p, 0), e.acc, val);
            if (v != run.v1) out.add(out.insert_digit(e.col, p, 1), e.acc, val);
            if (req(v)) continue;
            uint64_t a = e.acc + acc_unit(kSize);
            if (!lim.ok(a)) continue;
            out.add_shifted(out.insert_digit(e.col, p, 2), a, val, wf(v));
            out.add_shifted(out.insert_digit(e.col, p, 3), a, val, wf(v));
        }
    }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            if (du < 2 && dv < 2 && du != dv) continue;  // across the Y cut
            if (du >= 2 && dv >= 2 && du != dv) continue;  // across the forest cut
            uint64_t a = e.acc;
            if (du >= 2 && du == dv) {
                a += acc_unit(edge_field);
                if (!lim.ok(a)) continue;
            }
            out.add(e.col, a, in.value(e));
        }
    }
    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries()) {
            uint64_t col = in.erase_digit(e.col, p);
            out.add(col, e.acc, in.value(e));
            if (in.digit(e.col, p) == 2) {
                uint64_t a = e.acc + acc_unit(mark_field);
                if (lim.ok(a)) out.add_shifted(col, a, in.value(e), wm(v));
            }
        }
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        diagonal_join(a, b, out, lim, [&](uint64_t col) {
            JoinCorrection c;
            for (int p = 0; p < static_cast<int>(a.bag().size()); ++p)
                if (a.digit(col, p) >= 2) {
                    c.acc += acc_unit(kSize);
                    c.w += wf(a.bag()[p]);
                }
            return c;
        }, [](uint64_t&) { return true; });
    }
};

std::vector<char> mask_of(int n, const std::vector<int>& S) {
    std::vector<char> m(n, 0);
    for (int v : S) {
        if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
        m[v] = 1;
    }
    return m;
}

int distinct_count(std::vector<int> S) {
    std::sort(S.begin(), S.end());
    return static_cast<int>(std::unique(S.begin(), S.end()) - S.begin());
}

ParityTable run_problem(DpProblem& dp, const NiceTreeDecomposition& td, const VertexRun& run) {
    return run_dp(dp, td, *run.alg, run.dp);
}

void check_td(const UndirectedGraph& g, const NiceTreeDecomposition& td) {
    // cheap consistency: the root must be the last node and the bags must stay in range
    if (td.nodes.empty() || td.root != static_cast<int>(td.nodes.size()) - 1) throw std::invalid_argument("malformed nice decomposition");
    for (auto& x : td.nodes)
        for (int v : x.bag)
            if (v < 0 || v >= g.n) throw std::invalid_argument("decomposition vertex out of range");
}

WParity exact_slice(const ParityTable& root, const WeightAlgebra& alg, uint64_t acc) {
    return WParity::from_value(alg, root_cell(root, acc));
}

bool nonzero(const ParityTable& root, uint64_t acc) {
    auto v = root_cell(root, acc);
    return v && !root.alg().is_zero(v);
}

}  // namespace

// ---- low level roots ----

ParityTable cvc_root(const UndirectedGraph& g, const NiceTreeDecomposition& td, const VertexRun& run, int kmax) {
    CvcDp dp(g, run);
    dp.lim.max[kSize] = kmax;
    return run_problem(dp, td, run);
}

ParityTable fvs_root(const UndirectedGraph& g, const NiceTreeDecomposition& td, const VertexRun& run, bool split) {
    FvsDp dp(g, run, split);
    dp.lim.max[kSize] = g.n;
    dp.lim.max[kEdges] = split ? std::max(g.n - 1, 0) : g.n;
    dp.lim.max[kMarks] = g.n;
    return run_problem(dp, td, run);
}

ParityTable cfvs_root(const UndirectedGraph& g, const NiceTreeDecomposition& td, const VertexRun& run, bool split) {
    CfvsDp dp(g, run, split);
    dp.lim.max[kSize] = g.n;
    dp.lim.max[kEdges] = split ? std::max(g.n - 1, 0) : g.n;
    dp.lim.max[kMarks] = g.n;
    return run_problem(dp, td, run);
}

bool forest_slice_nonzero(const ParityTable& root, int A) {
    // merged layout: edges + markers must equal the forest size
    return nonzero(root, A * acc_unit(kSize) + A * acc_unit(kEdges));
}

// ---- countc entry points (Exact mode) ----

WParity steiner_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& T, int k) {
    if (T.empty()) throw std::invalid_argument("steiner: empty terminal set");
    if (k < distinct_count(T)) throw std::invalid_argument("steiner: k smaller than the terminal count");
    check_td(g, td);
    WeightAlgebra alg(WeightMode::Exact, w.N * k);
    VertexRun run{&w, &alg, mask_of(g.n, T), *std::min_element(T.begin(), T.end()), {}};
    SteinerDp dp(g, run);
    dp.lim.max[kSize] = k;
    auto root = run_problem(dp, td, run);
    return exact_slice(root, alg, k * acc_unit(kSize));
}

WParity cvc_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k) {
    if (S.empty()) throw std::invalid_argument("cvc: S must be nonempty (iterate v1 outside)");
    if (k > g.n) throw std::invalid_argument("cvc: k exceeds |V|");
    check_td(g, td);
    WeightAlgebra alg(WeightMode::Exact, w.N * std::max(k, 0));
    VertexRun run{&w, &alg, mask_of(g.n, S), *std::min_element(S.begin(), S.end()), {}};
    auto root = cvc_root(g, td, run, k);
    return exact_slice(root, alg, k * acc_unit(kSize));
}

WParity cds_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k) {
    if (k == 0 && g.n > 0) throw std::invalid_argument("cds: k = 0 on a nonempty graph");
    if (S.empty()) throw std::invalid_argument("cds: S must be nonempty (iterate v1 outside)");
    if (k > g.n) throw std::invalid_argument("cds: k exceeds |V|");
    check_td(g, td);
    WeightAlgebra alg(WeightMode::Exact, w.N * k);
    VertexRun run{&w, &alg, mask_of(g.n, S), *std::min_element(S.begin(), S.end()), {}};
    CdsDp dp(g, run);
    dp.lim.max[kSize] = k;
    auto root = run_problem(dp, td, run);
    return exact_slice(root, alg, k * acc_unit(kSize));
}

WParity coct_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k) {
    if (S.empty()) throw std::invalid_argument("coct: S must be nonempty (iterate v1 outside)");
    if (k > g.n) throw std::invalid_argument("coct: k exceeds |V|");
    check_td(g, td);
    WeightAlgebra alg(WeightMode::Exact, w.N * g.n);
    VertexRun run{&w, &alg, mask_of(g.n, S), *std::min_element(S.begin(), S.end()), {}};
    CoctDp dp(g, run);
    dp.lim.max[kSize] = k;
    auto root = run_problem(dp, td, run);
    return exact_slice(root, alg, k * acc_unit(kSize));
}

WParity fvs_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int A, int B, int C) {
    if (B >= std::max(g.n, 1)) throw std::invalid_argument("fvs: B must be below |V|");
    check_td(g, td);
    WeightAlgebra alg(WeightMode::Exact, w.N * 2 * g.n);
    VertexRun run{&w, &alg, mask_of(g.n, S), -1, {}};
    auto root = fvs_root(g, td, run, true);
    return exact_slice(root, alg, A * acc_unit(kSize) + B * acc_unit(kEdges) + C * acc_unit(kMarks));
}

WParity cfvs_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int A, int B, int C) {
    if (S.empty()) throw std::invalid_argument("cfvs: S must be nonempty (iterate v1 outside)");
    if (B >= std::max(g.n, 1)) throw std::invalid_argument("cfvs: B must be below |V|");
    check_td(g, td);
    WeightAlgebra alg(WeightMode::Exact, w.N * 2 * g.n);
    VertexRun run{&w, &alg, mask_of(g.n, S), *std::min_element(S.begin(), S.end()), {}};
    auto root = cfvs_root(g, td, run, true);
    return exact_slice(root, alg, A * acc_unit(kSize) + B * acc_unit(kEdges) + C * acc_unit(kMarks));
}

// ---- hitting sets for v1 ----

namespace {

// shortest cycle through BFS roots; odd_only keeps only odd closed walks.
// A candidate is accepted only when both tree paths meet at the root alone.
std::vector<int> shortest_cycle_impl(const UndirectedGraph& g, bool odd_only) {
    auto adj = g.adjacency();
    std::vector<int> best;
    for (int r = 0; r < g.n; ++r) {
        std::vector<int> dist(g.n, -1), par(g.n, -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    q.push(v);
                    continue;
                }
                if (v == par[u] || u > v) continue;
                bool odd = dist[u] == dist[v];
                if (odd_only && !odd) continue;
                if (!odd && std::abs(dist[u] - dist[v]) != 1) continue;
                int len = dist[u] + dist[v] + 1;
                if (!best.empty() && static_cast<int>(best.size()) <= len) continue;
                std::vector<int> pu, pv;
                for (int x = u; x != -1; x = par[x]) pu.push_back(x);
                for (int x = v; x != -1; x = par[x]) pv.push_back(x);
                std::vector<char> on(g.n, 0);
                bool simple = true;
                for (int x : pu) on[x] = 1;
                for (int x : pv)
                    if (on[x] && x != r) simple = false;
                if (!simple) continue;
                pu.pop_back();  // root appears in both
                pu.insert(pu.end(), pv.begin(), pv.end());
                best = pu;
            }
        }
    }
    return best;
}

}  // namespace

std::vector<int> shortest_cycle(const UndirectedGraph& g) { return shortest_cycle_impl(g, false); }
std::vector<int> shortest_odd_cycle(const UndirectedGraph& g) { return shortest_cycle_impl(g, true); }

// ---- Monte Carlo solvers ----

namespace {

// one run: sample weights and alpha from the run seed
struct RunEnv {
    WeightFunction w;
    WeightAlgebra alg;
    RunEnv(size_t universe, WeightMode mode, int max_weight, uint64_t seed)
        : w(sample_weights(universe, derive_seed(seed, 1))), alg(run_algebra(mode, max_weight, seed)) {}
};

DpOptions dp_opts(const SolveOptions& opt) {
    DpOptions d;
    d.stats = opt.stats;
    return d;
}

}  // namespace

MonteCarloAnswer solve_steiner(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& T, int k, const SolveOptions& opt) {
    if (T.empty()) throw std::invalid_argument("steiner: empty terminal set");
    check_td(g, td);
    int kk = std::min(k, g.n);
    if (kk < distinct_count(T)) return amplified_solve([](uint64_t) { return false; }, opt.repetitions, opt.seed);
    auto req = mask_of(g.n, T);
    int v1 = *std::min_element(T.begin(), T.end());
    return amplified_solve([&](uint64_t seed) {
        RunEnv env(vertex_universe(g.n), opt.mode, 2 * g.n * kk, seed);
        VertexRun run{&env.w, &env.alg, req, v1, dp_opts(opt)};
        SteinerDp dp(g, run);
        dp.lim.max[kSize] = kk;
        auto root = run_problem(dp, td, run);
        for (int i = 1; i <= kk; ++i)
            if (nonzero(root, i * acc_unit(kSize))) return true;
        return false;
    }, opt.repetitions, opt.seed);
}

MonteCarloAnswer solve_cvc(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt) {
    check_td(g, td);
    int kk = std::min(k, g.n);
    auto req = mask_of(g.n, S);
    // empty cover: only when nothing is required and there is nothing to cover
    bool trivial = S.empty() && g.m() == 0 && kk >= 0;
    std::vector<int> v1s;
    if (!S.empty())
        v1s.push_back(*std::min_element(S.begin(), S.end()));
    else if (g.m() > 0)
        v1s = {g.edges[0].first, g.edges[0].second};
    return amplified_solve([&](uint64_t seed) {
        if (trivial) return true;
        if (kk < std::max(1, distinct_count(S))) return false;
        for (int v1 : v1s) {
            RunEnv env(vertex_universe(g.n), opt.mode, 2 * g.n * kk, seed);
            auto r = req;
            r[v1] = 1;
            VertexRun run{&env.w, &env.alg, r, v1, dp_opts(opt)};
            auto root = cvc_root(g, td, run, kk);
            for (int i = 1; i <= kk; ++i)
                if (nonzero(root, i * acc_unit(kSize))) return true;
        }
        return false;
    }, opt.repetitions, opt.seed);
}

MonteCarloAnswer solve_cds(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt) {
    check_td(g, td);
    int kk = std::min(k, g.n);
    auto req = mask_of(g.n, S);
    std::vector<int> v1s;
    if (!S.empty()) {
        v1s.push_back(*std::min_element(S.begin(), S.end()));
    } else if (g.n > 0) {
        // every dominating set meets the closed neighbourhood of a min-degree vertex
        auto adj = g.adjacency();
        int best = 0;
        for (int v = 1; v < g.n; ++v)
            if (adj[v].size() < adj[best].size()) best = v;
        v1s = adj[best];
        v1s.push_back(best);
        std::sort(v1s.begin(), v1s.end());
    }
    return amplified_solve([&](uint64_t seed) {
        if (g.n == 0) return true;
        if (kk < std::max(1, distinct_count(S))) return false;
        for (int v1 : v1s) {
            RunEnv env(vertex_universe(g.n), opt.mode, 2 * g.n * kk, seed);
            auto r = req;
            r[v1] = 1;
            VertexRun run{&env.w, &env.alg, r, v1, dp_opts(opt)};
            CdsDp dp(g, run);
            dp.lim.max[kSize] = kk;
            auto root = run_problem(dp, td, run);
            for (int i = 1; i <= kk; ++i)
                if (nonzero(root, i * acc_unit(kSize))) return true;
        }
        return false;
    }, opt.repetitions, opt.seed);
}

MonteCarloAnswer solve_coct(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt) {
    check_td(g, td);
    int kk = std::min(k, g.n);
    auto req = mask_of(g.n, S);
    bool bip = is_bipartite_without(g, std::vector<char>(g.n, 0));
    bool trivial = S.empty() && bip && kk >= 0;
    std::vector<int> v1s;
    if (!S.empty())
        v1s.push_back(*std::min_element(S.begin(), S.end()));
    else if (!bip)
        v1s = shortest_odd_cycle(g);
    std::sort(v1s.begin(), v1s.end());
    return amplified_solve([&](uint64_t seed) {
        if (trivial) return true;
        if (kk < std::max(1, distinct_count(S))) return false;
        for (int v1 : v1s) {
            RunEnv env(paired_universe(g.n), opt.mode, 4 * g.n * g.n, seed);
            auto r = req;
            r[v1] = 1;
            VertexRun run{&env.w, &env.alg, r, v1, dp_opts(opt)};
            CoctDp dp(g, run);
            dp.lim.max[kSize] = kk;
            auto root = run_problem(dp, td, run);
            for (int i = 1; i <= kk; ++i)
                if (nonzero(root, i * acc_unit(kSize))) return true;
        }
        return false;
    }, opt.repetitions, opt.seed);
}

MonteCarloAnswer solve_fvs(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt) {
    check_td(g, td);
    int kk = std::min(k, g.n);
    auto req = mask_of(g.n, S);
    return amplified_solve([&](uint64_t seed) {
        if (kk < distinct_count(S)) return false;
        if (g.n == 0) return true;
        RunEnv env(paired_universe(g.n), opt.mode, 4 * g.n * 2 * g.n, seed);
        VertexRun run{&env.w, &env.alg, req, -1, dp_opts(opt)};
        auto root = fvs_root(g, td, run, false);
        for (int kp = 0; kp <= kk; ++kp)
            if (forest_slice_nonzero(root, g.n - kp)) return true;
        return false;
    }, opt.repetitions, opt.seed);
}

MonteCarloAnswer solve_cfvs(const UndirectedGraph& g, const NiceTreeDecomposition& td, const std::vector<int>& S, int k, const SolveOptions& opt) {
    check_td(g, td);
    int kk = std::min(k, g.n);
    auto req = mask_of(g.n, S);
    bool forest = is_forest_without(g, std::vector<char>(g.n, 0));
    bool trivial = S.empty() && forest && kk >= 0;
    std::vector<int> v1s;
    if (!S.empty())
        v1s.push_back(*std::min_element(S.begin(), S.end()));
    else if (!forest)
        v1s = shortest_cycle(g);
    std::sort(v1s.begin(), v1s.end());
    return amplified_solve([&](uint64_t seed) {
        if (trivial) return true;
        if (kk < std::max(1, distinct_count(S))) return false;
        for (int v1 : v1s) {
            RunEnv env(paired_universe(g.n), opt.mode, 4 * g.n * 2 * g.n, seed);
            auto r = req;
            r[v1] = 1;
            VertexRun run{&env.w, &env.alg, r, v1, dp_opts(opt)};
            auto root = cfvs_root(g, td, run, false);
            for (int kp = 1; kp <= kk; ++kp)
                if (forest_slice_nonzero(root, g.n - kp)) return true;
        }
        return false;
    }, opt.repetitions, opt.seed);
}

}  // namespace cutcount
