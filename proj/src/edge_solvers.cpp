#include "cutcount/edge_solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cutcount {

namespace {

// Join by enumerating compatible digit pairs. opts[da] lists (db, result) for
// every digit db of the second table that may meet da at the same bag vertex.
// No accumulator correction: edges are introduced exactly once and vertex
// counters are updated at forget nodes.
using PairRule = std::vector<std::vector<std::pair<int, int>>>;

template <class Fix>
void pair_join(const ParityTable& a, const ParityTable& b, ParityTable& out, const AccLimits& lim, const PairRule& opts, Fix fix) {
    auto ga = a.col_groups();
    auto gb = b.col_groups();
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    const auto& alg = out.alg();
    std::unordered_map<uint64_t, uint32_t> bidx;
    bidx.reserve(gb.size() * 2);
    for (uint32_t j = 0; j < gb.size(); ++j) bidx[eb[gb[j].first].col] = j;
    int t = static_cast<int>(a.bag().size());
    std::vector<int> da(t);

    for (auto [abeg, aend] : ga) {
        uint64_t col = ea[abeg].col;
        for (int p = 0; p < t; ++p) da[p] = a.digit(col, p);
        auto rec = [&](auto& self, int p, uint64_t colb, uint64_t colr) -> void {
            if (p == t) {
                auto it = bidx.find(colb);
                if (it == bidx.end()) return;
                auto [bbeg, bend] = gb[it->second];
                for (uint32_t x = abeg; x < aend; ++x)
                    for (uint32_t y = bbeg; y < bend; ++y) {
                        uint64_t acc = ea[x].acc + eb[y].acc;
                        if (!fix(acc) || !lim.ok(acc)) continue;
                        alg.add_product(out.cell(colr, acc), a.value(ea[x]), b.value(eb[y]), 0);
                    }
                return;
            }
            uint64_t pl = a.place(p);
            for (auto [db, dr] : opts[da[p]]) self(self, p + 1, colb + db * pl, colr + dr * pl);
        };
        rec(rec, 0, 0, 0);
    }
}

auto no_fix = [](uint64_t&) { return true; };

constexpr int kEdgesF = 0;
constexpr int kMarksF = 1;
constexpr int kLeavesF = 1;
constexpr int kV1DegF = 3;

void check_edges(const NiceTreeDecomposition& td, int m) {
    int seen = 0;
    for (auto& x : td.nodes)
        if (x.type == NodeType::IntroduceEdge) {
            if (x.edge < 0 || x.edge >= m) throw std::invalid_argument("decomposition edge index out of range");
            ++seen;
        }
    if (seen != m) throw std::invalid_argument("decomposition does not introduce every edge once");
}

struct EdgeBase : DpProblem {
    const WeightFunction& w;
    AccLimits lim;
    explicit EdgeBase(const WeightFunction& w_) : w(w_) {}
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) out.add(out.insert_digit(e.col, p, 0), e.acc, in.value(e));
    }
};

// ---- undirected partial cycle cover ----
struct PccDp : EdgeBase {
    using EdgeBase::EdgeBase;
    int radix() const override { return 4; }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        int wx = w[2 * x.edge], wm = w[2 * x.edge + 1];
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            out.add(e.col, e.acc, val);
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            if (du == 3 || dv == 3) continue;
            int su = du, sv = dv;  // 1, 2 = side of a degree-one vertex, 0 = free
            if (su && sv && su != sv) continue;
            for (int j = 1; j <= 2; ++j) {
                if ((su && su != j) || (sv && sv != j)) continue;
                uint64_t col = in.with_digit(in.with_digit(e.col, pu, du ? 3 : j), pv, dv ? 3 : j);
                uint64_t a = e.acc + acc_unit(kEdgesF);
                if (!lim.ok(a)) continue;
                out.add_shifted(col, a, val, wx);
                if (j == 1 && lim.ok(a + acc_unit(kMarksF))) out.add_shifted(col, a + acc_unit(kMarksF), val, wx + wm);
            }
        }
    }
    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries()) {
            int d = in.digit(e.col, p);
            if (d == 0 || d == 3) out.add(in.erase_digit(e.col, p), e.acc, in.value(e));
        }
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        static const PairRule rule{{{0, 0}, {1, 1}, {2, 2}, {3, 3}}, {{0, 1}, {1, 3}}, {{0, 2}, {2, 3}}, {{0, 3}}};
        pair_join(a, b, out, lim, rule, no_fix);
    }
};

// ---- directed partial cycle cover ----
// 0 = 00, 1 = 01_1, 2 = 01_2, 3 = 10_1, 4 = 10_2, 5 = 11
struct DirPccDp : EdgeBase {
    using EdgeBase::EdgeBase;
    int radix() const override { return 6; }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        int wx = w[2 * x.edge], wm = w[2 * x.edge + 1];
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            out.add(e.col, e.acc, val);
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            // the tail needs a free out-slot, the head a free in-slot
            if (!(du == 0 || du == 3 || du == 4)) continue;
            if (!(dv == 0 || dv == 1 || dv == 2)) continue;
            int su = du ? du - 2 : 0, sv = dv;
            for (int j = 1; j <= 2; ++j) {
                if ((su && su != j) || (sv && sv != j)) continue;
                uint64_t col = in.with_digit(in.with_digit(e.col, pu, du ? 5 : j), pv, dv ? 5 : j + 2);
                uint64_t a = e.acc + acc_unit(kEdgesF);
                if (!lim.ok(a)) continue;
                out.add_shifted(col, a, val, wx);
                if (j == 1 && lim.ok(a + acc_unit(kMarksF))) out.add_shifted(col, a + acc_unit(kMarksF), val, wx + wm);
            }
        }
    }
    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries()) {
            int d = in.digit(e.col, p);
            if (d == 0 || d == 5) out.add(in.erase_digit(e.col, p), e.acc, in.value(e));
        }
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        static const PairRule rule{
            {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}},
            {{0, 1}, {3, 5}},
            {{0, 2}, {4, 5}},
            {{0, 3}, {1, 5}},
            {{0, 4}, {2, 5}},
            {{0, 5}},
        };
        pair_join(a, b, out, lim, rule, no_fix);
    }
};

// ---- graph metric TSP: digit = side * 2 + parity ----
struct GmtspDp : EdgeBase {
    int v1;
    GmtspDp(const WeightFunction& w_, int v1_) : EdgeBase(w_), v1(v1_) {}
    int radix() const override { return 4; }
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) {
            out.add(out.insert_digit(e.col, p, 0), e.acc, in.value(e));
            if (v != v1) out.add(out.insert_digit(e.col, p, 2), e.acc, in.value(e));
        }
    }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            out.add(e.col, e.acc, val);
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            if (du / 2 != dv / 2) continue;
            uint64_t a1 = e.acc + acc_unit(kEdgesF), a2 = a1 + acc_unit(kEdgesF);
            if (lim.ok(a1)) out.add_shifted(in.with_digit(in.with_digit(e.col, pu, du ^ 1), pv, dv ^ 1), a1, val, w[2 * x.edge]);
            if (lim.ok(a2)) out.add_shifted(e.col, a2, val, w[2 * x.edge + 1]);
        }
    }
    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries())
            if (in.digit(e.col, p) % 2 == 0) out.add(in.erase_digit(e.col, p), e.acc, in.value(e));
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        static const PairRule rule{{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}, {{2, 2}, {3, 3}}, {{2, 3}, {3, 2}}};
        pair_join(a, b, out, lim, rule, no_fix);
    }
};

// ---- exact k-leaf spanning tree: 0 = leaf deg 0, 1 = leaf deg 1, 2 = 1_1, 3 = 1_2 ----
struct LeafDp : EdgeBase {
    int v1;
    LeafDp(const WeightFunction& w_, int v1_) : EdgeBase(w_), v1(v1_) {}
    int radix() const override { return 4; }
    static bool cap(uint64_t& a) {
        if (acc_get(a, kV1DegF) > 2) a = acc_set(a, kV1DegF, 2);
        return true;
    }
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) {
            out.add(out.insert_digit(e.col, p, 2), e.acc, in.value(e));
            if (v == v1) continue;
            out.add(out.insert_digit(e.col, p, 0), e.acc, in.value(e));
            out.add(out.insert_digit(e.col, p, 3), e.acc, in.value(e));
        }
    }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            out.add(e.col, e.acc, val);
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            uint64_t col = e.col;
            if (du < 2 && dv < 2) continue;  // two declared leaves
            if (du < 2) {
                if (du == 1) continue;
                col = in.with_digit(col, pu, 1);
            } else if (dv < 2) {
                if (dv == 1) continue;
                col = in.with_digit(col, pv, 1);
            } else if (du != dv) {
                continue;
            }
            uint64_t a = e.acc + acc_unit(kEdgesF);
            if (x.u == v1 || x.v == v1) a += acc_unit(kV1DegF);
            cap(a);
            if (lim.ok(a)) out.add_shifted(col, a, val, w[x.edge]);
        }
    }
    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries()) {
            int d = in.digit(e.col, p);
            if (d == 0) continue;
            uint64_t a = d == 1 ? e.acc + acc_unit(kLeavesF) : e.acc;
            out.add(in.erase_digit(e.col, p), a, in.value(e));
        }
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        static const PairRule rule{{{0, 0}, {1, 1}}, {{0, 1}}, {{2, 2}}, {{3, 3}}};
        pair_join(a, b, out, lim, rule, cap);
    }
};

// ---- exact k-leaf outbranching: digit = s * 2 + s_in, s: 0 = R, 1 = 1_1, 2 = 1_2 ----
struct OutDp : EdgeBase {
    int root;
    OutDp(const WeightFunction& w_, int r) : EdgeBase(w_), root(r) {}
    int radix() const override { return 6; }
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) {
            out.add(out.insert_digit(e.col, p, 2), e.acc, in.value(e));
            if (v == root) continue;
            out.add(out.insert_digit(e.col, p, 0), e.acc, in.value(e));
            out.add(out.insert_digit(e.col, p, 4), e.acc, in.value(e));
        }
    }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            out.add(e.col, e.acc, val);
            if (x.v == root) continue;
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            int su = du / 2, sv = dv / 2;
            if (dv % 2 || su == 0) continue;  // head already has a parent, or tail is a leaf
            if (sv != 0 && sv != su) continue;
            uint64_t a = e.acc + acc_unit(kEdgesF);
            if (lim.ok(a)) out.add_shifted(in.with_digit(e.col, pv, dv + 1), a, val, w[x.edge]);
        }
    }
    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries()) {
            int d = in.digit(e.col, p);
            if ((d % 2 == 1) == (v == root)) continue;
            uint64_t a = d / 2 == 0 ? e.acc + acc_unit(kLeavesF) : e.acc;
            out.add(in.erase_digit(e.col, p), a, in.value(e));
        }
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        static const PairRule rule{{{0, 0}, {1, 1}}, {{0, 1}}, {{2, 2}, {3, 3}}, {{2, 3}}, {{4, 4}, {5, 5}}, {{4, 5}}};
        pair_join(a, b, out, lim, rule, no_fix);
    }
};

// ---- full degree spanning tree: digit = side * 2 + "some edge left out" ----
struct FullDegDp : EdgeBase {
    int v1;
    FullDegDp(const WeightFunction& w_, int v1_) : EdgeBase(w_), v1(v1_) {}
    int radix() const override { return 4; }
    void introduce(const ParityTable& in, int v, ParityTable& out) override {
        int p = out.position(v);
        for (auto& e : in.entries()) {
            out.add(out.insert_digit(e.col, p, 0), e.acc, in.value(e));
            if (v != v1) out.add(out.insert_digit(e.col, p, 2), e.acc, in.value(e));
        }
    }
    void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) override {
        int pu = in.position(x.u), pv = in.position(x.v);
        for (auto& e : in.entries()) {
            const uint64_t* val = in.value(e);
            int du = in.digit(e.col, pu), dv = in.digit(e.col, pv);
            out.add(in.with_digit(in.with_digit(e.col, pu, du | 1), pv, dv | 1), e.acc, val);
            if (du / 2 != dv / 2) continue;
            uint64_t a = e.acc + acc_unit(kEdgesF);
            if (lim.ok(a)) out.add_shifted(e.col, a, val, w[x.edge]);
        }
    }
    void forget(const ParityTable& in, int v, ParityTable& out) override {
        int p = in.position(v);
        for (auto& e : in.entries()) {
            uint64_t a = in.digit(e.col, p) % 2 == 0 ? e.acc + acc_unit(1) : e.acc;
            if (lim.ok(a)) out.add(in.erase_digit(e.col, p), a, in.value(e));
        }
    }
    void join(const ParityTable& a, const ParityTable& b, ParityTable& out) override {
        static const PairRule rule{{{0, 0}, {1, 1}}, {{0, 1}, {1, 1}}, {{2, 2}, {3, 3}}, {{2, 3}, {3, 3}}};
        pair_join(a, b, out, lim, rule, no_fix);
    }
};

// value arrays of one root, keyed by a field, for a fixed remaining accumulator
std::vector<std::vector<uint64_t>> root_slices(const ParityTable& root, int field, int count, uint64_t rest_mask, uint64_t rest) {
    int w = root.alg().words();
    std::vector<std::vector<uint64_t>> out(count, std::vector<uint64_t>(w, 0));
    for (auto& e : root.entries()) {
        if (e.col != 0 || (e.acc & rest_mask) != rest) continue;
        int f = acc_get(e.acc, field);
        if (f < count) root.alg().add(out[f].data(), root.value(e));
    }
    return out;
}

// binomial back-substitution over GF(2): x_k = bar_k + sum_{k' > k} C(k', k) x_{k'}
void invert_binomial(std::vector<std::vector<uint64_t>>& v) {
    int n = static_cast<int>(v.size());
    for (int k = n - 1; k >= 0; --k)
        for (int kp = k + 1; kp < n; ++kp)
            if ((kp & k) == k)  // Lucas: C(kp, k) is odd
                for (size_t i = 0; i < v[k].size(); ++i) v[k][i] ^= v[kp][i];
}

bool is_zero_vec(const std::vector<uint64_t>& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

WParity to_wparity(const WeightAlgebra& alg, const std::vector<uint64_t>& v) { return WParity::from_value(alg, v.data()); }

bool nonzero(const ParityTable& root, uint64_t acc) {
    auto v = root_cell(root, acc);
    return v && !root.alg().is_zero(v);
}

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

MonteCarloAnswer never(const SolveOptions& opt) {
    return amplified_solve([](uint64_t) { return false; }, opt.repetitions, opt.seed);
}

MonteCarloAnswer always(const SolveOptions& opt) {
    return amplified_solve([](uint64_t) { return true; }, opt.repetitions, opt.seed);
}

uint64_t pcc_acc(int k, int l) { return l * acc_unit(kEdgesF) + k * acc_unit(kMarksF); }

template <class G, class Dp>
MonteCarloAnswer solve_pcc_impl(const G& g, const NiceTreeDecomposition& td, int k, int l, const SolveOptions& opt) {
    if (l < 0 || l > g.n || k < 0) throw std::invalid_argument("pcc: k or l out of range");
    check_edges(td, g.m());
    if (l == 0) return always(opt);
    if (g.m() == 0) return never(opt);
    int kk = std::min(k, l);
    return amplified_solve([&](uint64_t seed) {
        RunEnv env(2 * static_cast<size_t>(g.m()), opt.mode, 4 * g.m() * (l + kk), seed);
        Dp dp(env.w);
        dp.lim.max[kEdgesF] = l;
        dp.lim.max[kMarksF] = kk;
        auto root = run_dp(dp, td, env.alg, dp_opts(opt));
        for (int c = 1; c <= kk; ++c)
            if (nonzero(root, pcc_acc(c, l))) return true;
        return false;
    }, opt.repetitions, opt.seed);
}

template <class G, class Dp>
WParity pcc_countc_impl(const WeightFunction& w, const G& g, const NiceTreeDecomposition& td, int k, int l) {
    if (l < 0 || l > g.n || k < 0 || k > l) throw std::invalid_argument("pcc: need 0 <= k <= l <= n");
    check_edges(td, g.m());
    WeightAlgebra alg(WeightMode::Exact, w.N * (l + k));
    Dp dp(w);
    dp.lim.max[kEdgesF] = l;
    dp.lim.max[kMarksF] = k;
    auto root = run_dp(dp, td, alg);
    return WParity::from_value(alg, root_cell(root, pcc_acc(k, l)));
}

}  // namespace

// ---- counting entry points ----

WParity pcc_undirected_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, int l) {
    return pcc_countc_impl<UndirectedGraph, PccDp>(w, g, td, k, l);
}

WParity pcc_directed_countc(const WeightFunction& w, const DirectedGraph& g, const NiceTreeDecomposition& td, int k, int l) {
    return pcc_countc_impl<DirectedGraph, DirPccDp>(w, g, td, k, l);
}

std::vector<WParity> gmtsp_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, int budget) {
    if (budget < 0) throw std::invalid_argument("gmtsp: negative budget");
    if (g.n == 0) throw std::invalid_argument("gmtsp: empty graph");
    check_edges(td, g.m());
    WeightAlgebra alg(WeightMode::Exact, w.N * budget);
    GmtspDp dp(w, 0);
    dp.lim.max[kEdgesF] = budget;
    auto root = run_dp(dp, td, alg);
    std::vector<WParity> out;
    for (int i = 0; i <= budget; ++i) out.push_back(WParity::from_value(alg, root_cell(root, i * acc_unit(kEdgesF))));
    return out;
}

std::vector<WParity> k_leaf_spanning_tree_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, int v1) {
    if (g.n < 3) throw std::invalid_argument("k-leaf spanning tree: need n >= 3");
    if (v1 < 0 || v1 >= g.n) throw std::invalid_argument("k-leaf spanning tree: v1 out of range");
    check_edges(td, g.m());
    WeightAlgebra alg(WeightMode::Exact, w.N * (g.n - 1));
    LeafDp dp(w, v1);
    dp.lim.max[kEdgesF] = g.n - 1;
    dp.lim.max[kLeavesF] = g.n;
    dp.lim.max[kV1DegF] = 2;
    auto root = run_dp(dp, td, alg);
    uint64_t mask = (uint64_t{0xffff} << (16 * kEdgesF)) | (uint64_t{0xffff} << (16 * kV1DegF));
    uint64_t rest = (g.n - 1) * acc_unit(kEdgesF) + 2 * acc_unit(kV1DegF);
    auto sl = root_slices(root, kLeavesF, g.n + 1, mask, rest);
    std::vector<WParity> out;
    for (auto& s : sl) out.push_back(to_wparity(alg, s));
    return out;
}

std::vector<WParity> k_leaf_outbranching_countc(const WeightFunction& w, const DirectedGraph& g, const NiceTreeDecomposition& td, int root_v) {
    if (g.n < 2) throw std::invalid_argument("outbranching: need n >= 2");
    if (root_v < 0 || root_v >= g.n) throw std::invalid_argument("outbranching: root out of range");
    check_edges(td, g.m());
    WeightAlgebra alg(WeightMode::Exact, w.N * (g.n - 1));
    OutDp dp(w, root_v);
    dp.lim.max[kEdgesF] = g.n - 1;
    dp.lim.max[kLeavesF] = g.n;
    auto root = run_dp(dp, td, alg);
    auto sl = root_slices(root, kLeavesF, g.n + 1, uint64_t{0xffff} << (16 * kEdgesF), (g.n - 1) * acc_unit(kEdgesF));
    std::vector<WParity> out;
    for (auto& s : sl) out.push_back(to_wparity(alg, s));
    return out;
}

std::vector<WParity> k_leaf_invert(const std::vector<WParity>& bar) {
    std::vector<WParity> x = bar;
    int n = static_cast<int>(x.size());
    for (int k = n - 1; k >= 0; --k)
        for (int kp = k + 1; kp < n; ++kp)
            if ((kp & k) == k) x[k].xor_with(x[kp]);
    return x;
}

WParity full_degree_st_countc(const WeightFunction& w, const UndirectedGraph& g, const NiceTreeDecomposition& td, int k) {
    if (g.n == 0) throw std::invalid_argument("full degree spanning tree: empty graph");
    if (k < 0 || k > g.n) throw std::invalid_argument("full degree spanning tree: k out of range");
    check_edges(td, g.m());
    WeightAlgebra alg(WeightMode::Exact, w.N * (g.n - 1));
    FullDegDp dp(w, 0);
    dp.lim.max[kEdgesF] = g.n - 1;
    dp.lim.max[1] = g.n;
    auto root = run_dp(dp, td, alg);
    return WParity::from_value(alg, root_cell(root, (g.n - 1) * acc_unit(kEdgesF) + k * acc_unit(1)));
}

// ---- solvers ----

MonteCarloAnswer solve_pcc(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, int l, const SolveOptions& opt) {
    return solve_pcc_impl<UndirectedGraph, PccDp>(g, td, k, l, opt);
}

MonteCarloAnswer solve_pcc(const DirectedGraph& g, const NiceTreeDecomposition& td, int k, int l, const SolveOptions& opt) {
    return solve_pcc_impl<DirectedGraph, DirPccDp>(g, td, k, l, opt);
}

MonteCarloAnswer solve_hamcycle(const UndirectedGraph& g, const NiceTreeDecomposition& td, const SolveOptions& opt) {
    if (g.n < 3) return never(opt);
    return solve_pcc(g, td, 1, g.n, opt);
}

MonteCarloAnswer solve_hamcycle(const DirectedGraph& g, const NiceTreeDecomposition& td, const SolveOptions& opt) {
    if (g.n < 2) return never(opt);
    return solve_pcc(g, td, 1, g.n, opt);
}

MonteCarloAnswer solve_min_cycle_cover(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt) {
    return solve_pcc(g, td, k, g.n, opt);
}

MonteCarloAnswer solve_min_cycle_cover(const DirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt) {
    return solve_pcc(g, td, k, g.n, opt);
}

namespace {

template <class G, class Dp>
MonteCarloAnswer longest_cycle_impl(const G& g, const NiceTreeDecomposition& td, int k, int shortest, const SolveOptions& opt) {
    check_edges(td, g.m());
    int lo = std::max(k, shortest);
    if (lo > g.n || g.m() == 0) return never(opt);
    // one table answers every length: the edge field ranges up to n
    return amplified_solve([&](uint64_t seed) {
        RunEnv env(2 * static_cast<size_t>(g.m()), opt.mode, 4 * g.m() * (g.n + 1), seed);
        Dp dp(env.w);
        dp.lim.max[kEdgesF] = g.n;
        dp.lim.max[kMarksF] = 1;
        auto root = run_dp(dp, td, env.alg, dp_opts(opt));
        for (int l = lo; l <= g.n; ++l)
            if (nonzero(root, pcc_acc(1, l))) return true;
        return false;
    }, opt.repetitions, opt.seed);
}

}  // namespace

MonteCarloAnswer solve_longest_cycle(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt) {
    return longest_cycle_impl<UndirectedGraph, PccDp>(g, td, k, 3, opt);
}

MonteCarloAnswer solve_longest_cycle(const DirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt) {
    return longest_cycle_impl<DirectedGraph, DirPccDp>(g, td, k, 2, opt);
}

MonteCarloAnswer solve_gmtsp(const UndirectedGraph& g, const NiceTreeDecomposition& td, int budget, const SolveOptions& opt) {
    check_edges(td, g.m());
    if (budget < 0) return never(opt);
    if (g.n <= 1) return always(opt);
    if (!is_connected(g)) return never(opt);
    // twice a spanning tree is always a walk
    int b = std::min(budget, 2 * (g.n - 1));
    return amplified_solve([&](uint64_t seed) {
        RunEnv env(2 * static_cast<size_t>(g.m()), opt.mode, 4 * g.m() * b, seed);
        GmtspDp dp(env.w, 0);
        dp.lim.max[kEdgesF] = b;
        auto root = run_dp(dp, td, env.alg, dp_opts(opt));
        for (int i = 0; i <= b; ++i)
            if (nonzero(root, i * acc_unit(kEdgesF))) return true;
        return false;
    }, opt.repetitions, opt.seed);
}

MonteCarloAnswer solve_k_leaf_spanning_tree(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt) {
    if (g.n < 3) throw std::invalid_argument("k-leaf spanning tree: need n >= 3");
    check_edges(td, g.m());
    if (k < 2 || k > g.n - 1 || !is_connected(g)) return never(opt);
    uint64_t mask = (uint64_t{0xffff} << (16 * kEdgesF)) | (uint64_t{0xffff} << (16 * kV1DegF));
    uint64_t rest = (g.n - 1) * acc_unit(kEdgesF) + 2 * acc_unit(kV1DegF);
    auto adj = g.adjacency();
    return amplified_solve([&](uint64_t seed) {
        RunEnv env(g.m(), opt.mode, 2 * g.m() * (g.n - 1), seed);
        for (int v1 = 0; v1 < g.n; ++v1) {
            if (adj[v1].size() < 2) continue;  // never internal
            LeafDp dp(env.w, v1);
            dp.lim.max[kEdgesF] = g.n - 1;
            dp.lim.max[kLeavesF] = g.n;
            dp.lim.max[kV1DegF] = 2;
            auto root = run_dp(dp, td, env.alg, dp_opts(opt));
            auto sl = root_slices(root, kLeavesF, g.n + 1, mask, rest);
            invert_binomial(sl);
            if (!is_zero_vec(sl[k])) return true;
        }
        return false;
    }, opt.repetitions, opt.seed);
}

MonteCarloAnswer solve_k_leaf_outbranching(const DirectedGraph& g, const NiceTreeDecomposition& td, int root_v, int k, const SolveOptions& opt) {
    if (g.n < 2) throw std::invalid_argument("outbranching: need n >= 2");
    if (root_v < 0 || root_v >= g.n) throw std::invalid_argument("outbranching: root out of range");
    check_edges(td, g.m());
    if (k < 1 || k > g.n - 1 || g.m() == 0) return never(opt);
    return amplified_solve([&](uint64_t seed) {
        RunEnv env(g.m(), opt.mode, 2 * g.m() * (g.n - 1), seed);
        OutDp dp(env.w, root_v);
        dp.lim.max[kEdgesF] = g.n - 1;
        dp.lim.max[kLeavesF] = g.n;
        auto root = run_dp(dp, td, env.alg, dp_opts(opt));
        auto sl = root_slices(root, kLeavesF, g.n + 1, uint64_t{0xffff} << (16 * kEdgesF), (g.n - 1) * acc_unit(kEdgesF));
        invert_binomial(sl);
        return !is_zero_vec(sl[k]);
    }, opt.repetitions, opt.seed);
}

MonteCarloAnswer solve_full_degree_st(const UndirectedGraph& g, const NiceTreeDecomposition& td, int k, const SolveOptions& opt) {
    check_edges(td, g.m());
    if (g.n == 0) return k <= 0 ? always(opt) : never(opt);
    if (!is_connected(g) || k > g.n) return never(opt);
    if (g.n == 1) return k <= 1 ? always(opt) : never(opt);
    int lo = std::max(k, 0);
    return amplified_solve([&](uint64_t seed) {
        RunEnv env(g.m(), opt.mode, 2 * g.m() * (g.n - 1), seed);
        FullDegDp dp(env.w, 0);
        dp.lim.max[kEdgesF] = g.n - 1;
        dp.lim.max[1] = g.n;
        auto root = run_dp(dp, td, env.alg, dp_opts(opt));
        for (int c = lo; c <= g.n; ++c)
            if (nonzero(root, (g.n - 1) * acc_unit(kEdgesF) + c * acc_unit(1))) return true;
        return false;
    }, opt.repetitions, opt.seed);
}

}  // namespace cutcount
