#include <random>

#include "cutcount/decomposition.hpp"
#include "cutcount/engine.hpp"
#include "cutcount/vertex_solvers.hpp"
#include "doctest.h"
#include "isolation.hpp"

using namespace cutcount;

namespace {

struct P3 {
    UndirectedGraph g{3};
    NiceTreeDecomposition td;
    P3() {
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        PathDecomposition pd;
        pd.bags = {{0, 1}, {1, 2}};
        td = make_nice(pd.to_tree(), g);
    }
};

}  // namespace

TEST_CASE("weights of a one-element universe") {
    for (uint64_t s = 0; s < 50; ++s) {
        auto w = sample_weights(1, s);
        CHECK(w.N == 2);
        CHECK(w[0] >= 1);
        CHECK(w[0] <= 2);
    }
    CHECK_THROWS(sample_weights(0, uint64_t{1}));
}

TEST_CASE("weights are reproducible from the seed") {
    auto a = sample_weights(40, uint64_t{99}), b = sample_weights(40, uint64_t{99});
    CHECK(a.w == b.w);
    for (int x : a.w) {
        CHECK(x >= 1);
        CHECK(x <= 80);
    }
    CHECK(derive_seed(5, 1) != derive_seed(5, 2));
}

TEST_CASE("isolation frequency on small families") {
    CHECK(isolation_rate(8, 1000, 12) >= 0.45);
}

TEST_CASE("zero countc gives no evidence") {
    P3 p;
    auto zero = [](const WeightFunction& w, const NiceTreeDecomposition&) {
        return WParity(static_cast<int>(2 * w.universe() * w.universe()));
    };
    for (uint64_t s = 0; s < 10; ++s) CHECK(cut_and_count(3, zero, p.td, s) == CutCountResult::NoEvidence);
}

TEST_CASE("Steiner on P3 through the bare loop") {
    P3 p;
    std::vector<int> T = {0, 2};
    int yes3 = 0, yes2 = 0;
    for (uint64_t s = 0; s < 40; ++s) {
        auto c3 = [&](const WeightFunction& w, const NiceTreeDecomposition& td) { return steiner_countc(w, p.g, td, T, 3); };
        auto c2 = [&](const WeightFunction& w, const NiceTreeDecomposition& td) { return steiner_countc(w, p.g, td, T, 2); };
        yes3 += cut_and_count(3, c3, p.td, s) == CutCountResult::Yes;
        yes2 += cut_and_count(3, c2, p.td, s) == CutCountResult::Yes;
    }
    CHECK(yes3 >= 20);
    CHECK(yes2 == 0);
}

TEST_CASE("planted solution shows up at its own weight") {
    P3 p;
    std::vector<int> T = {0, 2};
    auto w = sample_weights(3, uint64_t{4});
    auto par = steiner_countc(w, p.g, p.td, T, 3);
    CHECK(par.test(w[0] + w[1] + w[2]));
    CHECK(par.odd_weights().size() == 1);
}

TEST_CASE("amplification") {
    int calls = 0;
    auto no = amplified_solve([&](uint64_t) { ++calls; return false; }, 1, 3);
    CHECK(no.verdict == Verdict::Unknown);
    CHECK(calls == 1);
    auto yes = amplified_solve([](uint64_t s) { return s % 2 == 0; }, 20, 3);
    CHECK(yes.verdict == Verdict::Yes);
    CHECK(yes.runs_used <= 20);
    CHECK_THROWS(amplified_solve([](uint64_t) { return true; }, 0, 3));
}

TEST_CASE("GF(2^64) arithmetic") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        uint64_t a = rng(), b = rng(), c = rng();
        CHECK(gf64_mul(a, b) == gf64_mul(b, a));
        CHECK(gf64_mul(a, b ^ c) == (gf64_mul(a, b) ^ gf64_mul(a, c)));
        CHECK(gf64_mul(a, 1) == a);
        CHECK(gf64_pow(a, 3) == gf64_mul(a, gf64_mul(a, a)));
    }
}

TEST_CASE("exact weight algebra shifts bits") {
    WeightAlgebra alg(WeightMode::Exact, 100);
    std::vector<uint64_t> one(alg.words()), acc(alg.words());
    alg.set_one(one.data());
    alg.add_shifted(acc.data(), one.data(), 70);
    alg.add_shifted(acc.data(), one.data(), 3);
    CHECK(alg.bit(acc.data(), 70));
    CHECK(alg.bit(acc.data(), 3));
    alg.add_shifted(acc.data(), one.data(), 70);
    CHECK_FALSE(alg.bit(acc.data(), 70));
    auto par = WParity::from_value(alg, acc.data());
    CHECK(par.odd_weights() == std::vector<int>{3});
}

TEST_CASE("packed accumulators") {
    uint64_t a = 0;
    a += acc_unit(0) * 5 + acc_unit(2) * 9;
    CHECK(acc_get(a, 0) == 5);
    CHECK(acc_get(a, 1) == 0);
    CHECK(acc_get(a, 2) == 9);
    a = acc_set(a, 2, 1);
    CHECK(acc_get(a, 2) == 1);
    AccLimits lim;
    lim.max[0] = 5;
    lim.max[2] = 1;
    CHECK(lim.ok(a));
    CHECK_FALSE(lim.ok(a + acc_unit(0)));
}

TEST_CASE("coloring axis is radix to the bag size") {
    UndirectedGraph g(6);
    for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
    auto ntd = make_nice(heuristic_decompose(g), g);
    DpStats st;
    SolveOptions opt;
    opt.stats = &st;
    opt.repetitions = 2;
    solve_steiner(g, ntd, {0, 3}, 4, opt);
    REQUIRE_FALSE(st.axis.empty());
    for (auto [bag, axis] : st.axis) {
        uint64_t want = 1;
        for (int i = 0; i < bag; ++i) want *= 3;
        CHECK(axis == want);
    }
    CHECK(st.max_bag == 3);
}
