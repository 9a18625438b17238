#include <random>

#include "cutcount/algebra.hpp"
#include "doctest.h"
#include "naive_algebra.hpp"

using namespace cutcount;

namespace {

SubsetTable indicator(int b, size_t set) {
    SubsetTable t(b);
    t.values[set] = 1;
    return t;
}

}  // namespace

TEST_CASE("subset convolution: empty-set indicator is the identity") {
    std::mt19937_64 rng(3);
    auto g = naive::random_subset_table(5, rng, 9);
    CHECK(subset_convolution(indicator(5, 0), g) == g);
}

TEST_CASE("subset convolution of all-ones on two elements") {
    SubsetTable f(2);
    f.values = {1, 1, 1, 1};
    auto h = subset_convolution(f, f);
    CHECK(h.values == std::vector<int64_t>{1, 2, 2, 4});
    auto h2 = h.mod2();
    CHECK(h2.values[3] == 0);
    CHECK(h2.values[0] == 1);
}

TEST_CASE("subset, covering and packing match the direct sums") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
        int b = 1 + it % 7;
        auto f = naive::random_subset_table(b, rng, 5), g = naive::random_subset_table(b, rng, 5);
        CHECK(subset_convolution(f, g) == naive::subset(f, g));
        CHECK(covering_product(f, g) == naive::covering(f, g));
        CHECK(packing_product(f, g) == naive::packing(f, g));
    }
}

TEST_CASE("covering product of indicators") {
    for (size_t a = 0; a < 8; ++a)
        for (size_t c = 0; c < 8; ++c) {
            auto h = covering_product(indicator(3, a), indicator(3, c));
            for (size_t t = 0; t < 8; ++t) CHECK(h.values[t] == (t == (a | c) ? 1 : 0));
        }
}

TEST_CASE("zero table annihilates") {
    std::mt19937_64 rng(5);
    auto g = naive::random_subset_table(4, rng, 3);
    SubsetTable z(4);
    CHECK(covering_product(z, g) == z);
    CHECK(packing_product(z, g) == z);
    CHECK(subset_convolution(z, g) == z);
}

TEST_CASE("products commute and distribute") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 10; ++it) {
        int b = 2 + it % 5;
        auto f = naive::random_subset_table(b, rng, 4), g = naive::random_subset_table(b, rng, 4), h = naive::random_subset_table(b, rng, 4);
        SubsetTable gh(b);
        for (size_t i = 0; i < gh.values.size(); ++i) gh.values[i] = g.values[i] + h.values[i];
        for (auto op : {subset_convolution, covering_product, packing_product}) {
            CHECK(op(f, g) == op(g, f));
            auto lhs = op(f, gh), a = op(f, g), c = op(f, h);
            for (size_t i = 0; i < lhs.values.size(); ++i) CHECK(lhs.values[i] == a.values[i] + c.values[i]);
        }
    }
}

TEST_CASE("mismatched sizes are rejected") {
    CHECK_THROWS_AS(subset_convolution(SubsetTable(2), SubsetTable(3)), AlgebraError);
    CHECK_THROWS_AS(generalized_convolution(TupleTable(2, 3), TupleTable(2, 4)), AlgebraError);
    CHECK_THROWS_AS(zp_product(TupleTable(2, 3), TupleTable(2, 3), 3), AlgebraError);
}

TEST_CASE("zeta and moebius are inverse") {
    std::mt19937_64 rng(1);
    auto f = naive::random_subset_table(6, rng, 100);
    auto v = f.values;
    zeta_transform(v, 6);
    CHECK(v[63] == [&] { int64_t s = 0; for (auto x : f.values) s += x; return s; }());
    mobius_transform(v, 6);
    CHECK(v == f.values);
}

TEST_CASE("generalized convolution, p = 3, one position") {
    TupleTable f(1, 3);
    f.values = {1, 1, 0};
    auto h = generalized_convolution(f, f);
    CHECK(h.values == std::vector<int64_t>{1, 2, 1});
    CHECK(h.mod2().values == std::vector<int64_t>{1, 0, 1});
}

TEST_CASE("generalized convolution matches the digitwise sum") {
    std::mt19937_64 rng(29);
    for (int p = 2; p <= 6; ++p)
        for (int b = 1; b <= (p == 6 ? 3 : 4); ++b) {
            auto f = naive::random_tuple_table(b, p, rng, 3), g = naive::random_tuple_table(b, p, rng, 3);
            CHECK(generalized_convolution(f, g) == naive::generalized(f, g));
            CHECK(generalized_convolution(f, g) == generalized_convolution(g, f));
        }
    TupleTable id(3, 5);
    id.values[0] = 1;
    auto g = naive::random_tuple_table(3, 5, rng, 7);
    CHECK(generalized_convolution(id, g) == g);
}

TEST_CASE("xor product on one position") {
    TupleTable f(1, 2);
    f.values = {1, 1};
    auto h = zp_product(f, f, 2);
    CHECK(h.values == std::vector<int64_t>{2, 2});
    CHECK(h.mod2().values == std::vector<int64_t>{0, 0});
}

TEST_CASE("Z_4 and Z_2 products match the cyclic sums") {
    std::mt19937_64 rng(31);
    for (int p : {2, 4})
        for (int b = 1; b <= 3; ++b) {
            auto f = naive::random_tuple_table(b, p, rng, 6), g = naive::random_tuple_table(b, p, rng, 6);
            CHECK(zp_product(f, g, p) == naive::cyclic(f, g));
        }
}
