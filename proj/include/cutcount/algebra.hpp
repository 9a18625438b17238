#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cutcount {

// f: 2^B -> Z, bit i of the index is element i
struct SubsetTable {
    int b = 0;
    std::vector<int64_t> values;

    SubsetTable() = default;
    explicit SubsetTable(int b_);
    SubsetTable mod2() const;
    bool operator==(const SubsetTable&) const = default;
};

// f: {0..p-1}^B -> Z, mixed radix with digit i as the i-th least significant
struct TupleTable {
    int b = 0;
    int p = 2;
    std::vector<int64_t> values;

    TupleTable() = default;
    TupleTable(int b_, int p_);
    size_t size() const { return values.size(); }
    int digit(size_t index, int pos) const;
    TupleTable mod2() const;
    bool operator==(const TupleTable&) const = default;
};

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxSubsetBits = 24;
constexpr int kMaxRankedBits = 20;  // ranked tables hold (b+1) * 2^b entries

// all products are exact over Z; reduce with mod2() for GF(2) use
SubsetTable subset_convolution(const SubsetTable& f, const SubsetTable& g);
SubsetTable covering_product(const SubsetTable& f, const SubsetTable& g);
SubsetTable packing_product(const SubsetTable& f, const SubsetTable& g);
TupleTable generalized_convolution(const TupleTable& f, const TupleTable& g);
TupleTable zp_product(const TupleTable& f, const TupleTable& g, int p);

// zeta over subsets: F(S) = sum_{T subset S} f(T), and its inverse
void zeta_transform(std::vector<int64_t>& v, int b);
void mobius_transform(std::vector<int64_t>& v, int b);

}  // namespace cutcount
