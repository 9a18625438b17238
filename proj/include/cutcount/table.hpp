#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "cutcount/decomposition.hpp"

namespace cutcount {

// How the weight axis W is carried through the dynamic program.
//  Exact:    one GF(2) bit per W in [0, max_weight], i.e. a truncated polynomial in z.
//  Evaluate: the same polynomial evaluated at a random alpha in GF(2^64). A zero
//            polynomial stays zero, so a nonzero result still certifies an odd W.
enum class WeightMode { Exact, Evaluate };

uint64_t gf64_mul(uint64_t a, uint64_t b);
uint64_t gf64_pow(uint64_t a, uint64_t e);

class WeightAlgebra {
public:
    WeightAlgebra(WeightMode mode, int max_weight, uint64_t alpha = 0x9e3779b97f4a7c15ULL);

    WeightMode mode() const { return mode_; }
    int words() const { return words_; }
    int max_weight() const { return max_weight_; }

    void set_one(uint64_t* dst) const;
    bool is_zero(const uint64_t* p) const;
    void add(uint64_t* dst, const uint64_t* src) const;
    // dst += src * z^w
    void add_shifted(uint64_t* dst, const uint64_t* src, int w) const;
    // dst += a * b * z^(-down); the product is divisible by z^down by construction
    void add_product(uint64_t* dst, const uint64_t* a, const uint64_t* b, int down) const;
    bool bit(const uint64_t* p, int w) const;  // Exact mode only

private:
    WeightMode mode_;
    int max_weight_;
    int words_;
    std::vector<uint64_t> pow_, inv_pow_;
};

// packed accumulators: four 16-bit counters
constexpr int kAccFields = 4;
inline int acc_get(uint64_t a, int f) { return static_cast<int>((a >> (16 * f)) & 0xffff); }
inline uint64_t acc_unit(int f) { return uint64_t{1} << (16 * f); }
inline uint64_t acc_set(uint64_t a, int f, int v) {
    return (a & ~(uint64_t{0xffff} << (16 * f))) | (static_cast<uint64_t>(v) << (16 * f));
}

struct AccLimits {
    int max[kAccFields] = {0, 0, 0, 0};
    bool ok(uint64_t a) const {
        for (int f = 0; f < kAccFields; ++f)
            if (acc_get(a, f) > max[f]) return false;
        return true;
    }
};

// Sparse table A_x(acc, W, s): the coloring s is a mixed-radix integer over
// the sorted bag, digit i belonging to bag[i].
class ParityTable {
public:
    struct Entry {
        uint64_t col;
        uint64_t acc;
        uint32_t off;
    };

    ParityTable(int radix, std::vector<int> bag, const WeightAlgebra* alg);

    int radix() const { return radix_; }
    const std::vector<int>& bag() const { return bag_; }
    const WeightAlgebra& alg() const { return *alg_; }
    int position(int v) const;
    uint64_t axis_size() const { return pow_.back(); }

    int digit(uint64_t col, int pos) const { return static_cast<int>(col / pow_[pos] % radix_); }
    uint64_t with_digit(uint64_t col, int pos, int d) const {
        return col + (static_cast<int64_t>(d) - digit(col, pos)) * static_cast<int64_t>(pow_[pos]);
    }
    uint64_t place(int pos) const { return pow_[pos]; }
    // col of a table whose bag lacks position pos -> col with digit d at pos
    uint64_t insert_digit(uint64_t col, int pos, int d) const {
        uint64_t low = col % pow_[pos];
        return low + d * pow_[pos] + (col - low) * radix_;
    }
    // col of this table -> col of the table without position pos
    uint64_t erase_digit(uint64_t col, int pos) const {
        uint64_t low = col % pow_[pos];
        return low + col / pow_[pos + 1] * pow_[pos];
    }

    const std::vector<Entry>& entries() const { return entries_; }
    const uint64_t* value(const Entry& e) const { return pool_.data() + e.off; }
    uint64_t* value(const Entry& e) { return pool_.data() + e.off; }
    size_t size() const { return entries_.size(); }

    // find-or-create the cell (col, acc); the pointer is valid until the next call
    uint64_t* cell(uint64_t col, uint64_t acc);
    void add(uint64_t col, uint64_t acc, const uint64_t* v) { alg_->add(cell(col, acc), v); }
    void add_shifted(uint64_t col, uint64_t acc, const uint64_t* v, int w) { alg_->add_shifted(cell(col, acc), v, w); }
    // XOR into an existing or new cell, using a copy of v so that v may live in this table
    void add_copy(uint64_t col, uint64_t acc, const uint64_t* v);

    // drop zero cells, sort by (col, acc) and rebuild the index
    void normalize();
    // ranges [begin, end) of equal col after normalize()
    std::vector<std::pair<uint32_t, uint32_t>> col_groups() const;

    uint64_t cells() const { return entries_.size(); }
    void clear();

private:
    void rehash(size_t cap);

    int radix_;
    std::vector<int> bag_;
    const WeightAlgebra* alg_;
    std::vector<uint64_t> pow_;
    std::vector<Entry> entries_;
    std::vector<uint64_t> pool_;
    std::vector<uint32_t> index_;  // open addressing, 0 = empty, else entry+1
    std::vector<uint64_t> scratch_;
};

struct DpStats {
    uint64_t peak_cells = 0;       // max over time of live table cells
    uint64_t peak_words = 0;       // same, in 64-bit words including the W axis
    int max_bag = 0;
    std::vector<std::pair<int, uint64_t>> axis;  // distinct (bag size, coloring-axis size) seen
    uint64_t nodes = 0;
};

class DpProblem {
public:
    virtual ~DpProblem() = default;
    virtual int radix() const = 0;
    virtual void leaf(ParityTable& out);
    virtual void introduce(const ParityTable& in, int v, ParityTable& out) = 0;
    virtual void edge(const ParityTable& in, const NiceNode& x, ParityTable& out) = 0;
    virtual void forget(const ParityTable& in, int v, ParityTable& out) = 0;
    virtual void join(const ParityTable& a, const ParityTable& b, ParityTable& out) = 0;
};

struct DpOptions {
    // per-vertex forced digit (-1 = free); used for core-evaluation sweeps
    const std::vector<int>* fixed = nullptr;
    DpStats* stats = nullptr;
};

struct StructureError : std::logic_error {
    using std::logic_error::logic_error;
};

ParityTable run_dp(DpProblem& problem, const NiceTreeDecomposition& ntd, const WeightAlgebra& alg, const DpOptions& opt = {});

// ---- helpers shared by the solvers ----

// per position p with digit d where up[d] >= 0: add a copy with digit up[d].
// In characteristic 2 this is both the zeta and the Moebius transform.
void digit_zeta(ParityTable& t, const std::vector<int>& up);
// acc field += number of positions whose digit is flagged
void tag_rank(ParityTable& t, int field, const std::vector<char>& counted);
// keep cells whose field equals the number of flagged positions, then zero the field
void filter_rank(ParityTable& t, int field, const std::vector<char>& counted);

// diagonal join: equal colorings multiply; acc fields add then subtract `corr(col)`
template <class Corr, class Fix>
void diagonal_join(const ParityTable& a, const ParityTable& b, ParityTable& out, const AccLimits& lim, Corr corr, Fix fix);

}  // namespace cutcount

#include "cutcount/table_impl.hpp"
