#include "cutcount/table.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#include <emmintrin.h>
#endif

namespace cutcount {

namespace {

// carry-less 64x64 -> 128
inline void clmul(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
#if defined(__PCLMUL__)
    __m128i p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)), _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
    lo = static_cast<uint64_t>(_mm_cvtsi128_si64(p));
    hi = static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(p, 8)));
#else
    lo = hi = 0;
    for (int i = 0; i < 64; ++i)
        if (b >> i & 1) {
            lo ^= a << i;
            if (i) hi ^= a >> (64 - i);
        }
#endif
}

inline uint64_t hash2(uint64_t a, uint64_t b) {
    uint64_t h = a * 0x9e3779b97f4a7c15ULL ^ (b + 0x632be59bd9b4e019ULL) * 0xc2b2ae3d27d4eb4fULL;
    return h ^ (h >> 29);
}

}  // namespace

// GF(2^64) modulo x^64 + x^4 + x^3 + x + 1
uint64_t gf64_mul(uint64_t a, uint64_t b) {
    uint64_t lo, hi;
    clmul(a, b, lo, hi);
    uint64_t l2, h2;
    clmul(hi, 0x1b, l2, h2);
    lo ^= l2;
    uint64_t l3, h3;
    clmul(h2, 0x1b, l3, h3);
    return lo ^ l3;
}

uint64_t gf64_pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = gf64_mul(r, a);
        a = gf64_mul(a, a);
        e >>= 1;
    }
    return r;
}

WeightAlgebra::WeightAlgebra(WeightMode mode, int max_weight, uint64_t alpha) : mode_(mode), max_weight_(max_weight) {
    if (max_weight < 0) throw std::invalid_argument("negative weight bound");
    if (mode == WeightMode::Exact) {
        words_ = max_weight / 64 + 1;
        return;
    }
    words_ = 1;
    if (alpha == 0 || alpha == 1) alpha = 0x9e3779b97f4a7c15ULL;
    int top = std::max(max_weight, 1);
    pow_.resize(top + 1);
    inv_pow_.resize(top + 1);
    uint64_t inv = gf64_pow(alpha, ~uint64_t{0} - 1);  // alpha^(2^64 - 2)
    pow_[0] = inv_pow_[0] = 1;
    for (int w = 1; w <= top; ++w) {
        pow_[w] = gf64_mul(pow_[w - 1], alpha);
        inv_pow_[w] = gf64_mul(inv_pow_[w - 1], inv);
    }
}

void WeightAlgebra::set_one(uint64_t* dst) const {
    std::memset(dst, 0, sizeof(uint64_t) * words_);
    dst[0] = 1;
}

bool WeightAlgebra::is_zero(const uint64_t* p) const {
    for (int i = 0; i < words_; ++i)
        if (p[i]) return false;
    return true;
}

void WeightAlgebra::add(uint64_t* dst, const uint64_t* src) const {
    for (int i = 0; i < words_; ++i) dst[i] ^= src[i];
}

void WeightAlgebra::add_shifted(uint64_t* dst, const uint64_t* src, int w) const {
    if (mode_ == WeightMode::Evaluate) {
        // no truncation here: the evaluation covers every weight
        dst[0] ^= gf64_mul(src[0], w <= max_weight_ ? pow_[w] : gf64_pow(pow_[1], w));
        return;
    }
    if (w > max_weight_) return;
    int ws = w >> 6, bs = w & 63;
    for (int i = words_ - 1; i >= ws; --i) {
        uint64_t v = src[i - ws] << bs;
        if (bs && i - ws - 1 >= 0) v |= src[i - ws - 1] >> (64 - bs);
        dst[i] ^= v;
    }
    // bits beyond max_weight are dropped
    int extra = (words_ << 6) - 1 - max_weight_;
    if (extra > 0) dst[words_ - 1] &= ~uint64_t{0} >> extra;
}

void WeightAlgebra::add_product(uint64_t* dst, const uint64_t* a, const uint64_t* b, int down) const {
    if (mode_ == WeightMode::Evaluate) {
        uint64_t v = gf64_mul(a[0], b[0]);
        if (down) v = gf64_mul(v, down <= max_weight_ ? inv_pow_[down] : gf64_pow(inv_pow_[1], down));
        dst[0] ^= v;
        return;
    }
    // both factors carry the corrected weight, so every term of the result weighs at least down
    if (down > max_weight_) return;
    int n = words_;
    uint64_t tmp[2 * 64 + 2];
    std::vector<uint64_t> big;
    uint64_t* t = tmp;
    if (2 * n + 1 > static_cast<int>(sizeof(tmp) / sizeof(tmp[0]))) {
        big.assign(2 * n + 1, 0);
        t = big.data();
    } else {
        std::memset(tmp, 0, sizeof(uint64_t) * (2 * n + 1));
    }
    int lim = (max_weight_ + down) / 64 + 1;  // words of the product that can survive
    for (int i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < n && i + j < lim; ++j) {
            if (!b[j]) continue;
            uint64_t lo, hi;
            clmul(a[i], b[j], lo, hi);
            t[i + j] ^= lo;
            t[i + j + 1] ^= hi;
        }
    }
    int ws = down >> 6, bs = down & 63;
    for (int i = 0; i < n; ++i) {
        uint64_t v = t[i + ws] >> bs;
        if (bs) v |= t[i + ws + 1] << (64 - bs);
        dst[i] ^= v;
    }
    int extra = (n << 6) - 1 - max_weight_;
    if (extra > 0) dst[n - 1] &= ~uint64_t{0} >> extra;
}

bool WeightAlgebra::bit(const uint64_t* p, int w) const {
    if (mode_ != WeightMode::Exact) throw std::logic_error("per-W bits need exact mode");
    if (w < 0 || w > max_weight_) return false;
    return p[w >> 6] >> (w & 63) & 1;
}

ParityTable::ParityTable(int radix, std::vector<int> bag, const WeightAlgebra* alg) : radix_(radix), bag_(std::move(bag)), alg_(alg) {
    pow_.resize(bag_.size() + 1);
    pow_[0] = 1;
    for (size_t i = 0; i < bag_.size(); ++i) {
        if (pow_[i] > ~uint64_t{0} / radix_) throw StructureError("coloring axis overflows 64 bits");
        pow_[i + 1] = pow_[i] * radix_;
    }
    scratch_.resize(alg_->words());
}

int ParityTable::position(int v) const {
    auto it = std::lower_bound(bag_.begin(), bag_.end(), v);
    if (it == bag_.end() || *it != v) return -1;
    return static_cast<int>(it - bag_.begin());
}

void ParityTable::rehash(size_t cap) {
    index_.assign(cap, 0);
    size_t mask = cap - 1;
    for (uint32_t i = 0; i < entries_.size(); ++i) {
        size_t h = hash2(entries_[i].col, entries_[i].acc) & mask;
        while (index_[h]) h = (h + 1) & mask;
        index_[h] = i + 1;
    }
}

uint64_t* ParityTable::cell(uint64_t col, uint64_t acc) {
    if ((entries_.size() + 1) * 2 > index_.size()) rehash(std::max<size_t>(64, index_.size() * 2));
    size_t mask = index_.size() - 1;
    size_t h = hash2(col, acc) & mask;
    while (uint32_t k = index_[h]) {
        auto& e = entries_[k - 1];
        if (e.col == col && e.acc == acc) return pool_.data() + e.off;
        h = (h + 1) & mask;
    }
    int w = alg_->words();
    uint32_t off = static_cast<uint32_t>(pool_.size());
    if (pool_.size() + w > 0xffffffffULL) throw std::length_error("parity table too large");
    pool_.resize(pool_.size() + w, 0);
    entries_.push_back({col, acc, off});
    index_[h] = static_cast<uint32_t>(entries_.size());
    return pool_.data() + off;
}

void ParityTable::add_copy(uint64_t col, uint64_t acc, const uint64_t* v) {
    std::copy(v, v + alg_->words(), scratch_.begin());
    alg_->add(cell(col, acc), scratch_.data());
}

void ParityTable::normalize() {
    int w = alg_->words();
    std::vector<uint32_t> order;
    order.reserve(entries_.size());
    for (uint32_t i = 0; i < entries_.size(); ++i)
        if (!alg_->is_zero(pool_.data() + entries_[i].off)) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) {
        const auto &a = entries_[x], &b = entries_[y];
        return a.col != b.col ? a.col < b.col : a.acc < b.acc;
    });
    std::vector<Entry> ne;
    std::vector<uint64_t> np;
    ne.reserve(order.size());
    np.reserve(order.size() * w);
    for (uint32_t i : order) {
        auto e = entries_[i];
        uint32_t off = static_cast<uint32_t>(np.size());
        np.insert(np.end(), pool_.begin() + e.off, pool_.begin() + e.off + w);
        ne.push_back({e.col, e.acc, off});
    }
    entries_.swap(ne);
    pool_.swap(np);
    size_t cap = 64;
    while (cap < entries_.size() * 2 + 2) cap *= 2;
    rehash(cap);
}

std::vector<std::pair<uint32_t, uint32_t>> ParityTable::col_groups() const {
    std::vector<std::pair<uint32_t, uint32_t>> g;
    uint32_t n = static_cast<uint32_t>(entries_.size());
    for (uint32_t i = 0; i < n;) {
        uint32_t j = i;
        while (j < n && entries_[j].col == entries_[i].col) ++j;
        g.emplace_back(i, j);
        i = j;
    }
    return g;
}

void ParityTable::clear() {
    entries_.clear();
    pool_.clear();
    index_.clear();
    entries_.shrink_to_fit();
    pool_.shrink_to_fit();
    index_.shrink_to_fit();
}

void DpProblem::leaf(ParityTable& out) { out.alg().set_one(out.cell(0, 0)); }

void digit_zeta(ParityTable& t, const std::vector<int>& up) {
    int b = static_cast<int>(t.bag().size());
    for (int p = 0; p < b; ++p) {
        size_t n = t.entries().size();
        for (size_t i = 0; i < n; ++i) {
            auto e = t.entries()[i];
            int d = t.digit(e.col, p);
            if (up[d] < 0) continue;
            t.add_copy(t.with_digit(e.col, p, up[d]), e.acc, t.value(e));
        }
    }
}

void tag_rank(ParityTable& t, int field, const std::vector<char>& counted) {
    ParityTable out(t.radix(), t.bag(), &t.alg());
    int b = static_cast<int>(t.bag().size());
    for (auto& e : t.entries()) {
        int r = 0;
        for (int p = 0; p < b; ++p) r += counted[t.digit(e.col, p)];
        out.add(e.col, e.acc + r * acc_unit(field), t.value(e));
    }
    t = std::move(out);
}

void filter_rank(ParityTable& t, int field, const std::vector<char>& counted) {
    ParityTable out(t.radix(), t.bag(), &t.alg());
    int b = static_cast<int>(t.bag().size());
    for (auto& e : t.entries()) {
        int r = 0;
        for (int p = 0; p < b; ++p) r += counted[t.digit(e.col, p)];
        if (acc_get(e.acc, field) != r) continue;
        out.add(e.col, acc_set(e.acc, field, 0), t.value(e));
    }
    t = std::move(out);
}

ParityTable run_dp(DpProblem& problem, const NiceTreeDecomposition& ntd, const WeightAlgebra& alg, const DpOptions& opt) {
    int nn = static_cast<int>(ntd.nodes.size());
    if (nn == 0) throw StructureError("empty decomposition");
    int radix = problem.radix();
    std::vector<std::unique_ptr<ParityTable>> tab(nn);
    std::vector<int> pending(nn, 0);  // parents still needing a child table
    for (auto& x : ntd.nodes)
        for (int c : x.children) ++pending[c];
    uint64_t live = 0, live_words = 0;
    DpStats local;
    DpStats& st = opt.stats ? *opt.stats : local;

    for (int i = 0; i < nn; ++i) {
        const auto& x = ntd.nodes[i];
        auto out = std::make_unique<ParityTable>(radix, x.bag, &alg);
        switch (x.type) {
        case NodeType::Leaf:
            problem.leaf(*out);
            break;
        case NodeType::IntroduceVertex:
            problem.introduce(*tab[x.children[0]], x.vertex, *out);
            if (opt.fixed && (*opt.fixed)[x.vertex] >= 0) {
                // core evaluation: keep only the forced digit of this vertex
                int pos = out->position(x.vertex), want = (*opt.fixed)[x.vertex];
                ParityTable keep(radix, x.bag, &alg);
                for (auto& e : out->entries())
                    if (out->digit(e.col, pos) == want) keep.add(e.col, e.acc, out->value(e));
                *out = std::move(keep);
            }
            break;
        case NodeType::IntroduceEdge:
            problem.edge(*tab[x.children[0]], x, *out);
            break;
        case NodeType::Forget:
            problem.forget(*tab[x.children[0]], x.vertex, *out);
            break;
        case NodeType::Join:
            problem.join(*tab[x.children[0]], *tab[x.children[1]], *out);
            break;
        }
        out->normalize();

        // coloring axis must be exactly radix^|bag| and every coloring inside it
        uint64_t axis = 1;
        for (size_t k = 0; k < x.bag.size(); ++k) axis *= static_cast<uint64_t>(radix);
        if (out->radix() != radix || out->axis_size() != axis) throw StructureError("coloring axis size mismatch");
        for (auto& e : out->entries())
            if (e.col >= axis) throw StructureError("coloring outside the axis");
        std::pair<int, uint64_t> shape{static_cast<int>(x.bag.size()), axis};
        if (std::find(st.axis.begin(), st.axis.end(), shape) == st.axis.end()) st.axis.push_back(shape);
        st.max_bag = std::max(st.max_bag, static_cast<int>(x.bag.size()));
        ++st.nodes;

        live += out->cells();
        live_words += out->cells() * alg.words();
        st.peak_cells = std::max(st.peak_cells, live);
        st.peak_words = std::max(st.peak_words, live_words);
        for (int c : x.children)
            if (--pending[c] == 0) {
                live -= tab[c]->cells();
                live_words -= tab[c]->cells() * alg.words();
                tab[c].reset();
            }
        tab[i] = std::move(out);
    }
    return std::move(*tab[ntd.root]);
}

}  // namespace cutcount
