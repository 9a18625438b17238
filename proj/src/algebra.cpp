#include "cutcount/algebra.hpp"

#include <array>
#include <bit>
#include <limits>

namespace cutcount {

using i128 = __int128;

namespace {

int64_t narrow(i128 x) {
    if (x > std::numeric_limits<int64_t>::max() || x < std::numeric_limits<int64_t>::min())
        throw AlgebraError("integer overflow in transform");
    return static_cast<int64_t>(x);
}

i128 add_checked(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw AlgebraError("128-bit overflow");
    return r;
}

i128 mul_checked(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw AlgebraError("128-bit overflow");
    return r;
}

void check_subset(const SubsetTable& f, const SubsetTable& g) {
    if (f.b != g.b) throw AlgebraError("mismatched ground sets");
    if (f.b < 0 || f.b > kMaxSubsetBits) throw AlgebraError("ground set too large");
    if (f.values.size() != (size_t{1} << f.b) || g.values.size() != f.values.size()) throw AlgebraError("table length mismatch");
}

template <class T>
void zeta(std::vector<T>& v, int b, int sign) {
    size_t n = size_t{1} << b;
    for (int i = 0; i < b; ++i)
        for (size_t s = 0; s < n; ++s)
            if (s >> i & 1) v[s] += sign * v[s ^ (size_t{1} << i)];
}

// cyclotomic integers Z[x]/Phi_p(x); x plays a primitive p-th root of unity
struct Cyclo {
    int p;
    int deg;
    std::array<i128, 4> phi{};  // monic Phi_p without its leading 1

    explicit Cyclo(int p_) : p(p_) {
        switch (p) {
        case 2: deg = 1; phi = {1}; break;                  // x + 1
        case 3: deg = 2; phi = {1, 1}; break;               // x^2 + x + 1
        case 4: deg = 2; phi = {1, 0}; break;               // x^2 + 1
        case 5: deg = 4; phi = {1, 1, 1, 1}; break;         // x^4 + ... + 1
        case 6: deg = 2; phi = {1, -1}; break;              // x^2 - x + 1
        default: throw AlgebraError("radix outside 2..6");
        }
    }

    using Elt = std::array<i128, 4>;

    // a * x^k reduced
    Elt shift(const Elt& a, int k) const {
        Elt r = a;
        for (int step = 0; step < k; ++step) {
            i128 top = r[deg - 1];
            for (int i = deg - 1; i > 0; --i) r[i] = r[i - 1];
            r[0] = 0;
            for (int i = 0; i < deg; ++i) r[i] = add_checked(r[i], mul_checked(-top, phi[i]));
        }
        return r;
    }

    Elt mul(const Elt& a, const Elt& b) const {
        Elt r{};
        for (int i = 0; i < deg; ++i) {
            if (a[i] == 0) continue;
            Elt t{};
            for (int j = 0; j < deg; ++j) t[j] = mul_checked(a[i], b[j]);
            t = shift(t, i);
            for (int j = 0; j < deg; ++j) r[j] = add_checked(r[j], t[j]);
        }
        return r;
    }
};

// Yates-style transform: out(s) = sum_t in(t) x^{s.t}
void cyclo_transform(const Cyclo& c, std::vector<Cyclo::Elt>& v, int b) {
    int p = c.p;
    size_t stride = 1;
    std::vector<Cyclo::Elt> col(p), res(p);
    for (int pos = 0; pos < b; ++pos) {
        size_t block = stride * p;
        for (size_t base = 0; base < v.size(); base += block)
            for (size_t off = 0; off < stride; ++off) {
                for (int t = 0; t < p; ++t) col[t] = v[base + off + t * stride];
                for (int s = 0; s < p; ++s) {
                    Cyclo::Elt acc{};
                    for (int t = 0; t < p; ++t) {
                        auto term = c.shift(col[t], (s * t) % p);
                        for (int j = 0; j < c.deg; ++j) acc[j] = add_checked(acc[j], term[j]);
                    }
                    res[s] = acc;
                }
                for (int s = 0; s < p; ++s) v[base + off + s * stride] = res[s];
            }
        stride = block;
    }
}

std::vector<Cyclo::Elt> lift(const std::vector<int64_t>& f) {
    std::vector<Cyclo::Elt> F(f.size());
    for (size_t i = 0; i < f.size(); ++i) F[i] = {f[i]};
    return F;
}

// inverse of the transform applied to a pointwise product: value at t is p^b times the product at -t
std::vector<int64_t> unlift(const Cyclo& c, std::vector<Cyclo::Elt>& H, int b) {
    int p = c.p;
    cyclo_transform(c, H, b);
    i128 scale = 1;
    for (int i = 0; i < b; ++i) scale = mul_checked(scale, p);
    std::vector<int64_t> out(H.size());
    for (size_t i = 0; i < H.size(); ++i) {
        for (int j = 1; j < c.deg; ++j)
            if (H[i][j] != 0) throw AlgebraError("transform left a non-integer value");
        if (H[i][0] % scale != 0) throw AlgebraError("transform value not divisible by p^b");
        size_t rest = i, neg = 0, w = 1;
        for (int pos = 0; pos < b; ++pos) {
            int d = static_cast<int>(rest % p);
            rest /= p;
            neg += ((p - d) % p) * w;
            w *= p;
        }
        out[neg] = narrow(H[i][0] / scale);
    }
    return out;
}

}  // namespace

SubsetTable::SubsetTable(int b_) : b(b_) {
    if (b < 0 || b > kMaxSubsetBits) throw AlgebraError("ground set too large");
    values.assign(size_t{1} << b, 0);
}

SubsetTable SubsetTable::mod2() const {
    SubsetTable r = *this;
    for (auto& x : r.values) x &= 1;
    return r;
}

TupleTable::TupleTable(int b_, int p_) : b(b_), p(p_) {
    if (p < 2 || p > 6) throw AlgebraError("radix outside 2..6");
    size_t n = 1;
    for (int i = 0; i < b; ++i) n *= p;
    values.assign(n, 0);
}

int TupleTable::digit(size_t index, int pos) const {
    for (int i = 0; i < pos; ++i) index /= p;
    return static_cast<int>(index % p);
}

TupleTable TupleTable::mod2() const {
    TupleTable r = *this;
    for (auto& x : r.values) x &= 1;
    return r;
}

void zeta_transform(std::vector<int64_t>& v, int b) { zeta(v, b, 1); }
void mobius_transform(std::vector<int64_t>& v, int b) { zeta(v, b, -1); }

SubsetTable subset_convolution(const SubsetTable& f, const SubsetTable& g) {
    check_subset(f, g);
    int b = f.b;
    if (b > kMaxRankedBits) throw AlgebraError("ground set too large for ranked transform");
    size_t n = size_t{1} << b;
    std::vector<std::vector<i128>> fr(b + 1, std::vector<i128>(n)), gr = fr;
    for (size_t s = 0; s < n; ++s) {
        fr[std::popcount(s)][s] = f.values[s];
        gr[std::popcount(s)][s] = g.values[s];
    }
    for (int r = 0; r <= b; ++r) {
        zeta(fr[r], b, 1);
        zeta(gr[r], b, 1);
    }
    SubsetTable out(b);
    std::vector<i128> h(n);
    for (int r = 0; r <= b; ++r) {
        for (size_t s = 0; s < n; ++s) {
            i128 acc = 0;
            for (int j = 0; j <= r; ++j) acc = add_checked(acc, mul_checked(fr[j][s], gr[r - j][s]));
            h[s] = acc;
        }
        zeta(h, b, -1);
        for (size_t s = 0; s < n; ++s)
            if (std::popcount(s) == r) out.values[s] = narrow(h[s]);
    }
    return out;
}

SubsetTable covering_product(const SubsetTable& f, const SubsetTable& g) {
    check_subset(f, g);
    size_t n = f.values.size();
    std::vector<i128> F(f.values.begin(), f.values.end()), G(g.values.begin(), g.values.end());
    zeta(F, f.b, 1);
    zeta(G, f.b, 1);
    for (size_t s = 0; s < n; ++s) F[s] = mul_checked(F[s], G[s]);
    zeta(F, f.b, -1);
    SubsetTable out(f.b);
    for (size_t s = 0; s < n; ++s) out.values[s] = narrow(F[s]);
    return out;
}

SubsetTable packing_product(const SubsetTable& f, const SubsetTable& g) {
    // disjoint pairs inside T = subset sums of the subset convolution
    auto h = subset_convolution(f, g);
    std::vector<i128> H(h.values.begin(), h.values.end());
    zeta(H, f.b, 1);
    for (size_t s = 0; s < H.size(); ++s) h.values[s] = narrow(H[s]);
    return h;
}

TupleTable generalized_convolution(const TupleTable& f, const TupleTable& g) {
    if (f.p != g.p || f.b != g.b || f.size() != g.size()) throw AlgebraError("radix mismatch");
    int p = f.p, b = f.b;
    size_t n = f.size();
    // t1 + t2 = t without carry iff it holds mod p and digit sums add up exactly
    int maxr = b * (p - 1);
    std::vector<int> rank(n);
    for (size_t i = 0; i < n; ++i) {
        size_t rest = i;
        for (int pos = 0; pos < b; ++pos) {
            rank[i] += static_cast<int>(rest % p);
            rest /= p;
        }
    }
    Cyclo c(p);
    std::vector<std::vector<Cyclo::Elt>> fr(maxr + 1), gr(maxr + 1);
    for (int r = 0; r <= maxr; ++r) {
        std::vector<int64_t> a(n), bb(n);
        for (size_t i = 0; i < n; ++i)
            if (rank[i] == r) {
                a[i] = f.values[i];
                bb[i] = g.values[i];
            }
        fr[r] = lift(a);
        gr[r] = lift(bb);
        cyclo_transform(c, fr[r], b);
        cyclo_transform(c, gr[r], b);
    }
    TupleTable out(b, p);
    for (int r = 0; r <= maxr; ++r) {
        std::vector<Cyclo::Elt> H(n);
        for (int r1 = 0; r1 <= r; ++r1)
            for (size_t i = 0; i < n; ++i) {
                auto t = c.mul(fr[r1][i], gr[r - r1][i]);
                for (int j = 0; j < c.deg; ++j) H[i][j] = add_checked(H[i][j], t[j]);
            }
        auto h = unlift(c, H, b);
        for (size_t i = 0; i < n; ++i)
            if (rank[i] == r) out.values[i] = h[i];
    }
    return out;
}

TupleTable zp_product(const TupleTable& f, const TupleTable& g, int p) {
    if (p != 2 && p != 4) throw AlgebraError("Z_p product supports p in {2,4}");
    if (f.p != p || g.p != p || f.b != g.b || f.size() != g.size()) throw AlgebraError("radix mismatch");
    Cyclo c(p);
    auto F = lift(f.values), G = lift(g.values);
    cyclo_transform(c, F, f.b);
    cyclo_transform(c, G, f.b);
    for (size_t i = 0; i < F.size(); ++i) F[i] = c.mul(F[i], G[i]);
    TupleTable out(f.b, p);
    out.values = unlift(c, F, f.b);
    return out;
}

}  // namespace cutcount
