#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cutcount/decomposition.hpp"
#include "cutcount/table.hpp"

namespace cutcount {

using Rng = std::mt19937_64;

// independent stream seeds from one master seed
uint64_t derive_seed(uint64_t seed, uint64_t stream);

struct WeightFunction {
    std::vector<int> w;  // w[u] in [1, N] for element u of the universe
    int N = 0;

    size_t universe() const { return w.size(); }
    int operator[](size_t u) const { return w[u]; }
};

WeightFunction sample_weights(size_t universe, uint64_t seed);
WeightFunction sample_weights(size_t universe, Rng& rng);

// parity of |C_W| for W in [0, max_weight]
class WParity {
public:
    WParity() = default;
    explicit WParity(int max_weight) : max_weight_(max_weight), bits_(max_weight / 64 + 1, 0) {}

    int max_weight() const { return max_weight_; }
    bool test(int W) const { return W >= 0 && W <= max_weight_ && (bits_[W >> 6] >> (W & 63) & 1); }
    void flip(int W) { bits_[W >> 6] ^= uint64_t{1} << (W & 63); }
    bool any() const;
    std::vector<int> odd_weights() const;
    void xor_with(const WParity& o);
    // from an Exact-mode table value
    static WParity from_value(const WeightAlgebra& alg, const uint64_t* v);
    bool operator==(const WParity&) const = default;

private:
    int max_weight_ = -1;
    std::vector<uint64_t> bits_;
};

enum class Verdict { Yes, Unknown };

inline const char* verdict_name(Verdict v) { return v == Verdict::Yes ? "YES" : "UNKNOWN"; }

struct MonteCarloAnswer {
    Verdict verdict = Verdict::Unknown;
    int repetitions = 0;
    uint64_t seed = 0;
    int runs_used = 0;  // repetitions actually executed (stops at the first Yes)
};

enum class CutCountResult { Yes, NoEvidence };

using CountCProcedure = std::function<WParity(const WeightFunction&, const NiceTreeDecomposition&)>;

// one run of the Cut&Count loop: sample weights, ask for every W in [0, 2|U|^2]
CutCountResult cut_and_count(size_t universe, const CountCProcedure& countc, const NiceTreeDecomposition& td, uint64_t seed);

// one randomized run, returning true only on certified odd parity
using SingleRun = std::function<bool(uint64_t run_seed)>;

MonteCarloAnswer amplified_solve(const SingleRun& run, int repetitions, uint64_t seed);

// solver-wide options
struct SolveOptions {
    int repetitions = 20;
    uint64_t seed = 1;
    WeightMode mode = WeightMode::Evaluate;
    DpStats* stats = nullptr;
};

// the algebra a solver run uses: Evaluate mode draws alpha from the run seed
WeightAlgebra run_algebra(WeightMode mode, int max_weight, uint64_t run_seed);

// value of the root cell with the given accumulator, or null
const uint64_t* root_cell(const ParityTable& root, uint64_t acc);

}  // namespace cutcount
