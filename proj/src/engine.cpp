#include "cutcount/engine.hpp"

#include <bit>
#include <stdexcept>

namespace cutcount {

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    // splitmix64 over (seed, stream)
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

WeightFunction sample_weights(size_t universe, Rng& rng) {
    if (universe == 0) throw std::invalid_argument("empty universe");
    WeightFunction f;
    f.N = static_cast<int>(2 * universe);
    std::uniform_int_distribution<int> dist(1, f.N);
    f.w.resize(universe);
    for (auto& x : f.w) x = dist(rng);
    return f;
}

WeightFunction sample_weights(size_t universe, uint64_t seed) {
    Rng rng(seed);
    return sample_weights(universe, rng);
}

bool WParity::any() const {
    for (auto b : bits_)
        if (b) return true;
    return false;
}

std::vector<int> WParity::odd_weights() const {
    std::vector<int> out;
    for (int W = 0; W <= max_weight_; ++W)
        if (test(W)) out.push_back(W);
    return out;
}

void WParity::xor_with(const WParity& o) {
    if (o.max_weight_ != max_weight_) throw std::invalid_argument("weight range mismatch");
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
}

WParity WParity::from_value(const WeightAlgebra& alg, const uint64_t* v) {
    WParity p(alg.max_weight());
    if (!v) return p;
    for (int W = 0; W <= alg.max_weight(); ++W)
        if (alg.bit(v, W)) p.flip(W);
    return p;
}

CutCountResult cut_and_count(size_t universe, const CountCProcedure& countc, const NiceTreeDecomposition& td, uint64_t seed) {
    auto w = sample_weights(universe, seed);
    WParity par = countc(w, td);
    long long top = 2LL * static_cast<long long>(universe) * static_cast<long long>(universe);
    for (int W = 0; W <= par.max_weight(); ++W)
        if (par.test(W)) {
            if (W > top) throw std::logic_error("countc reported a weight beyond 2|U|^2");
            return CutCountResult::Yes;
        }
    return CutCountResult::NoEvidence;
}

MonteCarloAnswer amplified_solve(const SingleRun& run, int repetitions, uint64_t seed) {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
    MonteCarloAnswer ans;
    ans.repetitions = repetitions;
    ans.seed = seed;
    for (int r = 0; r < repetitions; ++r) {
        ++ans.runs_used;
        if (run(derive_seed(seed, r))) {
            ans.verdict = Verdict::Yes;
            break;
        }
    }
    return ans;
}

WeightAlgebra run_algebra(WeightMode mode, int max_weight, uint64_t run_seed) {
    uint64_t alpha = derive_seed(run_seed, 0xa1fa);
    return WeightAlgebra(mode, max_weight, alpha);
}

const uint64_t* root_cell(const ParityTable& root, uint64_t acc) {
    for (auto& e : root.entries())
        if (e.col == 0 && e.acc == acc) return root.value(e);
    return nullptr;
}

}  // namespace cutcount
