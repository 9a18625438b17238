#pragma once

#include <cstdint>
#include <vector>

#include "cutcount/engine.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

struct FptStats {
    uint64_t compressions = 0;  // steps that needed the counting test
    uint64_t queries = 0;       // Monte Carlo queries (test + reconstruction)
    uint64_t evaluations = 0;   // dynamic programming passes, one per core evaluation
    uint64_t peak_cells = 0;    // worst live table cells in one pass
    uint64_t cell_bound = 0;    // polynomial bound that peak_cells is checked against
    int max_hull = 0;           // largest |B|
};

struct FptResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<int> solution;  // verified witness when verdict is Yes
    FptStats stats;
};

struct FptOptions {
    int repetitions = 16;  // per query
    uint64_t seed = 1;
    WeightMode mode = WeightMode::Evaluate;
};

// feedback vertex set of size at most k, 3^k core evaluations per test
FptResult fvs_3k(const UndirectedGraph& g, int k, const FptOptions& opt = {});
// connected vertex cover of size at most k; g must be connected
FptResult cvc_2k(const UndirectedGraph& g, int k, const FptOptions& opt = {});
// connected feedback vertex set of size at most k; g must be connected
FptResult cfvs_3k(const UndirectedGraph& g, int k, const FptOptions& opt = {});

// independent witness checks
bool is_feedback_vertex_set(const UndirectedGraph& g, const std::vector<int>& X);
bool is_connected_vertex_cover(const UndirectedGraph& g, const std::vector<int>& X);
bool is_connected_feedback_vertex_set(const UndirectedGraph& g, const std::vector<int>& X);

// thrown when a core evaluation outgrows the polynomial cell bound
struct SpaceBoundError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cutcount
