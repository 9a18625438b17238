// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cut_enum.hpp"
#include "cutcount/algebra.hpp"
#include "cutcount/fpt.hpp"
#include "cutcount/hardgen.hpp"
#include "cutcount/oracle.hpp"
#include "cutcount/problems.hpp"
#include "cutcount/vertex_solvers.hpp"
#include "isolation.hpp"
#include "naive_algebra.hpp"

using namespace cutcount;

namespace {

// pinned thresholds
constexpr int kOracleInstances = 200;
constexpr int kOracleReps = 16;
constexpr int kOracleMaxN = 10;
constexpr int kOracleMaxWidth = 5;
constexpr double kOracleBudgetSec = 600;

constexpr int kAlgebraTables = 100;
constexpr int kSubsetMaxB = 8;
constexpr int kZpMaxB = 3;

constexpr int kCancelInstances = 50;
constexpr int kCancelMaxN = 7;
constexpr double kCancelBudgetSec = 300;

constexpr int kAxisInstances = 20;

constexpr int kFptInstances = 100;
constexpr int kFptMaxN = 12;
constexpr int kFptMaxK = 4;
constexpr double kFptBudgetSec = 600;

constexpr int kIsoUniverse = 8;
constexpr int kIsoFamilies = 1000;
constexpr double kIsoThreshold = 1.0 - 8.0 / 16.0 - 0.05;

constexpr int kHardFormulas = 10;
constexpr int kHardMaxVars = 6;
constexpr int kHardMaxClauses = 4;
constexpr int kHardReps = 20;
constexpr double kHardBudgetSec = 600;

constexpr uint64_t kSeed = 20240611;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

__attribute__((format(printf, 1, 2))) void detail(const char* fmt, ...) {
    std::va_list ap;
    va_start(ap, fmt);
    std::printf("    ");
    std::vprintf(fmt, ap);
    std::printf("\n");
    std::fflush(stdout);
    va_end(ap);
}

bool verdict_line(int id, bool ok, const std::string& what) {
    std::printf("criterion %d %s: %s\n", id, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    return ok;
}

// ---- 1 ----

struct SweepResult {
    int false_pos = 0, misses = 0;
};

SweepResult oracle_sweep(uint64_t seed) {
    SweepResult total;
    RandomSpec spec;
    spec.max_n = kOracleMaxN;
    spec.max_width = kOracleMaxWidth;
    for (auto p : core_problems()) {
        Rng rng(derive_seed(seed, static_cast<uint64_t>(p)));
        int fp = 0, miss = 0, yes = 0;
        for (int i = 0; i < kOracleInstances; ++i) {
            auto r = random_instance(p, rng, spec);
            SolveOptions opt;
            opt.repetitions = kOracleReps;
            opt.seed = derive_seed(seed ^ 0x5bd1e995, static_cast<uint64_t>(i) * 64 + static_cast<uint64_t>(p));
            bool got = solve_problem(p, r.in, r.td, opt).verdict == Verdict::Yes;
            fp += got && !r.answer;
            miss += !got && r.answer;
            yes += r.answer;
        }
        detail("%-13s yes-instances %3d/%d  false positives %d  misses %d", problem_name(p), yes, kOracleInstances, fp, miss);
        total.false_pos += fp;
        total.misses += miss;
    }
    return total;
}

bool criterion1() {
    auto t0 = Clock::now();
    auto r = oracle_sweep(kSeed);
    bool rerun = false;
    if (r.false_pos == 0 && r.misses > 0) {
        detail("misses observed, one rerun with a fresh seed");
        rerun = true;
        r = oracle_sweep(kSeed + 1);
    }
    double sec = since(t0);
    bool ok = r.false_pos == 0 && r.misses == 0 && sec <= kOracleBudgetSec;
    char buf[200];
    std::snprintf(buf, sizeof buf, "oracle equivalence, %d problems x %d instances, %d reps: %d false positives, %d misses%s, %.1fs",
                  static_cast<int>(core_problems().size()), kOracleInstances, kOracleReps, r.false_pos, r.misses, rerun ? " after rerun" : "", sec);
    return verdict_line(1, ok, buf);
}

// ---- 2 ----

// naive p^{2b} loops are the bottleneck; per-radix caps keep them to seconds
int generalized_max_b(int p) {
    switch (p) {
    case 2: return 8;
    case 3: return 6;
    case 4: return 5;
    default: return 4;
    }
}

bool criterion2() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(kSeed);
    int bad = 0, checked = 0;
    auto run = [&](const char* name, int cases, const std::function<bool()>& one) {
        int wrong = 0;
        for (int i = 0; i < cases; ++i) wrong += !one();
        detail("%-22s %d tables, %d mismatches", name, cases, wrong);
        bad += wrong;
        checked += cases;
    };
    auto rand_b = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)); };

    run("subset convolution", kAlgebraTables, [&] {
        int b = rand_b(0, kSubsetMaxB);
        auto f = naive::random_subset_table(b, rng), g = naive::random_subset_table(b, rng);
        return subset_convolution(f, g) == naive::subset(f, g);
    });
    run("covering product", kAlgebraTables, [&] {
        int b = rand_b(0, kSubsetMaxB);
        auto f = naive::random_subset_table(b, rng), g = naive::random_subset_table(b, rng);
        return covering_product(f, g) == naive::covering(f, g);
    });
    run("packing product", kAlgebraTables, [&] {
        int b = rand_b(0, kSubsetMaxB);
        auto f = naive::random_subset_table(b, rng), g = naive::random_subset_table(b, rng);
        return packing_product(f, g) == naive::packing(f, g);
    });
    for (int p = 2; p <= 6; ++p) {
        std::string name = "generalized p=" + std::to_string(p);
        run(name.c_str(), kAlgebraTables, [&] {
            int b = rand_b(1, generalized_max_b(p));
            auto f = naive::random_tuple_table(b, p, rng), g = naive::random_tuple_table(b, p, rng);
            return generalized_convolution(f, g) == naive::generalized(f, g);
        });
    }
    for (int p : {2, 4}) {
        std::string name = "Z_" + std::to_string(p) + " product";
        run(name.c_str(), kAlgebraTables, [&] {
            int b = rand_b(1, kZpMaxB);
            auto f = naive::random_tuple_table(b, p, rng, 3), g = naive::random_tuple_table(b, p, rng, 3);
            return zp_product(f, g, p) == naive::cyclic(f, g);
        });
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "algebra vs naive definitions: %d/%d tables equal, %.1fs", checked - bad, checked, since(t0));
    return verdict_line(2, bad == 0, buf);
}

// ---- 3 ----

bool criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    int odd = 0;
    for (auto p : core_problems()) {
        auto r = cancellation_check(p, kCancelInstances, derive_seed(kSeed, 300 + static_cast<uint64_t>(p)), kCancelMaxN);
        detail("%-13s instances %d  slices %d  odd cells %d  |C_W|!=|S_W| %d  countc!=|C_W| %d %s", problem_name(p), r.instances, r.slices, r.odd_cells,
               r.cut_vs_solution, r.dp_vs_cut, r.first_failure.c_str());
        ok = ok && r.ok();
        odd += r.odd_cells;
    }
    double sec = since(t0);
    ok = ok && sec <= kCancelBudgetSec;
    char buf[160];
    std::snprintf(buf, sizeof buf, "cancellation parity on %d instances per problem (n <= %d), %d odd cells, %.1fs", kCancelInstances, kCancelMaxN, odd, sec);
    return verdict_line(3, ok, buf);
}

// ---- 4 ----

int expected_radix(Problem p, bool directed) {
    switch (p) {
    case Problem::Steiner:
    case Problem::Cvc:
    case Problem::Fvs: return 3;
    case Problem::PccDirected:
    case Problem::KLeafOutbranching: return 6;
    case Problem::LongestPath: return directed ? 6 : 4;
    default: return 4;
    }
}

bool criterion4() {
    bool ok = true;
    int runs = 0;
    for (auto p : core_problems()) {
        Rng rng(derive_seed(kSeed, 400 + static_cast<uint64_t>(p)));
        int shapes = 0, wrong = 0, max_bag = 0;
        for (int i = 0; i < kAxisInstances; ++i) {
            auto r = random_instance(p, rng);
            DpStats st;
            SolveOptions opt;
            opt.repetitions = 2;
            opt.seed = static_cast<uint64_t>(i);
            opt.stats = &st;
            try {
                solve_problem(p, r.in, r.td, opt);
            } catch (const std::exception& e) {
                detail("%s: %s", problem_name(p), e.what());
                ++wrong;
                continue;
            }
            int radix = expected_radix(p, r.in.directed);
            for (auto [bag, axis] : st.axis) {
                uint64_t want = 1;
                for (int j = 0; j < bag; ++j) want *= static_cast<uint64_t>(radix);
                wrong += axis != want;
                ++shapes;
            }
            max_bag = std::max(max_bag, st.max_bag);
            ++runs;
        }
        detail("%-13s radix %d  bag shapes checked %d  largest bag %d  mismatches %d", problem_name(p), expected_radix(p, false), shapes, max_bag, wrong);
        ok = ok && wrong == 0 && shapes > 0;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "coloring axis equals radix^|bag| on every bag of %d solver runs", runs);
    return verdict_line(4, ok, buf);
}

// ---- 5 ----

UndirectedGraph random_connected(Rng& rng, int n) {
    UndirectedGraph g(n);
    int density = 20 + static_cast<int>(rng() % 45);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < density) g.add_edge(u, v);
    // stitch components together with random edges
    int count = 0;
    auto comp = component_ids(g, &count);
    while (count > 1) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (comp[u] != comp[v]) {
            g.add_edge(u, v);
            comp = component_ids(g, &count);
        }
    }
    return g;
}

bool criterion5() {
    auto t0 = Clock::now();
    Rng rng(derive_seed(kSeed, 500));
    OracleLimit lim;
    lim.max_n = kFptMaxN;
    lim.max_edges = kFptMaxN * kFptMaxN;
    const char* names[3] = {"fvs_3k", "cvc_2k", "cfvs_3k"};
    int fp[3] = {}, miss[3] = {}, yes[3] = {}, bad_witness[3] = {};
    uint64_t peak = 0, bound = 0;
    bool space_ok = true;
    for (int it = 0; it < kFptInstances; ++it) {
        int n = 3 + static_cast<int>(rng() % (kFptMaxN - 2));
        auto g = random_connected(rng, n);
        int k = static_cast<int>(rng() % (kFptMaxK + 1));
        FptOptions o;
        o.seed = derive_seed(kSeed, 5000 + static_cast<uint64_t>(it));
        for (int s = 0; s < 3; ++s) {
            FptResult r;
            try {
                r = s == 0 ? fvs_3k(g, k, o) : s == 1 ? cvc_2k(g, k, o) : cfvs_3k(g, k, o);
            } catch (const SpaceBoundError& e) {
                detail("%s instance %d: %s", names[s], it, e.what());
                space_ok = false;
                continue;
            }
            int opt = s == 0 ? oracle_fvs_min(g, {}, lim) : s == 1 ? oracle_cvc_min(g, {}, lim) : oracle_cfvs_min(g, {}, lim);
            bool truth = opt >= 0 && opt <= k;
            bool got = r.verdict == Verdict::Yes;
            fp[s] += got && !truth;
            miss[s] += !got && truth;
            yes[s] += truth;
            if (got) {
                bool w = static_cast<int>(r.solution.size()) <= k &&
                         (s == 0 ? is_feedback_vertex_set(g, r.solution) : s == 1 ? is_connected_vertex_cover(g, r.solution) : is_connected_feedback_vertex_set(g, r.solution));
                bad_witness[s] += !w;
            }
            peak = std::max(peak, r.stats.peak_cells);
            bound = std::max(bound, r.stats.cell_bound);
            space_ok = space_ok && r.stats.peak_cells <= r.stats.cell_bound;
        }
    }
    bool ok = space_ok;
    for (int s = 0; s < 3; ++s) {
        detail("%-8s yes-instances %3d/%d  false positives %d  misses %d  bad witnesses %d", names[s], yes[s], kFptInstances, fp[s], miss[s], bad_witness[s]);
        ok = ok && fp[s] == 0 && miss[s] == 0 && bad_witness[s] == 0;
    }
    detail("largest per-evaluation table %llu cells, largest polynomial bound %llu", static_cast<unsigned long long>(peak), static_cast<unsigned long long>(bound));
    double sec = since(t0);
    ok = ok && sec <= kFptBudgetSec;
    char buf[160];
    std::snprintf(buf, sizeof buf, "FPT solvers vs oracle on %d instances each (n <= %d, k <= %d), witnesses verified, %.1fs", kFptInstances, kFptMaxN, kFptMaxK, sec);
    return verdict_line(5, ok, buf);
}

// ---- 6 ----

bool criterion6() {
    double rate = isolation_rate(kIsoUniverse, kIsoFamilies, derive_seed(kSeed, 600));
    char buf[160];
    std::snprintf(buf, sizeof buf, "isolation frequency %.3f over %d families (|U|=%d, N=%d), threshold %.2f", rate, kIsoFamilies, kIsoUniverse,
                  2 * kIsoUniverse, kIsoThreshold);
    return verdict_line(6, rate >= kIsoThreshold, buf);
}

// ---- 7 ----

Cnf random_3cnf(Rng& rng) {
    Cnf f;
    f.vars = 1 + static_cast<int>(rng() % kHardMaxVars);
    int m = 1 + static_cast<int>(rng() % kHardMaxClauses);
    for (int c = 0; c < m; ++c) {
        std::vector<int> vs;
        int want = std::min(3, f.vars);
        while (static_cast<int>(vs.size()) < want) {
            int v = 1 + static_cast<int>(rng() % f.vars);
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        }
        for (int& v : vs) v = rng() % 2 ? v : -v;
        f.clauses.push_back(vs);
    }
    return f;
}

bool criterion7() {
    auto t0 = Clock::now();
    Rng rng(derive_seed(kSeed, 700));
    int structural_bad = 0, verdict_bad = 0, sat_count = 0;
    std::string first_reason;
    for (int i = 0; i < kHardFormulas; ++i) {
        auto f = random_3cnf(rng);
        int beta = 1 + i % 2;
        auto sat = brute_force_sat(f);
        sat_count += sat.has_value();
        HardInstance inst;
        try {
            inst = gen_steiner(f, beta, sat);
        } catch (const std::exception& e) {
            detail("formula %d: generation failed: %s", i, e.what());
            ++structural_bad;
            ++verdict_bad;
            continue;
        }
        bool pd_ok = validate(inst.pd, inst.g).empty();
        bool width_ok = inst.pd.width() <= width_bound(inst.params);
        bool witness_ok = !sat || (!inst.witness.empty() && edge_weight_sum(inst, inst.witness) == inst.K && is_steiner_tree(inst.g, inst.terminals, inst.witness));
        structural_bad += !(pd_ok && width_ok && witness_ok);

        std::string verdict;
        bool verdict_ok = false;
        try {
            auto u = to_unweighted(inst);
            auto ntd = make_nice(u.pd.to_tree(), u.g);
            SolveOptions opt;
            opt.repetitions = kHardReps;
            opt.seed = derive_seed(kSeed, 7000 + static_cast<uint64_t>(i));
            int k_vertices = static_cast<int>(u.K_edges + 1);
            bool got = solve_steiner(u.g, ntd, u.terminals, k_vertices, opt).verdict == Verdict::Yes;
            verdict_ok = got == sat.has_value();
            verdict = got ? "YES" : "UNKNOWN";
        } catch (const std::exception& e) {
            verdict = std::string("not run: ") + e.what();
            if (first_reason.empty()) first_reason = e.what();
        }
        verdict_bad += !verdict_ok;
        detail("formula %d: vars %d clauses %zu beta %d %s | |V| %d K %lld | pd %s width %d <= %lld %s | witness %s | subdivided |V| %lld | verdict %s", i, f.vars,
               f.clauses.size(), beta, sat ? "SAT" : "UNSAT", inst.g.n, static_cast<long long>(inst.K), pd_ok ? "valid" : "INVALID", inst.pd.width(),
               static_cast<long long>(width_bound(inst.params)), width_ok ? "ok" : "EXCEEDED", !sat ? "n/a" : witness_ok ? "sums to K" : "BAD",
               static_cast<long long>(subdivided_size(inst)), verdict.c_str());
    }
    double sec = since(t0);
    detail("structure (decomposition, width bound with c = %d, witness = K): %d/%d formulas clean", kWidthSlack, kHardFormulas - structural_bad, kHardFormulas);
    detail("solver verdict on the unweighted instance matches SAT: %d/%d", kHardFormulas - verdict_bad, kHardFormulas);
    bool ok = structural_bad == 0 && verdict_bad == 0 && sec <= kHardBudgetSec;
    char buf[300];
    std::snprintf(buf, sizeof buf, "hard-instance round trip on %d formulas (%d SAT): %s, %.1fs", kHardFormulas, sat_count,
                  verdict_bad == 0 ? "verdicts match" : ("solver verdicts unavailable (" + first_reason + ")").c_str(), sec);
    return verdict_line(7, ok, buf);
}

}  // namespace

int main() {
    std::vector<std::function<bool()>> all = {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7};
    int failed = 0;
    for (size_t i = 0; i < all.size(); ++i) {
        bool ok = false;
        try {
            ok = all[i]();
        } catch (const std::exception& e) {
            ok = verdict_line(static_cast<int>(i) + 1, false, std::string("unexpected exception: ") + e.what());
        }
        failed += !ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
