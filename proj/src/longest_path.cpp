#include <algorithm>
#include <stdexcept>
#include <type_traits>

#include "cutcount/edge_solvers.hpp"

namespace cutcount {

namespace {

// Guess the endpoints (s, t) and close the path into a cycle through a fresh
// path t - p_1 - ... - p_n - s. A cycle on n + k + 1 vertices must use all of
// it, since G alone has only n vertices.
TreeDecomposition widen(const TreeDecomposition& td, int n, int s, int t) {
    TreeDecomposition out;
    for (auto b : td.bags) {
        b.push_back(s);
        b.push_back(t);
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        out.bags.push_back(b);
    }
    out.tree = td.tree;
    out.root = td.root;
    // chain {s, t, p_1}, {s, p_1, p_2}, ..., {s, p_{n-1}, p_n}
    int first = static_cast<int>(out.bags.size());
    out.bags.push_back({s, t, n});
    for (int i = 1; i < n; ++i) out.bags.push_back({s, n + i - 1, n + i});
    out.tree.push_back({0, first});
    for (int i = 1; i < n; ++i) out.tree.push_back({first + i - 1, first + i});
    return out;
}

template <class G, class Attach>
MonteCarloAnswer longest_path_impl(const G& g, const TreeDecomposition& td, int k, const SolveOptions& opt, bool directed, Attach attach) {
    if (k < 0) throw std::invalid_argument("longest path: negative k");
    UndirectedGraph und;
    if constexpr (std::is_same_v<G, DirectedGraph>)
        und = g.underlying();
    else
        und = g;
    auto bad = validate(td, und);
    if (!bad.empty()) throw std::invalid_argument("longest path: invalid decomposition: " + bad.front());
    int n = g.n;
    auto no = [&] { return amplified_solve([](uint64_t) { return false; }, opt.repetitions, opt.seed); };
    if (n == 0) return no();
    if (k == 0) return amplified_solve([](uint64_t) { return true; }, opt.repetitions, opt.seed);
    // k edges need k + 1 distinct vertices
    if (k >= n) return no();

    auto comp = component_ids(und);
    std::vector<int> deg(n, 0);
    for (auto [u, v] : und.edges) ++deg[u], ++deg[v];

    struct Guess {
        G h;
        NiceTreeDecomposition ntd;
    };
    std::vector<Guess> guesses;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t || (!directed && t < s)) continue;
            if (comp[s] != comp[t] || !deg[s] || !deg[t]) continue;
            G h = attach(g, s, t);
            auto wtd = widen(td, n, s, t);
            guesses.push_back({h, make_nice(wtd, h)});
        }
    int l = n + k + 1;
    return amplified_solve([&](uint64_t seed) {
        for (size_t i = 0; i < guesses.size(); ++i) {
            SolveOptions one = opt;
            one.repetitions = 1;
            one.seed = derive_seed(seed, i);
            if (solve_pcc(guesses[i].h, guesses[i].ntd, 1, l, one).verdict == Verdict::Yes) return true;
        }
        return false;
    }, opt.repetitions, opt.seed);
}

}  // namespace

MonteCarloAnswer solve_longest_path(const UndirectedGraph& g, const TreeDecomposition& td, int k, const SolveOptions& opt) {
    return longest_path_impl(g, td, k, opt, false, [](const UndirectedGraph& g0, int s, int t) {
        int n = g0.n;
        UndirectedGraph h(2 * n);
        for (auto [u, v] : g0.edges) h.add_edge(u, v);
        h.add_edge(t, n);
        for (int i = 1; i < n; ++i) h.add_edge(n + i - 1, n + i);
        h.add_edge(2 * n - 1, s);
        return h;
    });
}

MonteCarloAnswer solve_longest_path(const DirectedGraph& g, const TreeDecomposition& td, int k, const SolveOptions& opt) {
    return longest_path_impl(g, td, k, opt, true, [](const DirectedGraph& g0, int s, int t) {
        int n = g0.n;
        DirectedGraph h(2 * n);
        for (auto [u, v] : g0.arcs) h.add_arc(u, v);
        h.add_arc(t, n);
        for (int i = 1; i < n; ++i) h.add_arc(n + i - 1, n + i);
        h.add_arc(2 * n - 1, s);
        return h;
    });
}

}  // namespace cutcount
