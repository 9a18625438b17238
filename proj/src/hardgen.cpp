#include "cutcount/hardgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace cutcount {

Cnf parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Cnf f;
    bool header = false;
    int declared = 0;
    std::vector<int> cur;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%') continue;
        if (tok == "p") {
            std::string kind;
            if (header || !(ls >> kind >> f.vars >> declared) || kind != "cnf" || f.vars < 0 || declared < 0)
                throw CnfError("bad DIMACS header: " + line);
            header = true;
            continue;
        }
        if (!header) throw CnfError("clause before the p line");
        ls.clear();
        ls.str(line);
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (cur.empty()) throw CnfError("empty clause");
                f.clauses.push_back(cur);
                cur.clear();
                continue;
            }
            if (std::labs(lit) > f.vars) throw CnfError("literal out of range: " + std::to_string(lit));
            cur.push_back(static_cast<int>(lit));
        }
        if (!ls.eof()) throw CnfError("bad token in: " + line);
    }
    if (!header) throw CnfError("missing p cnf line");
    if (!cur.empty()) f.clauses.push_back(cur);
    if (static_cast<int>(f.clauses.size()) != declared)
        throw CnfError("header declares " + std::to_string(declared) + " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

bool satisfies(const Cnf& f, const std::vector<bool>& a) {
    for (auto& cl : f.clauses) {
        bool ok = false;
        for (int lit : cl) ok = ok || a[std::abs(lit)] == (lit > 0);
        if (!ok) return false;
    }
    return true;
}

std::optional<std::vector<bool>> brute_force_sat(const Cnf& f) {
    if (f.vars > 30) throw CnfError("brute force limited to 30 variables");
    std::vector<bool> a(f.vars + 1);
    for (uint64_t mask = 0; mask < (uint64_t{1} << f.vars); ++mask) {
        for (int v = 1; v <= f.vars; ++v) a[v] = mask >> (v - 1) & 1;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

namespace {

int pow3(int b) {
    int r = 1;
    while (b--) r *= 3;
    return r;
}

int64_t checked(__int128 x) {
    if (x > std::numeric_limits<int64_t>::max()) throw std::overflow_error("hard instance weights overflow 64 bits");
    return static_cast<int64_t>(x);
}

}  // namespace

GadgetParams gadget_params(int vars, int clauses, int beta) {
    if (beta < 1) throw std::invalid_argument("beta must be at least 1");
    if (beta > 6) throw std::invalid_argument("beta above 6 makes gadgets too large");
    if (vars < 1 || clauses < 1) throw CnfError("empty formula");
    GadgetParams p;
    p.beta = beta;
    // floor(log2 3^beta), exact for the small beta allowed here
    int64_t t = pow3(beta);
    p.beta_vars = 0;
    while ((int64_t{2} << p.beta_vars) <= t) ++p.beta_vars;
    p.groups = (vars + p.beta_vars - 1) / p.beta_vars;
    p.clauses = clauses;
    p.columns = clauses * (5 * beta * p.groups + 1);
    int64_t a1 = p.columns, n1 = p.groups;
    p.a[1] = a1;
    p.a[2] = t * n1 * a1;
    p.a[3] = beta * n1 * (4 * a1 - 1);
    p.a[4] = 2 * beta * n1 * a1;
    p.a[5] = beta * n1 * a1;
    p.a[6] = n1 * a1;
    p.N = 1 + n1 * a1 * (8 * beta + 2 * t) + n1 * (a1 - 1) * 2 * beta + n1 * beta + int64_t{clauses} * (5 * beta * n1 + 1);
    return p;
}

std::vector<int> sequence_of(int assignment, int beta) {
    std::vector<int> s(beta);
    for (int l = beta - 1; l >= 0; --l) {
        s[l] = assignment % 3 + 1;
        assignment /= 3;
    }
    return s;
}

namespace {

struct Builder {
    int next = 0;
    std::vector<Edge> edges;
    std::vector<int> tier;  // weight N^tier
    std::unordered_map<uint64_t, int> id;

    int vertex() { return next++; }
    void edge(int u, int v, int t) {
        if (u > v) std::swap(u, v);
        id.emplace(uint64_t(u) << 32 | uint32_t(v), static_cast<int>(edges.size()));
        edges.emplace_back(u, v);
        tier.push_back(t);
    }
    int find(int u, int v) const {
        if (u > v) std::swap(u, v);
        return id.at(uint64_t(u) << 32 | uint32_t(v));
    }
};

// group F's assignment as an integer (bit i = variable F * beta_vars + i + 1)
int group_assignment(const GadgetParams& p, const std::vector<bool>& a, int F, int vars) {
    int x = 0;
    for (int i = 0; i < p.beta_vars; ++i) {
        int v = F * p.beta_vars + i + 1;
        if (v <= vars && a[v]) x |= 1 << i;
    }
    return x;
}

int group_size(const GadgetParams& p, int F, int vars) {
    return std::min(p.beta_vars, vars - F * p.beta_vars);
}

bool group_satisfies(const GadgetParams& p, const std::vector<int>& clause, int F, int assignment) {
    for (int lit : clause) {
        int v = std::abs(lit) - 1;
        if (v / p.beta_vars != F) continue;
        bool val = assignment >> (v % p.beta_vars) & 1;
        if (val == (lit > 0)) return true;
    }
    return false;
}

}  // namespace

HardInstance gen_steiner(const Cnf& f, int beta, const std::optional<std::vector<bool>>& assignment) {
    for (auto& cl : f.clauses)
        if (cl.empty()) throw CnfError("empty clause");
    HardInstance inst;
    auto& P = inst.params;
    P = gadget_params(f.vars, static_cast<int>(f.clauses.size()), beta);
    const int n1 = P.groups, a1 = P.columns, S3 = pow3(beta), cols = 5 * beta * n1 + 1;
    auto& M = inst.map;
    Builder B;
    std::vector<int> terms;

    M.root = B.vertex();
    terms.push_back(M.root);
    auto grid4 = [&](int inner) {
        return std::vector(n1, std::vector(a1, std::vector(beta, std::vector<int>(inner))));
    };
    M.v = grid4(3), M.guard = grid4(3), M.h = grid4(2);
    M.x = M.xp = std::vector(n1, std::vector(a1, std::vector<int>(S3)));
    M.p = M.q = std::vector(n1, std::vector(std::max(a1 - 1, 0), std::vector<int>(beta)));
    M.w = std::vector(n1, std::vector<int>(beta));
    M.c = std::vector(P.clauses, std::vector<int>(cols));

    // gadgets
    for (int F = 0; F < n1; ++F)
        for (int b = 0; b < a1; ++b) {
            for (int l = 0; l < beta; ++l) {
                auto& v = M.v[F][b][l];
                for (int j = 0; j < 3; ++j) v[j] = B.vertex();
                for (int j = 0; j < 3; ++j) terms.push_back(M.guard[F][b][l][j] = B.vertex());
                auto& g = M.guard[F][b][l];
                B.edge(g[0], v[0], 2), B.edge(g[0], v[1], 2);
                B.edge(g[1], v[0], 2), B.edge(g[1], v[2], 2);
                B.edge(g[2], v[1], 2), B.edge(g[2], v[2], 2);
                for (int j = 0; j < 2; ++j) {
                    int h = M.h[F][b][l][j] = B.vertex();
                    B.edge(h, v[j], 1), B.edge(h, v[j + 1], 1);
                    B.edge(M.root, h, 0);
                }
            }
            for (int s = 0; s < S3; ++s) {
                int x = M.x[F][b][s] = B.vertex(), xp = M.xp[F][b][s] = B.vertex();
                terms.push_back(x);
                B.edge(x, xp, 0);
                auto seq = sequence_of(s, beta);
                for (int l = 0; l < beta; ++l) B.edge(x, M.v[F][b][l][seq[l] - 1], 3);
                B.edge(xp, M.root, 3);
            }
        }
    // path-like links between consecutive copies
    for (int F = 0; F < n1; ++F) {
        for (int b = 0; b + 1 < a1; ++b)
            for (int l = 0; l < beta; ++l) {
                int p = M.p[F][b][l] = B.vertex(), q = M.q[F][b][l] = B.vertex();
                terms.push_back(p);
                int exit = M.v[F][b][l][2], entry = M.v[F][b + 1][l][0];
                B.edge(p, exit, 2), B.edge(p, entry, 2);
                B.edge(q, exit, 1), B.edge(q, entry, 1);
                B.edge(M.root, q, 0);
            }
        for (int l = 0; l < beta; ++l) {
            B.edge(M.root, M.v[F][0][l][0], 1);
            int w = M.w[F][l] = B.vertex();
            B.edge(w, M.root, 0);
            B.edge(w, M.v[F][a1 - 1][l][2], 1);
        }
    }
    // clause checkers
    for (int C = 0; C < P.clauses; ++C)
        for (int j = 0; j < cols; ++j) {
            int c = M.c[C][j] = B.vertex();
            terms.push_back(c);
            int b = P.clauses * j + C;
            for (int F = 0; F < n1; ++F) {
                int count = 1 << group_size(P, F, f.vars);
                for (int a = 0; a < count; ++a)
                    if (group_satisfies(P, f.clauses[C], F, a)) B.edge(c, M.xp[F][b][a], 4);
            }
        }

    if (B.next != P.N) throw std::logic_error("gadget census mismatch");
    inst.g = UndirectedGraph(B.next);
    for (auto [u, v] : B.edges) inst.g.add_edge(u, v);
    int64_t pw[5] = {1, P.N, 0, 0, 0};
    for (int t = 2; t < 5; ++t) pw[t] = checked(__int128(pw[t - 1]) * P.N);
    for (int t : B.tier) inst.weight.push_back(pw[t]);
    std::sort(terms.begin(), terms.end());
    inst.terminals = terms;
    __int128 K = 0;
    for (int t = 1; t <= 4; ++t) K += __int128(P.a[t]) * pw[5 - t];
    K += P.a[5] + P.a[6];
    inst.K = checked(K);
    inst.pd = gen_path_decomposition(inst);

    if (!assignment) return inst;
    const auto& A = *assignment;
    if (static_cast<int>(A.size()) != f.vars + 1) throw std::invalid_argument("assignment size must be vars + 1");
    if (!satisfies(f, A)) throw std::invalid_argument("assignment does not satisfy the formula");
    auto& E0 = inst.witness;
    auto add = [&](int u, int v) { E0.push_back(B.find(u, v)); };
    for (int F = 0; F < n1; ++F) {
        int sidx = group_assignment(P, A, F, f.vars);
        auto S = sequence_of(sidx, beta);
        for (int l = 0; l < beta; ++l) {
            int s = S[l];
            // the two kept vertices of each triple reach the root
            if (s == 3 || s == 1) {
                int j = s == 3 ? 0 : 1;
                for (int b = 0; b < a1; ++b) {
                    int h = M.h[F][b][l][j];
                    add(h, M.v[F][b][l][j]), add(h, M.v[F][b][l][j + 1]), add(h, M.root);
                }
            } else {
                for (int b = 0; b + 1 < a1; ++b) {
                    int q = M.q[F][b][l];
                    add(q, M.v[F][b][l][2]), add(q, M.v[F][b + 1][l][0]), add(q, M.root);
                }
                add(M.root, M.v[F][0][l][0]);
                add(M.w[F][l], M.v[F][a1 - 1][l][2]), add(M.w[F][l], M.root);
            }
            for (int b = 0; b < a1; ++b) {
                auto& g = M.guard[F][b][l];
                auto& v = M.v[F][b][l];
                // guard j sees two of the triple; pick one that is kept
                static const int nb[3][2] = {{0, 1}, {0, 2}, {1, 2}};
                for (int j = 0; j < 3; ++j) add(g[j], v[nb[j][0]] != v[s - 1] ? v[nb[j][0]] : v[nb[j][1]]);
            }
            for (int b = 0; b + 1 < a1; ++b)
                add(M.p[F][b][l], s != 3 ? M.v[F][b][l][2] : M.v[F][b + 1][l][0]);
        }
        for (int b = 0; b < a1; ++b)
            for (int s0 = 0; s0 < S3; ++s0) {
                if (s0 == sidx) {
                    add(M.x[F][b][s0], M.xp[F][b][s0]), add(M.xp[F][b][s0], M.root);
                    continue;
                }
                auto T = sequence_of(s0, beta);
                int l = 0;
                while (T[l] == S[l]) ++l;
                add(M.x[F][b][s0], M.v[F][b][l][T[l] - 1]);
            }
    }
    for (int C = 0; C < P.clauses; ++C)
        for (int j = 0; j < cols; ++j) {
            int b = P.clauses * j + C, F = 0;
            while (!group_satisfies(P, f.clauses[C], F, group_assignment(P, A, F, f.vars))) ++F;
            add(M.c[C][j], M.xp[F][b][group_assignment(P, A, F, f.vars)]);
        }
    if (edge_weight_sum(inst, E0) != inst.K) throw std::logic_error("witness weight differs from K");
    if (!is_steiner_tree(inst.g, inst.terminals, E0)) throw std::logic_error("witness is not a Steiner tree");
    return inst;
}

// Sweep the columns left to right. Each bag holds the root, the current
// clause checker, the entry triples of every row, one whole gadget, its
// outgoing links and the next entry vertices.
PathDecomposition gen_path_decomposition(const HardInstance& inst) {
    const auto& P = inst.params;
    const auto& M = inst.map;
    const int n1 = P.groups, a1 = P.columns, beta = P.beta;
    PathDecomposition pd;
    // entry[F] = column whose entry vertices row F currently holds
    std::vector<int> entry(n1, 0);
    for (int b = 0; b < a1; ++b) {
        int c = M.c[b % P.clauses][b / P.clauses];
        for (int F = 0; F < n1; ++F) {
            std::vector<int> bag{M.root, c};
            for (int G = 0; G < n1; ++G)
                if (G != F)
                    for (int l = 0; l < beta; ++l) bag.push_back(M.v[G][entry[G]][l][0]);
            for (int l = 0; l < beta; ++l) {
                for (int j = 0; j < 3; ++j) bag.push_back(M.v[F][b][l][j]), bag.push_back(M.guard[F][b][l][j]);
                for (int j = 0; j < 2; ++j) bag.push_back(M.h[F][b][l][j]);
                if (b + 1 < a1) {
                    bag.push_back(M.p[F][b][l]), bag.push_back(M.q[F][b][l]);
                    bag.push_back(M.v[F][b + 1][l][0]);
                } else {
                    bag.push_back(M.w[F][l]);
                }
            }
            for (size_t s = 0; s < M.x[F][b].size(); ++s) bag.push_back(M.x[F][b][s]), bag.push_back(M.xp[F][b][s]);
            std::sort(bag.begin(), bag.end());
            pd.bags.push_back(std::move(bag));
            entry[F] = std::min(b + 1, a1 - 1);
        }
    }
    return pd;
}

bool is_steiner_tree(const UndirectedGraph& g, const std::vector<int>& terminals, const std::vector<int>& edge_ids) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> touched(g.n, 0);
    auto ids = edge_ids;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
    for (int e : ids) {
        if (e < 0 || e >= g.m()) return false;
        auto [u, v] = g.edges[e];
        int a = find(u), b = find(v);
        if (a == b) return false;  // cycle
        parent[a] = b;
        touched[u] = touched[v] = 1;
    }
    if (terminals.empty()) return true;
    if (terminals.size() == 1) return ids.empty() || touched[terminals[0]];
    int r = find(terminals[0]);
    for (int t : terminals)
        if (!touched[t] || find(t) != r) return false;
    // every used vertex in the same component
    for (int u = 0; u < g.n; ++u)
        if (touched[u] && find(u) != r) return false;
    return true;
}

int64_t edge_weight_sum(const HardInstance& inst, const std::vector<int>& edge_ids) {
    __int128 s = 0;
    for (int e : edge_ids) s += inst.weight.at(e);
    return checked(s);
}

int64_t subdivided_size(const HardInstance& inst) {
    __int128 s = inst.g.n;
    for (auto c : inst.weight) s += c - 1;
    return s > std::numeric_limits<int64_t>::max() ? std::numeric_limits<int64_t>::max() : static_cast<int64_t>(s);
}

UnweightedInstance to_unweighted(const HardInstance& inst) {
    UnweightedInstance out;
    auto sub = subdivide_weighted(inst.g, inst.weight);  // size guard lives here
    out.g = std::move(sub.graph);
    out.terminals = inst.terminals;
    out.K_edges = inst.K;
    out.pd = pd_after_subdivision(inst.pd, inst.g, inst.weight);
    return out;
}

std::string hard_instance_json(const HardInstance& inst) {
    using nlohmann::json;
    const auto& P = inst.params;
    const auto& M = inst.map;
    json j;
    j["beta"] = P.beta;
    j["beta_vars"] = P.beta_vars;
    j["groups"] = P.groups;
    j["clauses"] = P.clauses;
    j["columns"] = P.columns;
    j["N"] = P.N;
    j["a"] = std::vector<int64_t>(P.a + 1, P.a + 7);
    j["K"] = inst.K;
    j["width"] = inst.pd.width();
    j["width_bound"] = width_bound(P);
    j["terminals"] = inst.terminals;
    j["weights"] = inst.weight;
    if (!inst.witness.empty()) j["witness"] = inst.witness;
    json map;
    map["root"] = M.root;
    map["v"] = M.v;
    map["guard"] = M.guard;
    map["h"] = M.h;
    map["x"] = M.x;
    map["x_prime"] = M.xp;
    map["p"] = M.p;
    map["q"] = M.q;
    map["w"] = M.w;
    map["c"] = M.c;
    j["map"] = map;
    return j.dump(1);
}

}  // namespace cutcount
