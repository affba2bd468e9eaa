#include "generators.hpp"

#include <algorithm>
#include <string>

#include "gadgets.hpp"
#include "games.hpp"
#include "oracles.hpp"

namespace gapkit {

BipartiteIncidence random_incidence(int n, int r, uint64_t seed) {
    if (n < 3) throw InvalidArgument("random_incidence: need at least 3 columns");
    if (r < 1) throw InvalidArgument("random_incidence: need r >= 1");
    Rng rng(seed);
    BipartiteIncidence inc;
    inc.n = n;
    int m = r * n;
    inc.rows.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::array<int, 3> row;
        for (int j = 0; j < 3; ++j) {
            for (;;) {
                int c = int(rng.below(uint64_t(n)));
                bool dup = false;
                for (int l = 0; l < j; ++l) dup = dup || row[size_t(l)] == c;
                if (!dup) {
                    row[size_t(j)] = c;
                    break;
                }
            }
        }
        std::sort(row.begin(), row.end());
        inc.rows.push_back(row);
    }
    return inc;
}

ExpansionCheck check_unique_neighbour_expansion(const BipartiteIncidence& inc, int s_max,
                                                const Rational& beta, uint64_t max_subsets) {
    int m = int(inc.rows.size());
    if (s_max < 1) throw InvalidArgument("expansion check: s_max must be >= 1");
    uint64_t work = 0;
    for (int s = 1; s <= std::min(s_max, m); ++s)
        work = add_u64(work, binom_u64(uint64_t(m), uint64_t(s)), "expansion subset count");
    if (work > max_subsets)
        throw BudgetError("expansion check: " + std::to_string(work) +
                          " subsets exceed budget " + std::to_string(max_subsets));
    ExpansionCheck res;
    std::vector<int> hits(size_t(inc.n));
    for (int s = 1; s <= std::min(s_max, m); ++s) {
        std::vector<int> T(s);
        for (int i = 0; i < s; ++i) T[size_t(i)] = i;
        for (;;) {
            ++res.subsets_checked;
            std::fill(hits.begin(), hits.end(), 0);
            for (int row : T)
                for (int c : inc.rows[size_t(row)]) ++hits[size_t(c)];
            int boundary = 0;
            for (int h : hits) boundary += h == 1;
            if (Rational(boundary) < beta * Rational(s)) {
                res.pass = false;
                res.witness = T;
                return res;
            }
            // next s-combination in lexicographic order
            int i = s - 1;
            while (i >= 0 && T[size_t(i)] == m - s + i) --i;
            if (i < 0) break;
            ++T[size_t(i)];
            for (int j = i + 1; j < s; ++j) T[size_t(j)] = T[size_t(j) - 1] + 1;
        }
    }
    return res;
}

std::vector<uint8_t> rhs_random(int m, uint64_t seed) {
    if (m < 0) throw InvalidArgument("rhs_random: negative length");
    Rng rng(seed);
    std::vector<uint8_t> b(m);
    for (int i = 0; i < m; ++i) b[size_t(i)] = uint8_t(rng.bit());
    return b;
}

XorSystem system_from_incidence(const BipartiteIncidence& inc, const std::vector<uint8_t>& b) {
    if (b.size() != inc.rows.size())
        throw InvalidArgument("system_from_incidence: rhs length mismatch");
    XorSystem sys(inc.n);
    for (size_t i = 0; i < inc.rows.size(); ++i) {
        const auto& row = inc.rows[i];
        sys.add(row[0], row[1], row[2], b[i] & 1, 1);
    }
    return sys;
}

ExpanderResult expander_incidence(int n, int r, int s_max, const Rational& beta, uint64_t seed,
                                  int max_attempts) {
    Rng rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        // one stream: each attempt consumes a fresh sub-seed
        BipartiteIncidence inc = random_incidence(n, r, rng.next());
        ExpansionCheck chk = check_unique_neighbour_expansion(inc, s_max, beta);
        if (chk.pass) return {std::move(inc), attempt};
    }
    throw BudgetError("expander_incidence: no expander found in " +
                      std::to_string(max_attempts) + " attempts");
}

GapPair gap_pair(int n, int r, const Rational& epsilon, int k_check, uint64_t seed,
                 int brute_cap) {
    Rng rng(seed);
    BipartiteIncidence inc = random_incidence(n, r, rng.next());
    std::vector<uint8_t> b = rhs_random(r * n, rng.next());
    GapPair gp;
    gp.seed = seed;
    gp.epsilon = epsilon;
    gp.k_check = k_check;
    gp.seed_system = system_from_incidence(inc, b);
    gp.hard = gadget(gp.seed_system).first;
    gp.easy = gadget(homogeneous(gp.seed_system)).first;
    if (!xor_satisfiable(gp.easy)) throw Error("gap_pair: homogeneous gadget not satisfiable");
    if (k_check > 0)
        gp.k_locally_sat = k_locally_satisfiable(gp.seed_system, k_check, Encoding::Second);
    if (gp.hard.nvars() <= brute_cap) {
        gp.opt_hard = max_xor(gp.hard, brute_cap).fraction;
        gp.opt_easy = max_xor(gp.easy, brute_cap).fraction;
    }
    return gp;
}

namespace {

// Pair up stubs by a uniform shuffle; stub i belongs to vertex i / d.
std::optional<Graph> config_sample(int n, int d, Rng& rng) {
    std::vector<int> stubs(size_t(n) * size_t(d));
    for (size_t i = 0; i < stubs.size(); ++i) stubs[i] = int(i) / d;
    rng.shuffle(stubs);
    Graph g(n);
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v || g.has_edge(u, v)) return std::nullopt;
        g.add_edge(u, v);
    }
    return g;
}

std::optional<Graph> config_sample_bipartite(int m, int d, Rng& rng) {
    std::vector<int> right(size_t(m) * size_t(d));
    for (size_t i = 0; i < right.size(); ++i) right[i] = int(i) / d;
    rng.shuffle(right);
    Graph g(2 * m);
    for (size_t i = 0; i < right.size(); ++i) {
        int u = int(i) / d, v = m + right[i];
        if (g.has_edge(u, v)) return std::nullopt;
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace

Graph random_regular_graph(int n, int d, uint64_t seed, int max_attempts) {
    if (n <= 0 || d < 0 || d >= n) throw InvalidArgument("random_regular_graph: need 0 <= d < n");
    if ((int64_t(n) * d) % 2 != 0) throw InvalidArgument("random_regular_graph: n*d must be even");
    Rng rng(seed);
    for (int a = 0; a < max_attempts; ++a)
        if (auto g = config_sample(n, d, rng)) return *g;
    throw BudgetError("random_regular_graph: rejection budget exhausted");
}

Graph random_regular_bipartite(int m, int d, uint64_t seed, int max_attempts) {
    if (m <= 0 || d < 0 || d > m)
        throw InvalidArgument("random_regular_bipartite: need 0 <= d <= m");
    Rng rng(seed);
    for (int a = 0; a < max_attempts; ++a)
        if (auto g = config_sample_bipartite(m, d, rng)) return *g;
    throw BudgetError("random_regular_bipartite: rejection budget exhausted");
}

}  // namespace gapkit
