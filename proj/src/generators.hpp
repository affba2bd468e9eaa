#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "common.hpp"
#include "graph.hpp"
#include "xor_system.hpp"

namespace gapkit {

// Rows are equations, columns variables; every row hits exactly 3 columns.
struct BipartiteIncidence {
    int n = 0;
    std::vector<std::array<int, 3>> rows;  // each a sorted 3-subset of [n]
};

// m = r*n rows, each drawn uniformly and independently among 3-subsets
// (three distinct indices by rejection, then sorted).
BipartiteIncidence random_incidence(int n, int r, uint64_t seed);

struct ExpansionCheck {
    bool pass = true;
    std::vector<int> witness;      // first failing row set in size-then-lex order
    uint64_t subsets_checked = 0;
};

// Pass iff every row set T with |T| <= s_max has at least beta*|T| columns
// hit exactly once. Exhaustive; refuses when the subset count exceeds budget.
ExpansionCheck check_unique_neighbour_expansion(const BipartiteIncidence& inc, int s_max,
                                                const Rational& beta,
                                                uint64_t max_subsets = uint64_t(1) << 24);

std::vector<uint8_t> rhs_random(int m, uint64_t seed);

XorSystem system_from_incidence(const BipartiteIncidence& inc, const std::vector<uint8_t>& b);

struct ExpanderResult {
    BipartiteIncidence inc;
    int attempts = 0;
};

// Rejection loop: sample random_incidence from one seeded stream until the
// expansion check passes.
ExpanderResult expander_incidence(int n, int r, int s_max, const Rational& beta, uint64_t seed,
                                  int max_attempts = 64);

struct GapPair {
    XorSystem seed_system;                     // S
    XorSystem hard;                            // G(S)
    XorSystem easy;                            // G(S^0), satisfiable by construction
    Rational epsilon{0};                       // recorded target, no computational role
    int k_check = 0;
    bool k_locally_sat = false;                // certified when k_check > 0 (second encoding)
    std::optional<Rational> opt_hard, opt_easy;  // exact fractions when brute-forced
    uint64_t seed = 0;
};

GapPair gap_pair(int n, int r, const Rational& epsilon, int k_check, uint64_t seed,
                 int brute_cap = 24);

// Configuration-model samples rejected until simple; deterministic per seed.
Graph random_regular_graph(int n, int d, uint64_t seed, int max_attempts = 1000);
Graph random_regular_bipartite(int m, int d, uint64_t seed, int max_attempts = 1000);

}  // namespace gapkit
