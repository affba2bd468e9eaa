#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "common.hpp"
#include "graph.hpp"
#include "label_cover.hpp"
#include "xor_system.hpp"

namespace gapkit {

struct OptResult {
    uint64_t value = 0;
    uint64_t total = 0;
    Rational fraction{1};              // value/total, 1/1 when total == 0
    uint64_t explored = 0;             // assignments scanned or search nodes visited
    std::vector<uint8_t> assignment;   // assignment searches
    std::vector<int> vertices;         // vertex-set searches, sorted
};

// Exhaustive 2^n searches. Witness: lexicographically least optimal assignment
// over (x_0..x_{n-1}). jobs > 1 splits the range into contiguous chunks whose
// merge order is fixed, so results never depend on the worker count.
OptResult max_xor(const XorSystem& sys, int cap = 24, int jobs = 1);
OptResult max_cnf(const CnfSystem& sys, int cap = 24, int jobs = 1);

// F2 elimination; the witness sets all free variables to 0.
std::optional<std::vector<uint8_t>> xor_solve(const XorSystem& sys);
bool xor_satisfiable(const XorSystem& sys);

struct LcOpt {
    Rational value{1};
    std::vector<int> f, g;
};
// Enumerates all p^m left assignments (each right label is then optimized
// independently, which is exact). Witness is the lexicographically least pair.
LcOpt labelcover_opt(const LabelCover& lc, uint64_t cap = uint64_t(1) << 22);

// Weighted exact solvers, branch-and-bound. Witness: lexicographically least
// optimal vertex set compared as a sorted sequence.
OptResult min_vc(const Graph& g, int cap = 32);
OptResult max_is(const Graph& g, int cap = 32);

// Largest-weight set inducing no h-clique; h = 2 coincides with max_is.
OptResult max_hclique_free(const Graph& g, int h, int cap = 24);

// Reference paths for cross-checking the branch-and-bound results.
OptResult min_vc_exhaustive(const Graph& g, int cap = 20);
OptResult max_is_exhaustive(const Graph& g, int cap = 20);

}  // namespace gapkit
