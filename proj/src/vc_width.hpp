#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"
#include "games.hpp"
#include "graph.hpp"

namespace gapkit {

// Refinement-based vertex cover estimate. Classes with internal edges
// (delta_ii > 0) are taken whole and contribute q; the remaining classes X
// form a quotient graph (edge when delta_ij > 0) weighted by class size,
// whose exact minimum weighted cover contributes p. v = p + q satisfies
// vc(G) <= v <= 2 vc(G) and is invariant under C^2-equivalence.
struct VGReport {
    RefinementResult refinement;
    std::vector<int> x;            // classes with delta_ii == 0, ascending
    std::vector<int> y;            // classes with delta_ii > 0, ascending
    Graph quotient;                // vertex i = class x[i], weight = class size
    std::vector<int> p_witness;    // classes (members of x) forming the optimal quotient cover
    uint64_t p = 0, q = 0, v = 0;  // v = p + q
};

VGReport v_invariant(const Graph& g, int cap = 32);

// A C^2-equivalent pair with different cover numbers: G random 3-regular on
// 2m vertices resampled until vc(G) > m, H random 3-regular bipartite with
// parts of size m (vc(H) = m).
struct GapWitness {
    Graph g;
    Graph h;
    uint64_t vc_g = 0;
    uint64_t vc_h = 0;
    VGReport report_g;
    VGReport report_h;
    bool equivalent = false;  // c2_equivalent(g, h)
    int attempts = 0;         // resamples of g until the cover gate passed
};

GapWitness c2_gap_witness(int m, uint64_t seed, int max_attempts = 256);

}  // namespace gapkit
