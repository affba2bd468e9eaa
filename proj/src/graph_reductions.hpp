#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"
#include "graph.hpp"
#include "label_cover.hpp"
#include "long_code.hpp"
#include "xor_system.hpp"

namespace gapkit {

// FGLSS graph of a parity system. Multiplicities are expanded into copies;
// every copy contributes one vertex per satisfying assignment of its
// equation, and two vertices conflict (get an edge) when they assign some
// shared variable differently. Each copy's four vertices form a clique, so
// the graph is co-partite with psize 4; with m copies in total, the minimum
// vertex cover is 4m minus the maximum satisfied weight. Labels record the
// provenance of every vertex.
Graph fglss(const XorSystem& sys, uint64_t max_vertices = uint64_t(1) << 12);

// Conflict graph of a projection game: vertices are (left vertex, label)
// pairs, every left block is a clique, and two labels in different blocks
// conflict when some common right vertex receives two different projected
// values. Co-partite with psize = p; a satisfiable game has independence
// number m.
Graph labelcover_to_graph(const LabelCover& lc, uint64_t max_vertices = uint64_t(1) << 16);

struct DsBudget {
    uint64_t max_vertices = uint64_t(1) << 20;
    uint64_t max_edges = uint64_t(1) << 24;
};

// Block-test graph over an input carrying a co-partite certificate with part
// size r. Blocks are the l-subsets of V(G) for l = 2*l1*r; the family F(B)
// holds the subsets of B of size at least l1, Q = |F(B)|. A vertex is a pair
// (B, S) with S a subfamily of F(B), weighted N^|S| (M-N)^(Q-|S|) for bias
// N/M. Within a block, disjoint subfamilies conflict. Across two blocks
// B1 = C + v1, B2 = C + v2 with {v1,v2} an edge of G, (B1,S1) and (B2,S2)
// conflict when no A1 in S1 and A2 in S2 agree on C without containing v1
// and v2 respectively.
Graph dinur_safra(const Graph& g, const Rational& bias, int l1, const DsBudget& budget = {});

// Double-enumeration audit of the block-test vertex set: every ordered
// l-tuple of distinct vertices of G paired with every subfamily, mapped to
// its canonical representative (sorted tuple, subfamily relabeled along the
// sorting permutation). The classes must partition the pairs into groups of
// size l!, one per vertex of dinur_safra(g, ., l1).
struct DsCensus {
    uint64_t pairs = 0;       // ordered (tuple, subfamily) pairs enumerated
    uint64_t classes = 0;     // distinct canonical representatives
    uint64_t class_size = 0;  // l!
    bool uniform = false;     // every class had exactly class_size members
};
DsCensus dinur_safra_census(const Graph& g, int l1, uint64_t max_pairs = uint64_t(1) << 22);

// Expand positive vertex weights into unit-weight copies. Copies of one
// vertex are pairwise non-adjacent and inherit all original edges, which
// preserves the (weighted) vertex cover number exactly.
Graph unweight(const Graph& g, uint64_t max_vertices = uint64_t(1) << 20,
               uint64_t max_edges = uint64_t(1) << 24);

// Composed reductions. Every stage failure is reported with the stage name;
// intermediate objects are kept for inspection.
struct PipelineXor {
    LabelCover bipartite;
    LabelCover repeated;
    XorSystem system;
    LongCodeStats stats;
};
PipelineXor pipeline_xor(const XorSystem& sys, int t, const Rational& epsilon,
                         const LongCodeBudget& budget = {}, const RepetitionBudget& rb = {});

struct PipelineSat {
    LabelCover bipartite;
    LabelCover repeated;
    CnfSystem system;
    LongCodeStats stats;
};
// Layered form: clause tests for the whole epsilon schedule of delta.
PipelineSat pipeline_sat(const XorSystem& sys, int t, const Rational& delta,
                         const LongCodeBudget& budget = {}, const RepetitionBudget& rb = {});
// Single layer at one explicit epsilon.
PipelineSat pipeline_sat_single(const XorSystem& sys, int t, const Rational& epsilon,
                                const LongCodeBudget& budget = {}, const RepetitionBudget& rb = {});

struct PipelineVc {
    LabelCover bipartite;
    LabelCover repeated;
    Graph conflict;    // labelcover_to_graph of the repeated game
    Graph blocks;      // dinur_safra of the conflict graph
    Graph unweighted;  // unweight of the block graph
};
PipelineVc pipeline_vc(const XorSystem& sys, int t, const Rational& bias, int l1,
                       const DsBudget& budget = {}, const RepetitionBudget& rb = {});

}  // namespace gapkit
