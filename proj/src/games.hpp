#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rel_structure.hpp"
#include "xor_system.hpp"

namespace gapkit {

enum class Winner { Spoiler, Duplicator };

using PebblePair = std::pair<int, int>;   // (element of A, element of B)
using Position = std::vector<PebblePair>; // sorted by left element, lefts distinct

// One deletion step of the greatest-fixpoint computation. The record index in
// GameResult::deaths is the deletion rank; every justification points only at
// strictly earlier ranks, so replaying the records always terminates.
struct DeadRecord {
    Position pos;
    int removal;  // index of the removed pair, or pos.size() when a spare pebble moves
    int element;  // existential game: Spoiler's element of A; -1 in the bijective game
};

struct GameResult {
    Winner winner = Winner::Duplicator;
    uint64_t live_positions = 0;
    uint64_t total_positions = 0;
    bool size_mismatch = false;  // bijective game on unequal universes
    std::vector<DeadRecord> deaths;
};

// Duplicator wins iff A maps to B under the k-pebble partial-homomorphism
// preorder. Positions are partial homomorphisms with at most k pebbles.
GameResult existential_game(const RelStructure& A, const RelStructure& B, int k,
                            uint64_t max_positions = uint64_t(1) << 20);

// Duplicator wins iff A and B agree in k-variable counting logic. Positions
// are partial isomorphisms; survival per removal needs a perfect matching of
// safe responses.
GameResult bijective_game(const RelStructure& A, const RelStructure& B, int k,
                          uint64_t max_positions = uint64_t(1) << 20);

// Audits a result's deletion records from scratch, independently of the
// solver's fixpoint order. True iff every record justifies its deletion and
// the verdict matches the fate of the empty position.
bool replay_certificate(const RelStructure& A, const RelStructure& B, int k,
                        const GameResult& result, bool bijective,
                        uint64_t max_positions = uint64_t(1) << 20);

struct RefinementResult {
    std::vector<std::vector<int>> classes;  // stable classes, ordered by least vertex
    std::vector<std::vector<int>> delta;    // delta[i][j]: neighbours in class j of a class-i vertex
};

RefinementResult color_refinement(const Graph& g);

// Runs refinement on the disjoint union and compares per-class side counts.
bool c2_equivalent(const Graph& g, const Graph& h);

// k-dimensional Weisfeiler-Leman over k-tuples of the two structures, refined
// jointly; equivalence of the stable color multisets. Matches the bijective
// (k+1)-pebble game. Supports k <= 3 (atomic types are packed into words).
bool wl_equivalent(const RelStructure& A, const RelStructure& B, int k,
                   uint64_t max_tuples = uint64_t(1) << 20);
bool wl_equivalent(const Graph& g, const Graph& h, int k,
                   uint64_t max_tuples = uint64_t(1) << 20);

// Existential game of the encoded instance against the encoded language.
bool k_locally_satisfiable(const XorSystem& sys, int k, Encoding enc,
                           uint64_t max_positions = uint64_t(1) << 20);
bool k_locally_satisfiable(const CnfSystem& sys, int k, Encoding enc,
                           uint64_t max_positions = uint64_t(1) << 20);

}  // namespace gapkit
