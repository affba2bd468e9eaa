#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "xor_system.hpp"

namespace gapkit {

// One weighted constraint of a label cover: accepted (a,b) label pairs for the
// pair (u,v), sorted. Entries exist only where the weight is positive.
struct LcEntry {
    int u, v;
    uint64_t w;
    std::vector<std::pair<uint16_t, uint16_t>> accepted;
};

struct LcFlags {
    bool projection;
    bool unique_game;
    bool left_regular;
    bool right_regular;
    bool uniform_weights;
    friend bool operator==(const LcFlags&, const LcFlags&) = default;
};

class LabelCover {
  public:
    LabelCover() = default;
    LabelCover(int m, int n, int p, int q);

    void add_entry(int u, int v, uint64_t w, std::vector<std::pair<int, int>> accepted);

    int m() const { return m_; }
    int n() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    const std::vector<LcEntry>& entries() const { return entries_; }

    uint64_t w0() const;
    LcFlags flags() const;

    // Projection view of one entry: a -> the unique accepted b.
    std::vector<uint16_t> projection_map(const LcEntry& e) const;

    bool accepts(const LcEntry& e, int a, int b) const;

    friend bool operator==(const LabelCover&, const LabelCover&) = default;

  private:
    int m_ = 0, n_ = 0, p_ = 0, q_ = 0;
    std::vector<LcEntry> entries_;  // sorted by (u,v), unique
};

// Exact value of the assignment pair (f: U->A, g: V->B); errors when w0 is zero.
Rational lc_value(const LabelCover& lc, const std::vector<int>& f, const std::vector<int>& g);

// U = consolidated equations (weight = multiplicity), V = variables, A = the
// four even-weight triples in the order 000,011,101,110, B = F2; the map for
// the i-th variable of an equation with right-hand side b sends a to a_i + b.
LabelCover bipartite_reduction(const XorSystem& sys);

struct RepetitionBudget {
    uint64_t max_entries = 1u << 20;
    uint64_t max_labels = 1u << 20;
    uint64_t max_pairs = 1u << 22;
};

// t-fold product; coordinate 0 is the most significant digit of every index.
LabelCover parallel_repetition(const LabelCover& lc, int t, RepetitionBudget budget = {});

LabelCover parse_labelcover_json(const std::string& text);
std::string write_labelcover_json(const LabelCover& lc);

}  // namespace gapkit
