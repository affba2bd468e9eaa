#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"
#include "label_cover.hpp"
#include "xor_system.hpp"

namespace gapkit {

// Folding of a d-bit table index. Bit i-1 of the word holds coordinate i.
// s is the last coordinate; f is the first d-1 coordinates, complemented
// when s = 1, so that fold(z) and fold(~z) share the same f.
struct Folded {
    uint64_t f;
    uint8_t s;
};

Folded fold(uint64_t z, int d);

// Layout of the folded long-code variables built from a label cover game
// with left/right label counts p and q: one block of 2^(p-1) variables per
// left vertex, then one block of 2^(q-1) per right vertex.
struct LongCodeVars {
    int m = 0;
    int n = 0;
    int p = 0;
    int q = 0;

    uint64_t u_block() const { return uint64_t(1) << (p - 1); }
    uint64_t v_block() const { return uint64_t(1) << (q - 1); }
    uint64_t u_var(int u, uint64_t alpha) const { return uint64_t(u) * u_block() + alpha; }
    uint64_t v_var(int v, uint64_t beta) const {
        return uint64_t(m) * u_block() + uint64_t(v) * v_block() + beta;
    }
    uint64_t count() const { return uint64_t(m) * u_block() + uint64_t(n) * v_block(); }

    // "u3:0101" or "v0:1"; table-index bits printed first coordinate first.
    std::string name(uint64_t var) const;
};

LongCodeVars longcode_vars(const LabelCover& lc);

struct LongCodeEntryStats {
    uint64_t emitted = 0;  // multiplicity that reached the output
    uint64_t dropped = 0;  // multiplicity lost to collapsed table indices
};

// Collapsed parity: the two u-lookups cancel, leaving var = rhs.
struct XorResidue {
    int var;
    uint8_t rhs;
    uint64_t weight;
};

// Collapsed clause with a repeated literal, leaving a two-literal clause.
struct CnfResidue {
    Literal a, b;
    uint64_t weight;
};

// Books the mass that cannot live in a three-distinct-variable system. The
// test distribution assigns positive weight to choices whose equation or
// clause collapses onto fewer variables; those are recorded here so exact
// satisfaction accounting over the whole distribution stays possible.
struct LongCodeStats {
    std::vector<LongCodeEntryStats> per_entry;  // one per game entry, in order
    uint64_t dropped_repeated = 0;   // both long-code lookups hit the same variable
    uint64_t dropped_tautology = 0;  // same variable with complementary signs (sat only)
    std::vector<XorResidue> xor_residue;  // consolidated, sorted by (var, rhs)
    std::vector<CnfResidue> cnf_residue;  // consolidated, sorted by literals
};

// Satisfied weight of the recorded residue under a total assignment. For the
// clause side the tautology mass counts as always satisfied.
uint64_t residue_weight(const LongCodeStats& stats);
uint64_t residue_satisfied(const LongCodeStats& stats, const std::vector<uint8_t>& f);

struct LongCodeBudget {
    uint64_t max_vars = uint64_t(1) << 20;
    uint64_t max_work = uint64_t(1) << 26;  // enumerated (x, y, z) triples
};

// Parity test over the folded tables: for every entry (u, v, w, pi) and all
// x in 2^q, y, z in 2^p, the equation
//   v(F(x)) + u(F(y)) + u(F(z)) = S(x) + S(y) + S(z)
// with multiplicity w * N^D * (M-N)^(p-D) * M^q, where epsilon = N/M in
// lowest terms and D = #{i : z_i != x_{pi(i)} + y_i}. Pairs whose two
// u-lookups collapse to one variable (F(y) = F(z)) are dropped and recorded.
// Requires a projection game and 0 < epsilon < 1.
XorSystem longcode_xor(const LabelCover& lc, const Rational& epsilon,
                       LongCodeStats* stats = nullptr, const LongCodeBudget& budget = {});

// Clause test: for every entry and all x, y, z with z_i != y_i forced
// wherever x_{pi(i)} = 0, the clause
//   { v(F(x))^(S(x)), u(F(y))^(S(y)), u(F(z))^(S(z)) }
// with multiplicity w * N^D * (M-N)^(E-D) * M^(p-E), where E counts the
// positions with x_{pi(i)} = 1 and D those among them with z_i != y_i.
// Collapsed clauses are dropped: repeated literal when S(y) = S(z), and a
// tautology otherwise. Requires a projection game and 0 < epsilon <= 1
// (epsilon = 1 leaves every clause collapsed, so the output is empty).
CnfSystem longcode_sat_single(const LabelCover& lc, const Rational& epsilon,
                              LongCodeStats* stats = nullptr, const LongCodeBudget& budget = {});

// Epsilon schedule eps_i = delta^(71(i-1)+1) / 2^(35(i-1)) for i = 1..t,
// t = ceil(1/delta), kept as exponents so the schedule itself never
// overflows; materializing a term can.
struct EpsTerm {
    uint64_t delta_pow;
    uint64_t two_pow;
};

std::vector<EpsTerm> sat_epsilon_schedule(const Rational& delta);

// Exact value of a schedule term. Throws BudgetError when the numerator or
// denominator leaves the 64-bit range.
Rational eps_term_value(const EpsTerm& term, const Rational& delta);

// Union of the clause tests over the whole epsilon schedule, consolidated
// into one system. Refuses (BudgetError) when any term of the schedule
// cannot be materialized exactly; delta in (0, 1].
CnfSystem longcode_sat(const LabelCover& lc, const Rational& delta,
                       LongCodeStats* stats = nullptr, const LongCodeBudget& budget = {});

}  // namespace gapkit
