#include <doctest.h>

#include "long_code.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gapkit;

namespace {

LabelCover toy_projection() {
    // two left vertices against one right bit, p = 4, q = 2
    LabelCover lc(2, 1, 4, 2);
    lc.add_entry(0, 0, 1, {{0, 0}, {1, 1}, {2, 1}, {3, 0}});
    lc.add_entry(1, 0, 1, {{0, 1}, {1, 0}, {2, 0}, {3, 1}});
    return lc;
}

}  // namespace

TEST_CASE("folding pairs complementary tables") {
    for (int d = 1; d <= 4; ++d) {
        uint64_t full = (uint64_t(1) << d) - 1;
        for (uint64_t z = 0; z <= full; ++z) {
            Folded a = fold(z, d);
            Folded b = fold(z ^ full, d);
            CHECK(a.f == b.f);
            CHECK(a.s != b.s);
            CHECK(a.f < (uint64_t(1) << (d - 1)));
        }
    }
    // the last coordinate is the sign: fold of z with top bit clear is (z, 0)
    CHECK(fold(0b0101, 4).f == 0b0101);
    CHECK(fold(0b0101, 4).s == 0);
    CHECK(fold(0b1101, 4).f == 0b0010);
    CHECK(fold(0b1101, 4).s == 1);
}

TEST_CASE("long-code variable layout and names") {
    LongCodeVars vars = longcode_vars(toy_projection());
    CHECK(vars.u_block() == 8);
    CHECK(vars.v_block() == 2);
    CHECK(vars.count() == 2 * 8 + 1 * 2);
    CHECK(vars.u_var(1, 3) == 11);
    CHECK(vars.v_var(0, 1) == 17);
    // bits print first coordinate first
    CHECK(vars.name(vars.u_var(0, 0b101)) == "u0:101");
    CHECK(vars.name(vars.v_var(0, 1)) == "v0:1");
}

TEST_CASE("parity test stats account for the full distribution") {
    LabelCover lc = toy_projection();
    LongCodeStats stats;
    XorSystem sys = longcode_xor(lc, Rational(1, 4), &stats);
    CHECK(sys.nvars() == 18);

    // per (x, y) the z-weights sum to M^p, so one entry carries mass
    // 2^q * 2^p * M^p * M^q
    uint64_t per_entry_mass = 4 * 16 * 256 * 16;
    REQUIRE(stats.per_entry.size() == 2);
    uint64_t residue = residue_weight(stats);
    uint64_t emitted = 0, dropped = 0;
    for (const auto& e : stats.per_entry) {
        CHECK(e.emitted + e.dropped == per_entry_mass);
        emitted += e.emitted;
        dropped += e.dropped;
    }
    CHECK(emitted == sys.total_weight());
    CHECK(dropped == stats.dropped_repeated);
    CHECK(dropped == residue);
    CHECK(stats.dropped_tautology == 0);
    CHECK(stats.cnf_residue.empty());

    // residues live on v-variables only: collapsed u-lookups leave v(F(x)) = rhs
    for (const auto& r : stats.xor_residue) CHECK(r.var >= 16);
}

TEST_CASE("full distribution optimum is 1 - epsilon on a satisfiable game") {
    // the emitted system alone tops out below the dictator value; adding the
    // residue back restores exactly (1 - epsilon) of the total mass
    LabelCover lc(2, 1, 2, 2);
    lc.add_entry(0, 0, 1, {{0, 0}, {1, 1}});
    lc.add_entry(1, 0, 1, {{0, 1}, {1, 0}});
    LongCodeStats stats;
    XorSystem sys = longcode_xor(lc, Rational(1, 4), &stats);
    REQUIRE(sys.nvars() == 6);

    uint64_t mass = 0;
    for (const auto& e : stats.per_entry) mass += e.emitted + e.dropped;
    uint64_t best = 0;
    for (uint64_t a = 0; a < 64; ++a) {
        std::vector<uint8_t> x(6);
        for (int v = 0; v < 6; ++v) x[size_t(v)] = uint8_t((a >> v) & 1);
        best = std::max(best, sat_weight(sys, x) + residue_satisfied(stats, x));
    }
    CHECK(Rational(int64_t(best), int64_t(mass)) == Rational(3, 4));
    CHECK(max_xor(sys).value < sys.total_weight());
}

TEST_CASE("clause test drops tautologies and repeats") {
    LabelCover lc = toy_projection();
    LongCodeStats stats;
    CnfSystem sys = longcode_sat_single(lc, Rational(1, 4), &stats);
    CHECK(sys.nvars() == 18);
    CHECK(sys.total_weight() > 0);
    uint64_t mass = 0;
    for (const auto& e : stats.per_entry) mass += e.emitted + e.dropped;
    CHECK(sys.total_weight() + stats.dropped_repeated + stats.dropped_tautology == mass);
    CHECK(residue_weight(stats) == stats.dropped_repeated + stats.dropped_tautology);

    // epsilon = 1 collapses everything
    LongCodeStats all;
    CnfSystem empty = longcode_sat_single(lc, Rational(1), &all);
    CHECK(empty.size() == 0);
    CHECK(all.dropped_repeated + all.dropped_tautology > 0);
}

TEST_CASE("clause residue counts tautology mass as satisfied") {
    LabelCover lc = toy_projection();
    LongCodeStats stats;
    longcode_sat_single(lc, Rational(1, 2), &stats);
    std::vector<uint8_t> zero(18, 0);
    CHECK(residue_satisfied(stats, zero) >= stats.dropped_tautology);
    uint64_t two_lit = 0;
    for (const auto& r : stats.cnf_residue) two_lit += r.weight;
    CHECK(stats.dropped_repeated == two_lit);
}

TEST_CASE("epsilon schedule shapes") {
    auto sched = sat_epsilon_schedule(Rational(1, 2));
    REQUIRE(sched.size() == 2);
    CHECK(sched[0].delta_pow == 1);
    CHECK(sched[0].two_pow == 0);
    CHECK(sched[1].delta_pow == 72);
    CHECK(sched[1].two_pow == 35);
    CHECK(eps_term_value(sched[0], Rational(1, 2)) == Rational(1, 2));
    // delta^72 / 2^35 = 2^-107: materializes past 64 bits
    CHECK_THROWS_AS(eps_term_value(sched[1], Rational(1, 2)), BudgetError);
    CHECK(sat_epsilon_schedule(Rational(1)).size() == 1);
    CHECK_THROWS_AS(sat_epsilon_schedule(Rational(0)), InvalidArgument);
}

TEST_CASE("layered clause test at delta = 1") {
    // single layer at epsilon = 1: every clause collapses, output empty
    LabelCover lc = toy_projection();
    LongCodeStats stats;
    CnfSystem sys = longcode_sat(lc, Rational(1), &stats);
    CHECK(sys.size() == 0);
    CHECK(residue_weight(stats) > 0);
    // delta = 1/2 needs 2^-107 exactly, impossible in 64 bits
    CHECK_THROWS_AS(longcode_sat(lc, Rational(1, 2)), BudgetError);
}

TEST_CASE("long-code budgets refuse oversized games") {
    LabelCover big(1, 1, 12, 2);
    std::vector<std::pair<int, int>> acc;
    for (int a = 0; a < 1 << 12; ++a) acc.push_back({a, a & 1});
    big.add_entry(0, 0, 1, acc);
    LongCodeBudget tiny;
    tiny.max_work = 1000;
    CHECK_THROWS_AS(longcode_xor(big, Rational(1, 4), nullptr, tiny), BudgetError);
    CHECK_THROWS_AS(longcode_xor(toy_projection(), Rational(2)), InvalidArgument);
    CHECK_THROWS_AS(longcode_sat_single(toy_projection(), Rational(3, 2)), InvalidArgument);
}
