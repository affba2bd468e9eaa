#include <doctest.h>

#include "label_cover.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gapkit;

TEST_CASE("label cover bookkeeping") {
    LabelCover lc(2, 2, 2, 2);
    lc.add_entry(0, 0, 2, {{0, 0}, {1, 1}});
    lc.add_entry(1, 1, 2, {{0, 1}, {1, 0}});
    CHECK(lc.w0() == 4);
    LcFlags f = lc.flags();
    CHECK(f.projection);
    CHECK(f.unique_game);
    CHECK(f.uniform_weights);
    CHECK(lc.accepts(lc.entries()[0], 1, 1));
    CHECK(!lc.accepts(lc.entries()[0], 1, 0));
    CHECK(lc.projection_map(lc.entries()[1]) == std::vector<uint16_t>{1, 0});
    CHECK_THROWS_AS(lc.add_entry(0, 0, 1, {{0, 0}}), InvalidArgument);  // duplicate pair
    CHECK_THROWS_AS(lc.add_entry(0, 2, 1, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(lc.add_entry(1, 0, 1, {{0, 5}}), InvalidArgument);
}

TEST_CASE("lc_value counts satisfied weight") {
    LabelCover lc(2, 1, 2, 2);
    lc.add_entry(0, 0, 1, {{0, 0}, {1, 1}});  // wants g = f
    lc.add_entry(1, 0, 1, {{0, 1}, {1, 0}});  // wants g = 1 - f
    CHECK(lc_value(lc, {0, 0}, {0}) == Rational(1, 2));
    CHECK(lc_value(lc, {0, 1}, {0}) == Rational(1));
    CHECK_THROWS_AS(lc_value(lc, {0}, {0}), InvalidArgument);
    CHECK_THROWS_AS(lc_value(LabelCover(1, 1, 2, 2), {0}, {0}), InvalidArgument);  // w0 = 0
}

TEST_CASE("bipartite reduction structure") {
    XorSystem s(4);
    s.add(0, 1, 2, 0, 2);
    s.add(1, 2, 3, 1);
    LabelCover lc = bipartite_reduction(s);
    CHECK(lc.m() == 2);
    CHECK(lc.n() == 4);
    CHECK(lc.p() == 4);
    CHECK(lc.q() == 2);
    CHECK(lc.entries().size() == 6);  // three variables per equation
    CHECK(lc.w0() == 9);              // weights follow multiplicities
    LcFlags f = lc.flags();
    CHECK(f.projection);
    CHECK(!f.unique_game);

    // equation x1+x2+x3 = 1 and its second variable x2: labels are the even
    // triples 000,011,101,110; the map sends a to a_1 + b
    const LcEntry* e = nullptr;
    for (const auto& entry : lc.entries())
        if (entry.u == 1 && entry.v == 2) e = &entry;
    REQUIRE(e);
    CHECK(lc.projection_map(*e) == std::vector<uint16_t>{1, 0, 1, 0});
}

TEST_CASE("bipartite reduction value matches the xor optimum") {
    Rng rng(29);
    for (int it = 0; it < 6; ++it) {
        XorSystem s = random_xor_system(5, 4, rng);
        LabelCover lc = bipartite_reduction(s);
        OptResult base = max_xor(s);
        LcOpt top = labelcover_opt(lc);
        // an optimal assignment violates u-entries on the violated equations
        // only, and each violated equation can still win 2 of 3 variable checks
        uint64_t m = base.total, viol = m - base.value;
        CHECK(top.value == Rational(int64_t(3 * m - viol), int64_t(3 * m)));
    }
}

TEST_CASE("parallel repetition multiplies the structure") {
    LabelCover lc(2, 2, 2, 2);
    lc.add_entry(0, 0, 1, {{0, 0}, {1, 1}});
    lc.add_entry(1, 1, 1, {{0, 1}, {1, 0}});
    LabelCover r = parallel_repetition(lc, 2);
    CHECK(r.m() == 4);
    CHECK(r.n() == 4);
    CHECK(r.p() == 4);
    CHECK(r.q() == 4);
    CHECK(r.entries().size() == 4);
    for (const auto& e : r.entries()) CHECK(e.accepted.size() == 4);
    CHECK(r.flags().projection);
    CHECK(r.flags().unique_game);

    // perfect games stay perfect; the toy contradiction stays 1/2 at t = 2
    LabelCover contra(2, 1, 2, 2);
    contra.add_entry(0, 0, 1, {{0, 0}, {1, 1}});
    contra.add_entry(1, 0, 1, {{0, 1}, {1, 0}});
    CHECK(labelcover_opt(parallel_repetition(contra, 2)).value == Rational(1, 2));
    LabelCover sat(1, 1, 2, 2);
    sat.add_entry(0, 0, 1, {{0, 0}, {1, 1}});
    CHECK(labelcover_opt(parallel_repetition(sat, 3)).value == Rational(1));
}

TEST_CASE("repetition on one entry keeps the projection composition") {
    // single swap projection repeated twice: pi(a1 a0) applies the swap per digit
    LabelCover lc(1, 1, 2, 2);
    lc.add_entry(0, 0, 3, {{0, 1}, {1, 0}});
    LabelCover r = parallel_repetition(lc, 2);
    REQUIRE(r.entries().size() == 1);
    CHECK(r.entries()[0].w == 9);
    CHECK(r.projection_map(r.entries()[0]) == std::vector<uint16_t>{3, 2, 1, 0});
}

TEST_CASE("repetition budget") {
    Rng rng(43);
    LabelCover lc = bipartite_reduction(random_xor_system(6, 8, rng));
    RepetitionBudget tight;
    tight.max_entries = 100;
    CHECK_THROWS_AS(parallel_repetition(lc, 3, tight), BudgetError);
    CHECK_THROWS_AS(parallel_repetition(lc, 0), InvalidArgument);
}

TEST_CASE("label cover json round-trip") {
    XorSystem s(4);
    s.add(0, 1, 2, 1, 2);
    s.add(1, 2, 3, 0);
    LabelCover lc = bipartite_reduction(s);
    LabelCover back = parse_labelcover_json(write_labelcover_json(lc));
    CHECK(back == lc);

    // tampered flags are rejected
    std::string text = write_labelcover_json(lc);
    auto at = text.find("\"unique\": false");
    if (at == std::string::npos) at = text.find("\"unique\":false");
    REQUIRE(at != std::string::npos);
    std::string bad = text;
    bad.replace(at, std::string("\"unique\": false").size(), "\"unique\": true ");
    CHECK_THROWS_AS(parse_labelcover_json(bad), ParseError);
    CHECK_THROWS_AS(parse_labelcover_json("{"), ParseError);
}
