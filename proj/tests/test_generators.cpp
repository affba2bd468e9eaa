#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gapkit;

TEST_CASE("random incidence shape and determinism") {
    BipartiteIncidence inc = random_incidence(10, 3, 77);
    CHECK(inc.n == 10);
    CHECK(inc.rows.size() == 30);
    for (const auto& row : inc.rows) {
        CHECK(row[0] < row[1]);
        CHECK(row[1] < row[2]);
        CHECK(row[0] >= 0);
        CHECK(row[2] < 10);
    }
    BipartiteIncidence again = random_incidence(10, 3, 77);
    CHECK(again.rows == inc.rows);
    CHECK(random_incidence(10, 3, 78).rows != inc.rows);
}

TEST_CASE("expansion check on hand-built incidences") {
    // disjoint rows: every size-s union has boundary 3s
    BipartiteIncidence disjoint{9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}};
    ExpansionCheck full = check_unique_neighbour_expansion(disjoint, 3, Rational(3));
    CHECK(full.pass);
    CHECK(full.subsets_checked == 7);

    // duplicate rows kill expansion at size 2: no column is hit once
    BipartiteIncidence dup{6, {{0, 1, 2}, {0, 1, 2}, {3, 4, 5}}};
    ExpansionCheck bad = check_unique_neighbour_expansion(dup, 3, Rational(1));
    CHECK(!bad.pass);
    CHECK(bad.witness == std::vector<int>{0, 1});

    // sunflower {0,1,x}: any s >= 2 rows share the core, boundary exactly s
    BipartiteIncidence sun{8, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 1, 6}}};
    ExpansionCheck tight = check_unique_neighbour_expansion(sun, 5, Rational(1));
    CHECK(tight.pass);
    CHECK(!check_unique_neighbour_expansion(sun, 2, Rational(3, 2)).pass);
}

TEST_CASE("expansion check budget") {
    BipartiteIncidence inc = random_incidence(30, 3, 1);
    CHECK_THROWS_AS(check_unique_neighbour_expansion(inc, 40, Rational(1), 1 << 10), BudgetError);
}

TEST_CASE("uniform incidences at density m = 2n never pass beta = 1") {
    // with m >= n the average column is hit 3r times, so three rows covering
    // five or fewer columns appear with overwhelming probability and leave a
    // boundary below their size; the sampler is useful only at laxer targets
    int accepted = 0;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        BipartiteIncidence inc = random_incidence(12, 2, seed);
        if (check_unique_neighbour_expansion(inc, 4, Rational(1)).pass) ++accepted;
    }
    CHECK(accepted == 0);
}

TEST_CASE("expander rejection sampler at a feasible target") {
    ExpanderResult r = expander_incidence(12, 2, 2, Rational(1), 1, 256);
    CHECK(r.attempts >= 1);
    CHECK(check_unique_neighbour_expansion(r.inc, 2, Rational(1)).pass);
    ExpanderResult again = expander_incidence(12, 2, 2, Rational(1), 1, 256);
    CHECK(again.attempts == r.attempts);
    CHECK(again.inc.rows == r.inc.rows);
    CHECK_THROWS_AS(expander_incidence(12, 2, 5, Rational(1), 1, 4), BudgetError);
}

TEST_CASE("rhs sampling and system assembly") {
    std::vector<uint8_t> b = rhs_random(100, 9);
    CHECK(b.size() == 100);
    CHECK(b == rhs_random(100, 9));
    int ones = 0;
    for (uint8_t x : b) {
        CHECK(x <= 1);
        ones += x;
    }
    CHECK(ones > 20);
    CHECK(ones < 80);

    BipartiteIncidence inc{5, {{0, 1, 2}, {2, 3, 4}}};
    XorSystem sys = system_from_incidence(inc, {1, 0});
    CHECK(sys.nvars() == 5);
    CHECK(sys.total_weight() == 2);
    CHECK(sat_weight(sys, {1, 0, 0, 0, 0}) == 2);
}

TEST_CASE("gap pair ties the pieces together") {
    GapPair p = gap_pair(5, 2, Rational(1, 4), 2, 21);
    CHECK(p.epsilon == Rational(1, 4));
    CHECK(p.seed == 21);
    CHECK(p.hard.nvars() == 10);
    CHECK(p.easy.nvars() == 10);
    CHECK(p.hard.total_weight() == 8 * p.seed_system.total_weight());
    CHECK(xor_satisfiable(p.easy));
    REQUIRE(p.opt_easy);
    CHECK(*p.opt_easy == Rational(1));
    REQUIRE(p.opt_hard);
    // the doubling preserves the seed optimum exactly
    OptResult base = max_xor(p.seed_system);
    CHECK(*p.opt_hard == Rational(int64_t(base.value), int64_t(base.total)));
    CHECK(p.k_check == 2);
    CHECK(p.k_locally_sat);

    GapPair q = gap_pair(5, 2, Rational(1, 4), 2, 21);
    CHECK(q.seed_system == p.seed_system);
    CHECK(q.hard == p.hard);
}

TEST_CASE("gap pair skips brute force above the cap") {
    GapPair p = gap_pair(16, 2, Rational(1, 8), 0, 3, 24);
    // 32 doubled variables exceed the cap, so no exact fractions
    CHECK(!p.opt_hard);
    CHECK(!p.opt_easy);
    CHECK(xor_satisfiable(p.easy));
}

TEST_CASE("random regular graphs") {
    Graph g = random_regular_graph(10, 3, 5);
    CHECK(g.n() == 10);
    std::vector<int> deg(10, 0);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges()) {
        ++deg[size_t(u)];
        ++deg[size_t(v)];
        CHECK(u != v);
        CHECK(seen.insert({u, v}).second);
    }
    for (int d : deg) CHECK(d == 3);
    CHECK(random_regular_graph(10, 3, 5).edges() == g.edges());
    CHECK_THROWS_AS(random_regular_graph(5, 3, 1), InvalidArgument);  // odd n*d
}

TEST_CASE("random regular bipartite graphs") {
    Graph g = random_regular_bipartite(6, 3, 8);
    CHECK(g.n() == 12);
    std::vector<int> deg(12, 0);
    for (auto [u, v] : g.edges()) {
        CHECK(u < 6);
        CHECK(v >= 6);
        ++deg[size_t(u)];
        ++deg[size_t(v)];
    }
    for (int d : deg) CHECK(d == 3);
}
