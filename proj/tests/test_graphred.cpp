#include <doctest.h>

#include <string>
#include <vector>

#include "graph_reductions.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gapkit;

namespace {

LabelCover toy_game() {
    // identity and swap projection on one right bit; value 1/2
    LabelCover lc(2, 1, 2, 2);
    lc.add_entry(0, 0, 1, {{0, 0}, {1, 1}});
    lc.add_entry(1, 0, 1, {{0, 1}, {1, 0}});
    return lc;
}

}  // namespace

TEST_CASE("fglss of one equation is a 4-clique") {
    XorSystem s(3);
    s.add(0, 1, 2, 1);
    Graph g = fglss(s);
    CHECK(g.n() == 4);
    CHECK(g.edges().size() == 6);
    REQUIRE(g.copartite());
    CHECK(g.copartite()->parts == 1);
    CHECK(g.copartite()->psize == 4);
    CHECK(min_vc(g).value == 3);  // 4m - m* with m = m* = 1
}

TEST_CASE("fglss expands multiplicities into separate cliques") {
    XorSystem s(3);
    s.add(0, 1, 2, 1, 3);
    Graph g = fglss(s);
    CHECK(g.n() == 12);
    CHECK(g.copartite()->parts == 3);
    // copies of one equation conflict pairwise except on equal assignments
    CHECK(min_vc(g).value == 4 * 3 - 3);
}

TEST_CASE("fglss vertex cover identity on random systems") {
    Rng rng(83);
    for (int it = 0; it < 6; ++it) {
        XorSystem s = random_xor_system(5, 4, rng);
        Graph g = fglss(s);
        OptResult base = max_xor(s);
        CHECK(min_vc(g, 16).value == 4 * base.total - base.value);
        CHECK(max_is(g, 16).value == base.value);
    }
}

TEST_CASE("fglss budget") {
    XorSystem s(3);
    s.add(0, 1, 2, 0, 2000);
    CHECK_THROWS_AS(fglss(s), BudgetError);
}

TEST_CASE("conflict graph of a projection game") {
    // identity + swap on one right bit is satisfiable (b = a0 = 1 - a1)
    Graph g = labelcover_to_graph(toy_game());
    CHECK(g.n() == 4);
    CHECK(g.edges().size() == 4);
    REQUIRE(g.copartite());
    CHECK(g.copartite()->psize == 2);
    CHECK(max_is(g).value == 2);
    CHECK(g.has_edge(0, 1));  // left block is a clique
    CHECK(g.has_edge(0, 2));  // both project right 0 to different values
    CHECK(!g.has_edge(0, 3));

    // two right bits, one equal and one twisted: contradictory, value 3/4
    LabelCover bad(2, 2, 2, 2);
    bad.add_entry(0, 0, 1, {{0, 0}, {1, 1}});
    bad.add_entry(1, 0, 1, {{0, 0}, {1, 1}});
    bad.add_entry(0, 1, 1, {{0, 0}, {1, 1}});
    bad.add_entry(1, 1, 1, {{0, 1}, {1, 0}});
    Graph k = labelcover_to_graph(bad);
    CHECK(k.edges().size() == 6);
    CHECK(max_is(k).value == 1);
}

TEST_CASE("block-test graph on the toy conflict graph") {
    Graph conflict = labelcover_to_graph(toy_game());
    Graph ds = dinur_safra(conflict, Rational(1, 3), 1);
    // l = 4, one block, family of 15 subsets, vertices = subfamilies
    CHECK(ds.n() == 32768);
    CHECK(ds.edges().size() == 7174453);
    CHECK(ds.total_weight() == pow_u64(3, 15));
    REQUIRE(ds.copartite());
    CHECK(ds.copartite()->parts == 1);

    // disjoint subfamilies conflict: the empty one hits everything, the
    // full one only the empty one
    std::vector<uint64_t> deg(32768, 0);
    for (const auto& [a, b] : ds.edges()) {
        ++deg[size_t(a)];
        ++deg[size_t(b)];
    }
    CHECK(deg[0] == 32767);
    CHECK(deg[32767] == 1);
    int lone = 0;
    for (uint64_t d : deg) lone += (d == 1);
    CHECK(lone == 1);
}

TEST_CASE("block-test census matches the quotient presentation") {
    Graph conflict = labelcover_to_graph(toy_game());
    DsCensus c = dinur_safra_census(conflict, 1);
    CHECK(c.uniform);
    CHECK(c.class_size == 24);  // l! with l = 4
    CHECK(c.pairs == c.classes * c.class_size);
    CHECK(c.classes == dinur_safra(conflict, Rational(1, 3), 1).n());
}

TEST_CASE("dinur_safra rejects bad parameters") {
    Graph g = labelcover_to_graph(toy_game());
    CHECK_THROWS_AS(dinur_safra(g, Rational(0), 1), InvalidArgument);
    CHECK_THROWS_AS(dinur_safra(g, Rational(1), 1), InvalidArgument);
    CHECK_THROWS_AS(dinur_safra(g, Rational(1, 3), 0), InvalidArgument);
    Graph plain(4);
    CHECK_THROWS_AS(dinur_safra(plain, Rational(1, 3), 1), InvalidArgument);
    // a block would need more vertices than the graph has
    XorSystem one(3);
    one.add(0, 1, 2, 0);
    CHECK_THROWS_AS(dinur_safra(fglss(one), Rational(1, 3), 1), InvalidArgument);
    // psize 4 makes the subset family too large
    XorSystem two(6);
    two.add(0, 1, 2, 0);
    two.add(3, 4, 5, 0);
    CHECK_THROWS_AS(dinur_safra(fglss(two), Rational(1, 3), 1), BudgetError);
}

TEST_CASE("unweight expands weights into unit copies") {
    Graph g(2);
    g.add_edge(0, 1);
    g.set_weights({2, 3});
    Graph u = unweight(g);
    CHECK(u.n() == 5);
    CHECK(u.edges().size() == 6);  // K_{2,3}
    CHECK(!u.weighted());
    CHECK(min_vc(u).value == min_vc(g).value);

    // all weights 1: an isomorphic copy
    Graph plain = path_graph(3);
    Graph same = unweight(plain);
    CHECK(same.n() == 3);
    CHECK(same.edges() == plain.edges());
}

TEST_CASE("unweight preserves the cover number on random weighted graphs") {
    Rng rng(97);
    for (int it = 0; it < 6; ++it) {
        Graph g = random_graph(6, rng);
        std::vector<uint64_t> w(6);
        for (auto& x : w) x = 1 + rng.below(3);
        g.set_weights(w);
        CHECK(min_vc(unweight(g)).value == min_vc(g).value);
    }
}

TEST_CASE("xor pipeline composes the stages") {
    XorSystem s(3);
    s.add(0, 1, 2, 1);
    PipelineXor p = pipeline_xor(s, 1, Rational(1, 4));
    CHECK(p.bipartite.m() == 1);
    CHECK(p.bipartite.n() == 3);
    CHECK(p.repeated.m() == 1);
    CHECK(p.system.nvars() == 1 * 8 + 3 * 2);
    XorSystem manual =
        longcode_xor(parallel_repetition(bipartite_reduction(s), 1), Rational(1, 4));
    CHECK(p.system == manual);
}

TEST_CASE("sat pipeline single layer on a satisfiable system") {
    XorSystem s(3);
    s.add(0, 1, 2, 0);
    PipelineSat p = pipeline_sat_single(s, 1, Rational(1, 4));
    CHECK(p.system.nvars() == 14);
    // satisfiable source: some assignment satisfies the whole output
    OptResult best = max_cnf(p.system, 14);
    CHECK(best.value == p.system.total_weight());
}

TEST_CASE("pipeline failures name the failing stage") {
    Rng rng(101);
    XorSystem sys = random_xor_system(6, 8, rng);
    RepetitionBudget tight;
    tight.max_entries = 10;
    try {
        pipeline_xor(sys, 3, Rational(1, 4), {}, tight);
        CHECK(false);
    } catch (const BudgetError& e) {
        CHECK(std::string(e.what()).rfind("parallel_repetition", 0) == 0);
    }
    try {
        pipeline_vc(sys, 1, Rational(1, 3), 1);
        CHECK(false);
    } catch (const BudgetError& e) {
        CHECK(std::string(e.what()).rfind("dinur_safra", 0) == 0);
    }
}
