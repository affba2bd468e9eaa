#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "support.hpp"

using namespace gapkit;

namespace {

// reference maximizer over all assignments
template <class Sys>
uint64_t brute_opt(const Sys& sys) {
    uint64_t best = 0;
    for (uint64_t a = 0; a < (uint64_t(1) << sys.nvars()); ++a) {
        std::vector<uint8_t> x(size_t(sys.nvars()));
        for (int v = 0; v < sys.nvars(); ++v) x[size_t(v)] = uint8_t((a >> v) & 1);
        best = std::max(best, sat_weight(sys, x));
    }
    return best;
}

bool clique_inside(const Graph& g, uint64_t mask, int h) {
    std::vector<int> vs;
    for (int v = 0; v < g.n(); ++v)
        if (mask >> v & 1) vs.push_back(v);
    if (int(vs.size()) < h) return false;
    std::vector<int> pick(size_t(h));
    // enumerate h-subsets
    std::vector<int> idx(size_t(h));
    for (int i = 0; i < h; ++i) idx[size_t(i)] = i;
    while (true) {
        bool all = true;
        for (int i = 0; i < h && all; ++i)
            for (int j = i + 1; j < h && all; ++j)
                if (!g.has_edge(vs[size_t(idx[size_t(i)])], vs[size_t(idx[size_t(j)])]))
                    all = false;
        if (all) return true;
        int i = h - 1;
        while (i >= 0 && idx[size_t(i)] == int(vs.size()) - h + i) --i;
        if (i < 0) return false;
        ++idx[size_t(i)];
        for (int j = i + 1; j < h; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
}

}  // namespace

TEST_CASE("max_xor matches brute force and finds least witness") {
    Rng rng(3);
    for (int it = 0; it < 15; ++it) {
        XorSystem s = random_xor_system(6, 8, rng);
        OptResult r = max_xor(s);
        CHECK(r.value == brute_opt(s));
        CHECK(r.total == s.total_weight());
        CHECK(sat_weight(s, r.assignment) == r.value);
        // no lexicographically smaller assignment reaches the optimum
        bool smaller = false;
        for (uint64_t a = 0; a < (uint64_t(1) << 6) && !smaller; ++a) {
            std::vector<uint8_t> x(6);
            for (int v = 0; v < 6; ++v) x[size_t(v)] = uint8_t((a >> v) & 1);
            if (x == r.assignment) break;
            std::vector<uint8_t> lex_r = r.assignment, lex_x = x;
            if (sat_weight(s, x) == r.value && lex_x < lex_r) smaller = true;
        }
        CHECK(!smaller);
    }
}

TEST_CASE("max_xor respects jobs and cap") {
    Rng rng(5);
    XorSystem s = random_xor_system(10, 20, rng);
    OptResult one = max_xor(s, 24, 1);
    OptResult four = max_xor(s, 24, 4);
    CHECK(one.value == four.value);
    CHECK(one.assignment == four.assignment);
    XorSystem big(30);
    big.add(0, 1, 29, 1);
    CHECK_THROWS_AS(max_xor(big), BudgetError);
}

TEST_CASE("max_cnf matches brute force") {
    Rng rng(9);
    for (int it = 0; it < 10; ++it) {
        XorSystem s = random_xor_system(5, 7, rng);
        CnfSystem c = xor_to_cnf(s);
        OptResult r = max_cnf(c);
        CHECK(r.value == brute_opt(c));
        CHECK(sat_weight(c, r.assignment) == r.value);
    }
}

TEST_CASE("xor_satisfiable agrees with elimination on random systems") {
    Rng rng(17);
    int sat = 0;
    for (int it = 0; it < 40; ++it) {
        XorSystem s = random_xor_system(7, 9, rng);
        bool brute = brute_opt(s) == s.total_weight();
        CHECK(xor_satisfiable(s) == brute);
        sat += brute ? 1 : 0;
    }
    CHECK(sat > 0);
    CHECK(sat < 40);
    auto sol = xor_solve(XorSystem(3));
    REQUIRE(sol);
    CHECK(sol->size() == 3);
}

TEST_CASE("xor_solve returns a satisfying assignment when one exists") {
    Rng rng(23);
    for (int it = 0; it < 20; ++it) {
        XorSystem s = random_xor_system(8, 6, rng);
        auto sol = xor_solve(s);
        if (sol)
            CHECK(sat_weight(s, *sol) == s.total_weight());
        else
            CHECK(brute_opt(s) < s.total_weight());
    }
}

TEST_CASE("min_vc and max_is on known graphs") {
    // C5: vc 3, is 2; K4: vc 3, is 1; star: vc 1
    OptResult c5 = min_vc(cycle_graph(5));
    CHECK(c5.value == 3);
    OptResult c5i = max_is(cycle_graph(5));
    CHECK(c5i.value == 2);
    CHECK(min_vc(complete_graph(4)).value == 3);
    CHECK(max_is(complete_graph(4)).value == 1);
    CHECK(min_vc(star_graph(5)).value == 1);
    CHECK(min_vc(star_graph(5)).vertices == std::vector<int>{0});
    CHECK(min_vc(Graph(4)).value == 0);
}

TEST_CASE("weighted cover complements weighted independent set") {
    Rng rng(31);
    for (int it = 0; it < 12; ++it) {
        Graph g = random_graph(9, rng);
        std::vector<uint64_t> w(9);
        for (auto& x : w) x = 1 + rng.below(5);
        g.set_weights(w);
        OptResult vc = min_vc(g), is = max_is(g);
        CHECK(vc.value + is.value == g.total_weight());
        // witnesses are feasible
        std::vector<char> in_vc(9, 0);
        for (int v : vc.vertices) in_vc[size_t(v)] = 1;
        for (auto [u, v] : g.edges()) CHECK((in_vc[size_t(u)] || in_vc[size_t(v)]));
        std::vector<char> in_is(9, 0);
        for (int v : is.vertices) in_is[size_t(v)] = 1;
        for (auto [u, v] : g.edges()) CHECK(!(in_is[size_t(u)] && in_is[size_t(v)]));
    }
}

TEST_CASE("exhaustive oracles agree with branch and bound") {
    Rng rng(37);
    for (int it = 0; it < 8; ++it) {
        Graph g = random_graph(8, rng);
        CHECK(min_vc_exhaustive(g).value == min_vc(g).value);
        CHECK(max_is_exhaustive(g).value == max_is(g).value);
    }
}

TEST_CASE("max_hclique_free against subset enumeration") {
    Rng rng(41);
    for (int h = 2; h <= 4; ++h) {
        for (int it = 0; it < 8; ++it) {
            Graph g = random_graph(9, rng);
            OptResult r = max_hclique_free(g, h);
            uint64_t best = 0;
            for (uint64_t m = 0; m < (uint64_t(1) << 9); ++m)
                if (!clique_inside(g, m, h)) best = std::max(best, uint64_t(std::popcount(m)));
            CHECK(r.value == best);
            // witness really is h-clique-free
            uint64_t wmask = 0;
            for (int v : r.vertices) wmask |= uint64_t(1) << v;
            CHECK(!clique_inside(g, wmask, h));
        }
    }
}

TEST_CASE("max_hclique_free special cases") {
    // h=2 degenerates to max_is; triangle-free subset of K4 is any pair
    Graph k4 = complete_graph(4);
    CHECK(max_hclique_free(k4, 2).value == max_is(k4).value);
    CHECK(max_hclique_free(k4, 3).value == 2);
    CHECK(max_hclique_free(k4, 5).value == 4);
    CHECK(max_hclique_free(Graph(3), 3).value == 3);
    CHECK_THROWS_AS(max_hclique_free(k4, 1), InvalidArgument);
}

TEST_CASE("labelcover_opt on a toy unique game") {
    // two constraints on one right vertex: identity wants g=f, swap wants
    // g=1-f; only one can win
    LabelCover lc(2, 1, 2, 2);
    lc.add_entry(0, 0, 1, {{0, 0}, {1, 1}});
    lc.add_entry(1, 0, 1, {{0, 1}, {1, 0}});
    LcOpt r = labelcover_opt(lc);
    CHECK(r.value == Rational(1, 2));
    LabelCover sat(2, 1, 2, 2);
    sat.add_entry(0, 0, 1, {{0, 0}, {1, 1}});
    sat.add_entry(1, 0, 1, {{0, 0}, {1, 1}});
    CHECK(labelcover_opt(sat).value == Rational(1));
}

TEST_CASE("oracle budget refusals") {
    Graph big(40);
    big.add_edge(0, 39);
    CHECK_THROWS_AS(min_vc(big), BudgetError);
    CHECK_THROWS_AS(max_is(big), BudgetError);
    CHECK_THROWS_AS(max_hclique_free(big, 3), BudgetError);
    CHECK_THROWS_AS(min_vc_exhaustive(Graph(21)), BudgetError);
}
