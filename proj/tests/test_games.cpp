#include <doctest.h>

#include "games.hpp"
#include "support.hpp"

using namespace gapkit;

namespace {

RelStructure k_struct(int n) { return graph_structure(complete_graph(n)); }

}  // namespace

TEST_CASE("existential game follows the homomorphism order on cliques") {
    // K3 -> K4 has a homomorphism, so Duplicator survives any pebble count;
    // K4 -> K3 does not, and four pebbles expose it
    CHECK(existential_game(k_struct(3), k_struct(4), 2).winner == Winner::Duplicator);
    CHECK(existential_game(k_struct(3), k_struct(4), 4).winner == Winner::Duplicator);
    CHECK(existential_game(k_struct(4), k_struct(3), 3).winner == Winner::Duplicator);
    GameResult r = existential_game(k_struct(4), k_struct(3), 4);
    CHECK(r.winner == Winner::Spoiler);
    CHECK(!r.deaths.empty());
    CHECK(replay_certificate(k_struct(4), k_struct(3), 4, r, false));
}

TEST_CASE("identical structures are duplicator wins") {
    Rng rng(51);
    Graph g = random_graph(6, rng);
    RelStructure a = graph_structure(g);
    CHECK(existential_game(a, a, 3).winner == Winner::Duplicator);
    GameResult r = bijective_game(a, a, 3);
    CHECK(r.winner == Winner::Duplicator);
    CHECK(r.live_positions == r.total_positions);
    CHECK(replay_certificate(a, a, 3, r, true));
}

TEST_CASE("bijective game needs equal universe sizes") {
    GameResult r = bijective_game(k_struct(3), k_struct(4), 2);
    CHECK(r.winner == Winner::Spoiler);
    CHECK(r.size_mismatch);
}

TEST_CASE("six-cycle versus two triangles") {
    Graph c6 = cycle_graph(6);
    Graph c3c3(6);
    for (int b = 0; b < 6; b += 3)
        for (int i = 0; i < 3; ++i) c3c3.add_edge(b + i, b + (i + 1) % 3);
    RelStructure a = graph_structure(c6), b = graph_structure(c3c3);

    // both are 2-regular, so two-variable counting cannot split them
    CHECK(c2_equivalent(c6, c3c3));
    CHECK(bijective_game(a, b, 2).winner == Winner::Duplicator);
    CHECK(wl_equivalent(c6, c3c3, 1));

    // three pebbles find the triangle
    GameResult r = bijective_game(a, b, 3);
    CHECK(r.winner == Winner::Spoiler);
    CHECK(replay_certificate(a, b, 3, r, true));
    CHECK(!wl_equivalent(c6, c3c3, 2));
}

TEST_CASE("color refinement splits by iterated degree") {
    RefinementResult k = color_refinement(complete_graph(4));
    REQUIRE(k.classes.size() == 1);
    CHECK(k.delta[0][0] == 3);

    RefinementResult s = color_refinement(star_graph(3));
    REQUIRE(s.classes.size() == 2);
    CHECK(s.classes[0] == std::vector<int>{0});  // classes ordered by least vertex
    CHECK(s.delta[0][1] == 3);
    CHECK(s.delta[1][0] == 1);
    CHECK(s.delta[0][0] == 0);

    // path on 4: ends and middles
    RefinementResult p = color_refinement(path_graph(4));
    CHECK(p.classes.size() == 2);
}

TEST_CASE("refinement delta satisfies the balance equations") {
    Rng rng(61);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_graph(8, rng);
        RefinementResult r = color_refinement(g);
        size_t c = r.classes.size();
        for (size_t i = 0; i < c; ++i)
            for (size_t j = 0; j < c; ++j)
                CHECK(uint64_t(r.delta[i][j]) * r.classes[i].size() ==
                      uint64_t(r.delta[j][i]) * r.classes[j].size());
        // every vertex of a class sees exactly delta[i][j] neighbours in class j
        std::vector<int> cls(8, -1);
        for (size_t i = 0; i < c; ++i)
            for (int v : r.classes[i]) cls[size_t(v)] = int(i);
        auto adj = g.adjacency();
        for (size_t i = 0; i < c; ++i)
            for (int v : r.classes[i]) {
                std::vector<int> cnt(c, 0);
                for (int u : adj[size_t(v)]) ++cnt[size_t(cls[size_t(u)])];
                for (size_t j = 0; j < c; ++j) CHECK(cnt[j] == r.delta[i][j]);
            }
    }
}

TEST_CASE("c2_equivalent distinguishes different degree profiles") {
    CHECK(!c2_equivalent(cycle_graph(6), path_graph(6)));
    CHECK(c2_equivalent(cycle_graph(6), cycle_graph(6)));
    CHECK(!c2_equivalent(cycle_graph(6), cycle_graph(5)));
}

TEST_CASE("local satisfiability via the existential game") {
    // directly contradictory pair: fine on two variables, dead on three
    XorSystem contra(3);
    contra.add(0, 1, 2, 0);
    contra.add(0, 1, 2, 1);
    CHECK(k_locally_satisfiable(contra, 2, Encoding::Second));
    CHECK(!k_locally_satisfiable(contra, 3, Encoding::Second));

    // satisfiable systems are locally satisfiable at every k
    XorSystem sat(4);
    sat.add(0, 1, 2, 1);
    sat.add(1, 2, 3, 0);
    for (int k = 1; k <= 4; ++k) CHECK(k_locally_satisfiable(sat, k, Encoding::Second));
    CHECK(k_locally_satisfiable(sat, 3, Encoding::First));

    CnfSystem c(3);
    c.add({0, 1}, {1, 1}, {2, 1}, 1);
    CHECK(k_locally_satisfiable(c, 3, Encoding::Second));
}

TEST_CASE("spoiler needs the full window in the first encoding") {
    XorSystem contra(3);
    contra.add(0, 1, 2, 0);
    contra.add(0, 1, 2, 1);
    // first encoding adds constraint elements, widening the window Spoiler
    // needs: variables plus both constraint handles
    CHECK(k_locally_satisfiable(contra, 3, Encoding::First));
    CHECK(!k_locally_satisfiable(contra, 5, Encoding::First));
}

TEST_CASE("game budget refusal") {
    Rng rng(71);
    Graph g = random_graph(9, rng), h = random_graph(9, rng);
    CHECK_THROWS_AS(existential_game(graph_structure(g), graph_structure(h), 4, 100),
                    BudgetError);
}
