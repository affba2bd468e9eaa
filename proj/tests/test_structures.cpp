#include <doctest.h>

#include "rel_structure.hpp"
#include "support.hpp"
#include "xor_system.hpp"

using namespace gapkit;

TEST_CASE("xor system consolidates duplicate equations") {
    XorSystem s(5);
    s.add(0, 1, 2, 1, 1);
    s.add(2, 1, 0, 1, 2);  // same equation, any variable order
    s.add(0, 1, 2, 0, 1);  // same variables, different rhs stays separate
    CHECK(s.size() == 2);
    CHECK(s.total_weight() == 4);
    CHECK(s.constraints()[0].v == std::array<int, 3>{0, 1, 2});
    CHECK(s.constraints()[0].rhs == 0);  // sorted by (v, rhs)
    CHECK(s.constraints()[1].mult == 3);
}

TEST_CASE("xor system rejects bad equations") {
    XorSystem s(3);
    CHECK_THROWS_AS(s.add(0, 0, 1, 0), InvalidArgument);
    CHECK_THROWS_AS(s.add(0, 1, 3, 0), InvalidArgument);
    CHECK_THROWS_AS(s.add(-1, 1, 2, 0), InvalidArgument);
    CHECK_THROWS_AS(s.add(0, 1, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(s.add(0, 1, 2, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(XorSystem(-1), InvalidArgument);
}

TEST_CASE("xor text round-trip") {
    Rng rng(11);
    for (int it = 0; it < 20; ++it) {
        XorSystem s = random_xor_system(6, 9, rng);
        XorSystem back = parse_xor(write_xor(s));
        CHECK(back == s);
    }
    CHECK_THROWS_AS(parse_xor("p xor"), ParseError);
    CHECK_THROWS_AS(parse_xor("p cnf 3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_xor("p xor 3 1\n0 1 5 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_xor("p xor 3 2\n0 1 2 0 1\n"), ParseError);
}

TEST_CASE("cnf round-trip keeps multiplicity by repetition") {
    CnfSystem s(4);
    s.add({0, 1}, {1, 0}, {2, 1}, 3);
    s.add({0, 0}, {2, 0}, {3, 0}, 1);
    std::string text = write_cnf(s);
    CnfSystem back = parse_cnf(text);
    CHECK(back == s);
    CHECK(back.total_weight() == 4);
    CHECK(back.size() == 2);
    // the repeated clause appears three times in the text
    CHECK(back.clauses()[0].mult == 3);
}

TEST_CASE("sat weight and fraction") {
    XorSystem s(3);
    s.add(0, 1, 2, 0, 2);
    s.add(0, 1, 2, 1, 1);
    std::vector<uint8_t> x{0, 0, 0};
    CHECK(sat_weight(s, x) == 2);
    x[0] = 1;
    CHECK(sat_weight(s, x) == 1);
    CHECK(sat_fraction(s, x) == Rational(1, 3));
    CHECK(sat_fraction(XorSystem(1), {0}) == Rational(1));
}

TEST_CASE("xor_to_cnf max weight is 3m + m*") {
    Rng rng(7);
    for (int it = 0; it < 10; ++it) {
        XorSystem s = random_xor_system(5, 6, rng);
        CnfSystem c = xor_to_cnf(s);
        CHECK(c.total_weight() == 4 * s.total_weight());
        uint64_t best_xor = 0, best_cnf = 0;
        for (uint64_t a = 0; a < (uint64_t(1) << 5); ++a) {
            std::vector<uint8_t> x(5);
            for (int v = 0; v < 5; ++v) x[size_t(v)] = uint8_t((a >> v) & 1);
            best_xor = std::max(best_xor, sat_weight(s, x));
            best_cnf = std::max(best_cnf, sat_weight(c, x));
        }
        CHECK(best_cnf == 3 * s.total_weight() + best_xor);
    }
}

TEST_CASE("graph basics and text round-trip") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK_THROWS_AS(g.add_edge(0, 0), InvalidArgument);
    CHECK_THROWS_AS(g.add_edge(0, 4), InvalidArgument);
    g.set_weights({1, 2, 3, 4});
    g.set_copartite({2, 2});
    std::string text = write_graph(g);
    Graph back = parse_graph(text);
    CHECK(back.n() == 4);
    CHECK(back.edges() == g.edges());
    CHECK(back.weight(3) == 4);
    CHECK(back.total_weight() == 10);
    REQUIRE(back.copartite());
    CHECK(back.copartite()->psize == 2);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 0 2\n"), ParseError);
}

TEST_CASE("second encoding of an xor system") {
    XorSystem s(4);
    s.add(0, 1, 2, 0);
    s.add(1, 2, 3, 1);
    RelStructure a = encode_second(s);
    CHECK(a.n() == 4);
    REQUIRE(a.voc().rels.size() == 2);
    CHECK(a.voc().rels[0].name == "R0");
    CHECK(a.has_tuple(0, {0, 1, 2}));
    CHECK(a.has_tuple(1, {1, 2, 3}));
    CHECK(!a.has_tuple(1, {0, 1, 2}));
}

TEST_CASE("first encoding separates variables and constraints") {
    XorSystem s(4);
    s.add(0, 1, 2, 0);
    s.add(1, 2, 3, 1);
    RelStructure a = encode_first(s);
    CHECK(a.n() == 6);  // 4 variables + 2 constraint elements
    CHECK(a.voc().rels[0].name == "E1");
    CHECK(a.voc().rels[4].name == "Z_R1");
    CHECK(a.has_tuple(0, {0, 4}));  // E1: first position of constraint 4 is x0
    CHECK(a.has_tuple(2, {3, 5}));  // E3: third position of constraint 5 is x3
    CHECK(a.has_tuple(4, {5}));     // Z_R1 marks the rhs-1 constraint
    CHECK(!a.has_tuple(4, {4}));
    // multiplicities expand into one element per copy
    XorSystem w(3);
    w.add(0, 1, 2, 0, 5);
    CHECK(encode_first(w).n() == 8);
}

TEST_CASE("sat relation names encode the excluded sign pattern") {
    CHECK(sat_rel_name(0) == "R1");
    CHECK(sat_rel_name(7) == "R8");
    CnfSystem c(3);
    c.add({0, 1}, {1, 0}, {2, 0}, 1);  // sign pattern s = (1,0,0), index 4
    RelStructure a = encode_second(c);
    CHECK(a.voc().rels[4].name == sat_rel_name(4));
    CHECK(a.has_tuple(4, {0, 1, 2}));
}

TEST_CASE("language structures hold exactly the consistent triples") {
    RelStructure x = encode_language(Lang::Xor3, Encoding::Second);
    // two elements; R0/R1 hold on the parity-consistent triples
    CHECK(x.n() == 2);
    CHECK(x.has_tuple(0, {0, 0, 0}));
    CHECK(x.has_tuple(0, {1, 1, 0}));
    CHECK(!x.has_tuple(0, {1, 0, 0}));
    CHECK(x.has_tuple(1, {1, 0, 0}));
    RelStructure s = encode_language(Lang::Sat3, Encoding::Second);
    CHECK(s.n() == 2);
    // pattern 0 is falsified only by (1,1,1)
    CHECK(s.has_tuple(0, {0, 0, 0}));
    CHECK(s.has_tuple(0, {0, 1, 1}));
    CHECK(!s.has_tuple(0, {1, 1, 1}));
    CHECK(s.tuples()[0].size() == 7);
}

TEST_CASE("disjoint union shifts the second operand") {
    Graph g = path_graph(2), h = path_graph(3);
    RelStructure u = disjoint_union(graph_structure(g), graph_structure(h));
    CHECK(u.n() == 5);
    CHECK(u.has_tuple(0, {0, 1}));
    CHECK(u.has_tuple(0, {2, 3}));
    CHECK(!u.has_tuple(0, {1, 2}));
}

TEST_CASE("rational arithmetic normalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(7, 8).str() == "7/8");
    CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
}

TEST_CASE("rng is deterministic per seed") {
    Rng a(42), b(42), c(43);
    CHECK(a.next() == b.next());
    CHECK(a.below(100) == b.below(100));
    bool differ = false;
    for (int i = 0; i < 64 && !differ; ++i) differ = a.next() != c.next();
    CHECK(differ);
}
