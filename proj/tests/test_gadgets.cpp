#include <doctest.h>

#include "gadgets.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gapkit;

TEST_CASE("gadget variable map") {
    XorSystem s(3);
    s.add(0, 1, 2, 1);
    auto [lifted, map] = gadget(s);
    CHECK(map.new_vars() == 6);
    CHECK(map.index(2, 0) == 4);
    CHECK(map.index(2, 1) == 5);
    CHECK(map.original(5) == 2);
    CHECK(lifted.nvars() == 6);
    // eight twisted equations per original equation
    CHECK(lifted.total_weight() == 8);
}

TEST_CASE("gadget preserves the optimum fraction exactly") {
    Rng rng(13);
    for (int it = 0; it < 10; ++it) {
        XorSystem s = random_xor_system(5, 6, rng);
        auto [lifted, map] = gadget(s);
        OptResult base = max_xor(s);
        OptResult big = max_xor(lifted, 24, 2);
        CHECK(big.total == 8 * base.total);
        CHECK(big.value == base.value * 8);
    }
}

TEST_CASE("gadget of a zeroed system is satisfiable") {
    Rng rng(19);
    for (int it = 0; it < 10; ++it) {
        XorSystem s = random_xor_system(5, 8, rng);
        XorSystem zero = homogeneous(s);
        CHECK(zero.total_weight() == s.total_weight());
        for (const auto& c : zero.constraints()) CHECK(c.rhs == 0);
        auto [lifted, map] = gadget(zero);
        CHECK(xor_satisfiable(lifted));
        // the all-zeros assignment follows the zero right-hand sides
        std::vector<uint8_t> x(size_t(lifted.nvars()), 0);
        CHECK(sat_weight(lifted, x) == lifted.total_weight());
    }
}

TEST_CASE("homogeneous merges colliding right-hand sides") {
    XorSystem s(3);
    s.add(0, 1, 2, 0, 2);
    s.add(0, 1, 2, 1, 3);
    XorSystem zero = homogeneous(s);
    CHECK(zero.size() == 1);
    CHECK(zero.constraints()[0].mult == 5);
}

TEST_CASE("gadget keeps multiplicities") {
    XorSystem s(4);
    s.add(0, 1, 2, 1, 7);
    auto [lifted, map] = gadget(s);
    CHECK(lifted.total_weight() == 56);
    for (const auto& c : lifted.constraints()) CHECK(c.mult == 7);
}

TEST_CASE("gadget equations follow the twist parity") {
    // per equation x+y+z=b, sides (a0,a1,a2) appear with rhs b ^ a0 ^ a1 ^ a2
    XorSystem s(3);
    s.add(0, 1, 2, 1);
    auto [lifted, map] = gadget(s);
    for (const auto& c : lifted.constraints()) {
        int twist = 0;
        for (int idx : c.v) twist ^= idx & 1;
        CHECK(int(c.rhs) == (1 ^ twist));
    }
}
