#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace gapkit {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

// Machine-checkable experiment outcome. text() is reproducible byte for byte
// for a fixed (recipe, options, library version): key=value lines followed
// by one JSON summary line.
struct Report {
    std::string recipe;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;
    bool pass = true;

    void param(const std::string& key, const std::string& value);
    void param(const std::string& key, uint64_t value);
    void check(const std::string& name, const std::string& expected, const std::string& actual);
    void check(const std::string& name, uint64_t expected, uint64_t actual);
    void check(const std::string& name, const Rational& expected, const Rational& actual);
    void check_true(const std::string& name, bool ok);
    void check_le(const std::string& name, const Rational& lhs, const Rational& rhs);

    std::string text() const;
};

struct VerifyOptions {
    uint64_t seed = 1;
    int jobs = 1;
};

// Recipes, one per acceptance property (criterion 10 spans two):
//   fglss-identity        vc(fglss(I)) = 4m - m*
//   xor2sat-identity      max_cnf(xor_to_cnf(I)) = 3m + m*
//   gadget-gap            opt(I) <= opt(G(I)) <= 1/2 + opt(I)/2
//   cfi-shadow            local satisfiability + bijective-2 equivalence + gap
//   bipartite-identity    opt(L(I)) = (2m + m*) / 3m
//   parallel-repetition   flags preserved, opt 1 on satisfiable, W_0 squares
//   longcode-completeness toy pipeline opt >= 3/4 (xor), satisfiable (sat)
//   longcode-normalization per-entry weight closed forms at p=4, q=2
//   dinur-safra-structure  vertex count, weight sums, census, unweight
//   vg-sandwich           vc <= v <= 2vc and invariance corpora
//   c2-witness            c2_gap_witness(8): equivalent, vc gap
//   c2-agreement          c2_equivalent == bijective-2 == 1-WL on 200 pairs
//   random-rhs-gap        >= 95% of random-rhs systems have opt <= 3/4
//   expander-local-sat    accepted incidences: small subsets satisfiable
std::vector<std::string> recipe_names();

Report run_recipe(const std::string& name, const VerifyOptions& opts = {});

}  // namespace gapkit
