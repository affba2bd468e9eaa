#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"

namespace gapkit {

// One consolidated parity constraint x[v0]+x[v1]+x[v2] = rhs over F2 with a
// positive multiplicity. Variables are pairwise distinct and stored sorted.
struct XorConstraint {
    std::array<int, 3> v;
    uint8_t rhs;
    uint64_t mult;
    friend bool operator==(const XorConstraint&, const XorConstraint&) = default;
};

class XorSystem {
  public:
    XorSystem() = default;
    explicit XorSystem(int nvars);

    // Consolidates: an existing (triple, rhs) entry absorbs the multiplicity.
    void add(int a, int b, int c, int rhs, uint64_t mult = 1);

    int nvars() const { return nvars_; }
    const std::vector<XorConstraint>& constraints() const { return cons_; }
    size_t size() const { return cons_.size(); }
    uint64_t total_weight() const;

    friend bool operator==(const XorSystem&, const XorSystem&) = default;

  private:
    int nvars_ = 0;
    std::vector<XorConstraint> cons_;  // sorted by (v, rhs), unique
};

// Literal with polarity s: true under an assignment x iff x[var] == s.
struct Literal {
    int var;
    uint8_t s;
    friend bool operator==(const Literal&, const Literal&) = default;
};

// Three literals on pairwise distinct variables, sorted by variable.
struct CnfClause {
    std::array<int, 3> v;
    std::array<uint8_t, 3> s;
    uint64_t mult;
    friend bool operator==(const CnfClause&, const CnfClause&) = default;
};

class CnfSystem {
  public:
    CnfSystem() = default;
    explicit CnfSystem(int nvars);

    void add(Literal a, Literal b, Literal c, uint64_t mult = 1);

    int nvars() const { return nvars_; }
    const std::vector<CnfClause>& clauses() const { return cls_; }
    size_t size() const { return cls_.size(); }
    uint64_t total_weight() const;

    friend bool operator==(const CnfSystem&, const CnfSystem&) = default;

  private:
    int nvars_ = 0;
    std::vector<CnfClause> cls_;  // sorted by (v, s), unique
};

uint64_t sat_weight(const XorSystem& sys, const std::vector<uint8_t>& x);
uint64_t sat_weight(const CnfSystem& sys, const std::vector<uint8_t>& x);

// Satisfied fraction by total multiplicity; an empty system counts as 1/1.
Rational sat_fraction(const XorSystem& sys, const std::vector<uint8_t>& x);
Rational sat_fraction(const CnfSystem& sys, const std::vector<uint8_t>& x);

// Equation x+y+z=b becomes the four clauses whose sign patterns sum to b;
// an assignment violating the equation falsifies exactly one of the four.
CnfSystem xor_to_cnf(const XorSystem& sys);

XorSystem parse_xor(const std::string& text);
std::string write_xor(const XorSystem& sys);

// DIMACS cnf; multiplicities are encoded by clause repetition.
CnfSystem parse_cnf(const std::string& text);
std::string write_cnf(const CnfSystem& sys);

}  // namespace gapkit
