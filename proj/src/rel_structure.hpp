#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "common.hpp"
#include "graph.hpp"
#include "xor_system.hpp"

namespace gapkit {

struct RelSym {
    std::string name;
    int arity;  // 1..3
    friend bool operator==(const RelSym&, const RelSym&) = default;
};

struct Vocabulary {
    std::vector<RelSym> rels;
    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

// Finite relational structure over a fixed vocabulary, arities up to 3.
class RelStructure {
  public:
    RelStructure() = default;
    RelStructure(Vocabulary voc, int n);

    void add_tuple(int rel, const std::vector<int>& t);
    bool has_tuple(int rel, const std::vector<int>& t) const;

    int n() const { return n_; }
    const Vocabulary& voc() const { return voc_; }
    const std::vector<std::vector<std::vector<int>>>& tuples() const { return tuples_; }

    friend bool operator==(const RelStructure& a, const RelStructure& b) {
        return a.voc_ == b.voc_ && a.n_ == b.n_ && a.tuples_ == b.tuples_;
    }

  private:
    Vocabulary voc_;
    int n_ = 0;
    std::vector<std::vector<std::vector<int>>> tuples_;  // per relation, sorted, unique
    std::vector<std::unordered_set<uint64_t>> index_;

    uint64_t encode(int rel, const std::vector<int>& t) const;
};

enum class Lang { Xor3, Sat3 };
enum class Encoding { First, Second };

// Second encoding: universe = variables, one ternary relation per language
// relation, tuples in canonical (sorted-variable) order, multiplicity dropped.
RelStructure encode_second(const XorSystem& sys);
RelStructure encode_second(const CnfSystem& sys);

// First encoding: universe = variables followed by one element per constraint
// copy (multiplicities expanded), with E1,E2,E3 projections and unary Z_R marks.
RelStructure encode_first(const XorSystem& sys);
RelStructure encode_first(const CnfSystem& sys);

// Template structure of the constraint language itself, in either encoding.
RelStructure encode_language(Lang lang, Encoding enc);

// Graphs as structures with one symmetric binary relation E.
RelStructure graph_structure(const Graph& g);

// Same-vocabulary disjoint union; B's universe is shifted by A.n().
RelStructure disjoint_union(const RelStructure& a, const RelStructure& b);

// 3SAT sign patterns are indexed 0..7 as s0*4+s1*2+s2, named R1..R8; the
// relation holds on every triple except (1+s0, 1+s1, 1+s2).
std::string sat_rel_name(int pattern);

}  // namespace gapkit
