#include "rel_structure.hpp"

#include <algorithm>

namespace gapkit {

RelStructure::RelStructure(Vocabulary voc, int n) : voc_(std::move(voc)), n_(n) {
    if (n < 0) throw InvalidArgument("negative universe size");
    for (const auto& r : voc_.rels)
        if (r.arity < 1 || r.arity > 3) throw InvalidArgument("arity out of range for " + r.name);
    tuples_.resize(voc_.rels.size());
    index_.resize(voc_.rels.size());
}

uint64_t RelStructure::encode(int rel, const std::vector<int>& t) const {
    if (rel < 0 || rel >= int(voc_.rels.size())) throw InvalidArgument("relation index");
    if (int(t.size()) != voc_.rels[rel].arity) throw InvalidArgument("tuple arity mismatch");
    uint64_t key = 0;
    for (int x : t) {
        if (x < 0 || x >= n_) throw InvalidArgument("tuple element out of range");
        key = key * uint64_t(n_ + 1) + uint64_t(x + 1);
    }
    return key;
}

void RelStructure::add_tuple(int rel, const std::vector<int>& t) {
    uint64_t key = encode(rel, t);
    if (!index_[rel].insert(key).second) return;
    auto& ts = tuples_[rel];
    ts.insert(std::lower_bound(ts.begin(), ts.end(), t), t);
}

bool RelStructure::has_tuple(int rel, const std::vector<int>& t) const {
    return index_[rel].count(encode(rel, t)) != 0;
}

std::string sat_rel_name(int pattern) {
    return "R" + std::to_string(pattern + 1);
}

namespace {

Vocabulary xor_second_voc() {
    return Vocabulary{{{"R0", 3}, {"R1", 3}}};
}

Vocabulary sat_second_voc() {
    Vocabulary v;
    for (int p = 0; p < 8; ++p) v.rels.push_back({sat_rel_name(p), 3});
    return v;
}

Vocabulary first_voc(const Vocabulary& second) {
    Vocabulary v{{{"E1", 2}, {"E2", 2}, {"E3", 2}}};
    for (const auto& r : second.rels) v.rels.push_back({"Z_" + r.name, 1});
    return v;
}

int clause_pattern(const CnfClause& c) {
    return c.s[0] * 4 + c.s[1] * 2 + c.s[2];
}

}  // namespace

RelStructure encode_second(const XorSystem& sys) {
    RelStructure s(xor_second_voc(), sys.nvars());
    for (const auto& c : sys.constraints())
        s.add_tuple(c.rhs, {c.v[0], c.v[1], c.v[2]});
    return s;
}

RelStructure encode_second(const CnfSystem& sys) {
    RelStructure s(sat_second_voc(), sys.nvars());
    for (const auto& c : sys.clauses())
        s.add_tuple(clause_pattern(c), {c.v[0], c.v[1], c.v[2]});
    return s;
}

RelStructure encode_first(const XorSystem& sys) {
    uint64_t copies = sys.total_weight();
    if (uint64_t(sys.nvars()) + copies > 100000)
        throw BudgetError("first encoding universe exceeds 100000 elements");
    RelStructure s(first_voc(xor_second_voc()), sys.nvars() + int(copies));
    int e = sys.nvars();
    for (const auto& c : sys.constraints())
        for (uint64_t i = 0; i < c.mult; ++i, ++e) {
            for (int pos = 0; pos < 3; ++pos) s.add_tuple(pos, {c.v[pos], e});
            s.add_tuple(3 + c.rhs, {e});
        }
    return s;
}

RelStructure encode_first(const CnfSystem& sys) {
    uint64_t copies = sys.total_weight();
    if (uint64_t(sys.nvars()) + copies > 100000)
        throw BudgetError("first encoding universe exceeds 100000 elements");
    RelStructure s(first_voc(sat_second_voc()), sys.nvars() + int(copies));
    int e = sys.nvars();
    for (const auto& c : sys.clauses())
        for (uint64_t i = 0; i < c.mult; ++i, ++e) {
            for (int pos = 0; pos < 3; ++pos) s.add_tuple(pos, {c.v[pos], e});
            s.add_tuple(3 + clause_pattern(c), {e});
        }
    return s;
}

RelStructure encode_language(Lang lang, Encoding enc) {
    bool is_xor = lang == Lang::Xor3;
    Vocabulary second = is_xor ? xor_second_voc() : sat_second_voc();
    int nrels = int(second.rels.size());

    auto in_rel = [&](int rel, int b0, int b1, int b2) {
        if (is_xor) return (b0 ^ b1 ^ b2) == rel;
        // The unique falsifying triple of sign pattern s is (1+s0, 1+s1, 1+s2).
        int f0 = ((rel >> 2) & 1) ^ 1, f1 = ((rel >> 1) & 1) ^ 1, f2 = (rel & 1) ^ 1;
        return !(b0 == f0 && b1 == f1 && b2 == f2);
    };

    if (enc == Encoding::Second) {
        RelStructure s(second, 2);
        for (int rel = 0; rel < nrels; ++rel)
            for (int b0 = 0; b0 < 2; ++b0)
                for (int b1 = 0; b1 < 2; ++b1)
                    for (int b2 = 0; b2 < 2; ++b2)
                        if (in_rel(rel, b0, b1, b2)) s.add_tuple(rel, {b0, b1, b2});
        return s;
    }

    // Universe: the two domain values, then the eight triples (b0,b1,b2)
    // at element 2 + 4*b0 + 2*b1 + b2.
    RelStructure s(first_voc(second), 10);
    for (int t = 0; t < 8; ++t) {
        int b[3] = {(t >> 2) & 1, (t >> 1) & 1, t & 1};
        for (int pos = 0; pos < 3; ++pos) s.add_tuple(pos, {b[pos], 2 + t});
        for (int rel = 0; rel < nrels; ++rel)
            if (in_rel(rel, b[0], b[1], b[2])) s.add_tuple(3 + rel, {2 + t});
    }
    return s;
}

RelStructure graph_structure(const Graph& g) {
    RelStructure s(Vocabulary{{{"E", 2}}}, g.n());
    for (auto [u, v] : g.edges()) {
        s.add_tuple(0, {u, v});
        s.add_tuple(0, {v, u});
    }
    return s;
}

RelStructure disjoint_union(const RelStructure& a, const RelStructure& b) {
    if (!(a.voc() == b.voc())) throw InvalidArgument("disjoint union over different vocabularies");
    RelStructure s(a.voc(), a.n() + b.n());
    for (size_t r = 0; r < a.voc().rels.size(); ++r) {
        for (const auto& t : a.tuples()[r]) s.add_tuple(int(r), t);
        for (auto t : b.tuples()[r]) {
            for (auto& x : t) x += a.n();
            s.add_tuple(int(r), t);
        }
    }
    return s;
}

}  // namespace gapkit
