#include "label_cover.hpp"

#include <algorithm>
#include <json.hpp>

namespace gapkit {

LabelCover::LabelCover(int m, int n, int p, int q) : m_(m), n_(n), p_(p), q_(q) {
    if (m < 0 || n < 0) throw InvalidArgument("negative side size");
    if (p < 1 || q < 1) throw InvalidArgument("label sets must be nonempty");
    if (p > 65535 || q > 65535) throw BudgetError("label sets exceed 65535");
}

void LabelCover::add_entry(int u, int v, uint64_t w, std::vector<std::pair<int, int>> accepted) {
    if (u < 0 || u >= m_ || v < 0 || v >= n_) throw InvalidArgument("entry endpoint out of range");
    if (w == 0) throw InvalidArgument("entries must have positive weight");
    LcEntry e{u, v, w, {}};
    for (auto [a, b] : accepted) {
        if (a < 0 || a >= p_ || b < 0 || b >= q_)
            throw InvalidArgument("accepted label out of range");
        e.accepted.push_back({uint16_t(a), uint16_t(b)});
    }
    std::sort(e.accepted.begin(), e.accepted.end());
    e.accepted.erase(std::unique(e.accepted.begin(), e.accepted.end()), e.accepted.end());
    auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                               [](const LcEntry& l, const LcEntry& r) {
                                   return std::pair(l.u, l.v) < std::pair(r.u, r.v);
                               });
    if (it != entries_.end() && it->u == e.u && it->v == e.v)
        throw InvalidArgument("duplicate entry for the same (u,v)");
    entries_.insert(it, std::move(e));
}

uint64_t LabelCover::w0() const {
    uint64_t t = 0;
    for (const auto& e : entries_) t = add_u64(t, e.w, "label cover weight");
    return t;
}

bool LabelCover::accepts(const LcEntry& e, int a, int b) const {
    return std::binary_search(e.accepted.begin(), e.accepted.end(),
                              std::pair(uint16_t(a), uint16_t(b)));
}

LcFlags LabelCover::flags() const {
    LcFlags f{true, true, true, true, true};
    for (const auto& e : entries_) {
        std::vector<int> per_a(p_, 0), per_b(q_, 0);
        for (auto [a, b] : e.accepted) {
            ++per_a[a];
            ++per_b[b];
        }
        for (int a = 0; a < p_; ++a)
            if (per_a[a] != 1) f.projection = false;
        for (int b = 0; b < q_; ++b)
            if (per_b[b] != 1) f.unique_game = false;
    }
    f.unique_game = f.unique_game && f.projection && p_ == q_;

    std::vector<uint64_t> wu(m_, 0), wv(n_, 0);
    uint64_t wmin = UINT64_MAX, wmax = 0;
    for (const auto& e : entries_) {
        wu[e.u] = add_u64(wu[e.u], e.w, "left weight");
        wv[e.v] = add_u64(wv[e.v], e.w, "right weight");
        wmin = std::min(wmin, e.w);
        wmax = std::max(wmax, e.w);
    }
    for (int u = 1; u < m_; ++u)
        if (wu[u] != wu[0]) f.left_regular = false;
    for (int v = 1; v < n_; ++v)
        if (wv[v] != wv[0]) f.right_regular = false;
    f.uniform_weights = entries_.empty() || wmin == wmax;
    return f;
}

std::vector<uint16_t> LabelCover::projection_map(const LcEntry& e) const {
    std::vector<uint16_t> pi(p_, 0);
    std::vector<int> seen(p_, 0);
    for (auto [a, b] : e.accepted) {
        pi[a] = b;
        ++seen[a];
    }
    for (int a = 0; a < p_; ++a)
        if (seen[a] != 1)
            throw InvalidArgument("entry is not a projection: label " + std::to_string(a) +
                                  " has " + std::to_string(seen[a]) + " accepted images");
    return pi;
}

Rational lc_value(const LabelCover& lc, const std::vector<int>& f, const std::vector<int>& g) {
    if (int(f.size()) != lc.m() || int(g.size()) != lc.n())
        throw InvalidArgument("assignment length mismatch");
    for (int x : f)
        if (x < 0 || x >= lc.p()) throw InvalidArgument("left label out of range");
    for (int x : g)
        if (x < 0 || x >= lc.q()) throw InvalidArgument("right label out of range");
    uint64_t total = lc.w0();
    if (total == 0) throw InvalidArgument("lc_value: instance has no weight");
    uint64_t sat = 0;
    for (const auto& e : lc.entries())
        if (lc.accepts(e, f[e.u], g[e.v])) sat = add_u64(sat, e.w, "satisfied weight");
    return Rational(int64_t(sat), int64_t(total));
}

LabelCover bipartite_reduction(const XorSystem& sys) {
    static constexpr int kEven[4][3] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    LabelCover lc(int(sys.size()), sys.nvars(), 4, 2);
    for (size_t u = 0; u < sys.size(); ++u) {
        const auto& c = sys.constraints()[u];
        for (int pos = 0; pos < 3; ++pos) {
            std::vector<std::pair<int, int>> acc;
            for (int a = 0; a < 4; ++a) acc.push_back({a, kEven[a][pos] ^ c.rhs});
            lc.add_entry(int(u), c.v[pos], c.mult, std::move(acc));
        }
    }
    return lc;
}

LabelCover parallel_repetition(const LabelCover& lc, int t, RepetitionBudget budget) {
    if (t < 1) throw InvalidArgument("repetition count must be at least 1");
    uint64_t mt = 1, nt = 1, pt = 1, qt = 1, et = 1;
    for (int i = 0; i < t; ++i) {
        mt = mul_u64(mt, uint64_t(lc.m()), "repeated left side");
        nt = mul_u64(nt, uint64_t(lc.n()), "repeated right side");
        pt = mul_u64(pt, uint64_t(lc.p()), "repeated left labels");
        qt = mul_u64(qt, uint64_t(lc.q()), "repeated right labels");
        et = mul_u64(et, uint64_t(lc.entries().size()), "repeated entries");
    }
    if (pt > budget.max_labels || qt > budget.max_labels)
        throw BudgetError("parallel repetition: label space " + std::to_string(pt) + "x" +
                          std::to_string(qt) + " exceeds budget");
    if (et > budget.max_entries)
        throw BudgetError("parallel repetition: " + std::to_string(et) +
                          " entries exceed budget");
    if (pt > 65535 || qt > 65535)
        throw BudgetError("parallel repetition: labels exceed 65535");

    LabelCover out(static_cast<int>(mt), static_cast<int>(nt), static_cast<int>(pt),
                   static_cast<int>(qt));
    if (lc.entries().empty()) return out;

    uint64_t pair_budget = budget.max_pairs;
    std::vector<size_t> idx(t, 0);
    for (;;) {
        int u = 0, v = 0;
        uint64_t w = 1;
        uint64_t npairs = 1;
        for (int i = 0; i < t; ++i) {
            const auto& e = lc.entries()[idx[i]];
            u = u * lc.m() + e.u;
            v = v * lc.n() + e.v;
            w = mul_u64(w, e.w, "repeated weight");
            npairs = mul_u64(npairs, e.accepted.size(), "repeated accepted pairs");
        }
        if (npairs > pair_budget)
            throw BudgetError("parallel repetition: accepted pairs exceed budget");
        pair_budget -= npairs;

        std::vector<std::pair<int, int>> acc;
        acc.reserve(npairs);
        if (npairs > 0) {
            std::vector<size_t> ai(t, 0);
            for (;;) {
                int a = 0, b = 0;
                for (int i = 0; i < t; ++i) {
                    auto [ca, cb] = lc.entries()[idx[i]].accepted[ai[i]];
                    a = a * lc.p() + ca;
                    b = b * lc.q() + cb;
                }
                acc.push_back({a, b});
                int j = t - 1;
                while (j >= 0 && ++ai[j] == lc.entries()[idx[j]].accepted.size()) ai[j--] = 0;
                if (j < 0) break;
            }
        }
        out.add_entry(u, v, w, std::move(acc));

        int j = t - 1;
        while (j >= 0 && ++idx[j] == lc.entries().size()) idx[j--] = 0;
        if (j < 0) break;
    }
    return out;
}

LabelCover parse_labelcover_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad json: ") + e.what());
    }
    try {
        LabelCover lc(j.at("m").get<int>(), j.at("n").get<int>(), j.at("p").get<int>(),
                      j.at("q").get<int>());
        for (const auto& je : j.at("entries")) {
            int u = je.at("u").get<int>(), v = je.at("v").get<int>();
            uint64_t w = je.at("w").get<uint64_t>();
            auto pi = je.at("pi").get<std::vector<int>>();
            if (int(pi.size()) != lc.p())
                throw ParseError("pi must list one image per left label");
            std::vector<std::pair<int, int>> acc;
            for (int a = 0; a < lc.p(); ++a) acc.push_back({a, pi[a]});
            lc.add_entry(u, v, w, std::move(acc));
        }
        if (j.contains("flags")) {
            const auto& jf = j.at("flags");
            LcFlags stated{jf.at("projection").get<bool>(),
                           jf.at("unique").get<bool>(),
                           jf.at("left_regular").get<bool>(),
                           jf.at("right_regular").get<bool>(),
                           jf.at("uniform_weights").get<bool>()};
            if (!(stated == lc.flags()))
                throw ParseError("stated flags disagree with the recomputed flags");
        }
        return lc;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad label cover: ") + e.what());
    }
}

std::string write_labelcover_json(const LabelCover& lc) {
    nlohmann::json j;
    j["m"] = lc.m();
    j["n"] = lc.n();
    j["p"] = lc.p();
    j["q"] = lc.q();
    j["entries"] = nlohmann::json::array();
    for (const auto& e : lc.entries()) {
        nlohmann::json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["w"] = e.w;
        je["pi"] = lc.projection_map(e);
        j["entries"].push_back(std::move(je));
    }
    LcFlags f = lc.flags();
    j["flags"] = {{"projection", f.projection},
                  {"unique", f.unique_game},
                  {"left_regular", f.left_regular},
                  {"right_regular", f.right_regular},
                  {"uniform_weights", f.uniform_weights}};
    return j.dump(2) + "\n";
}

}  // namespace gapkit
