#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace gapkit {

namespace {

// Shared scan over assignments r in [lo, hi). Bit (n-1-j) of r is x_j, so
// ascending r is ascending lexicographic order of the assignment vector.
template <class SatWeight>
std::pair<uint64_t, uint64_t> scan_range(uint64_t lo, uint64_t hi, SatWeight&& weight_of) {
    uint64_t best = 0, best_r = lo;
    bool any = false;
    for (uint64_t r = lo; r < hi; ++r) {
        uint64_t w = weight_of(r);
        if (!any || w > best) {
            best = w;
            best_r = r;
            any = true;
        }
    }
    return {best, best_r};
}

std::vector<uint8_t> unpack_assignment(uint64_t r, int n) {
    std::vector<uint8_t> x(n);
    for (int j = 0; j < n; ++j) x[size_t(j)] = uint8_t((r >> (n - 1 - j)) & 1);
    return x;
}

template <class SatWeight>
OptResult exhaustive_assignment_opt(int n, uint64_t total, SatWeight&& weight_of, int cap,
                                    int jobs, const char* what) {
    if (n > cap)
        throw BudgetError(std::string(what) + ": refusing 2^" + std::to_string(n) +
                          " enumeration, cap is 2^" + std::to_string(cap));
    OptResult res;
    res.total = total;
    if (n == 0) {
        res.value = weight_of(uint64_t(0));
        res.explored = 1;
        res.fraction = total == 0 ? Rational(1) : Rational(int64_t(res.value), int64_t(total));
        return res;
    }
    uint64_t span = uint64_t(1) << n;
    int nthreads = std::clamp(jobs, 1, 64);
    std::pair<uint64_t, uint64_t> best{0, 0};
    if (nthreads == 1 || span < 1024) {
        best = scan_range(0, span, weight_of);
    } else {
        std::vector<std::pair<uint64_t, uint64_t>> parts(nthreads);
        std::vector<std::thread> pool;
        uint64_t chunk = span / uint64_t(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            uint64_t lo = chunk * uint64_t(t);
            uint64_t hi = t + 1 == nthreads ? span : lo + chunk;
            pool.emplace_back(
                [&, t, lo, hi] { parts[size_t(t)] = scan_range(lo, hi, weight_of); });
        }
        for (auto& th : pool) th.join();
        best = parts[0];
        for (int t = 1; t < nthreads; ++t)
            if (parts[size_t(t)].first > best.first) best = parts[size_t(t)];
    }
    res.value = best.first;
    res.explored = span;
    res.assignment = unpack_assignment(best.second, n);
    res.fraction = total == 0 ? Rational(1) : Rational(int64_t(res.value), int64_t(total));
    return res;
}

}  // namespace

OptResult max_xor(const XorSystem& sys, int cap, int jobs) {
    int n = sys.nvars();
    struct Row {
        int s0, s1, s2;
        uint8_t rhs;
        uint64_t mult;
    };
    std::vector<Row> rows;
    rows.reserve(sys.size());
    for (const auto& c : sys.constraints())
        rows.push_back({n - 1 - c.v[0], n - 1 - c.v[1], n - 1 - c.v[2], c.rhs, c.mult});
    auto weight_of = [&rows](uint64_t r) {
        uint64_t w = 0;
        for (const auto& row : rows)
            if ((((r >> row.s0) ^ (r >> row.s1) ^ (r >> row.s2)) & 1) == row.rhs) w += row.mult;
        return w;
    };
    OptResult res =
        exhaustive_assignment_opt(n, sys.total_weight(), weight_of, cap, jobs, "max_xor");
    if (!res.assignment.empty() && sat_weight(sys, res.assignment) != res.value)
        throw Error("max_xor: witness re-verification failed");
    return res;
}

OptResult max_cnf(const CnfSystem& sys, int cap, int jobs) {
    int n = sys.nvars();
    struct Row {
        int s[3];
        uint8_t want[3];
        uint64_t mult;
    };
    std::vector<Row> rows;
    rows.reserve(sys.size());
    for (const auto& c : sys.clauses()) {
        Row row;
        for (int i = 0; i < 3; ++i) {
            row.s[i] = n - 1 - c.v[i];
            row.want[i] = c.s[i];
        }
        row.mult = c.mult;
        rows.push_back(row);
    }
    auto weight_of = [&rows](uint64_t r) {
        uint64_t w = 0;
        for (const auto& row : rows) {
            bool sat = false;
            for (int i = 0; i < 3 && !sat; ++i)
                sat = ((r >> row.s[i]) & 1) == row.want[i];
            if (sat) w += row.mult;
        }
        return w;
    };
    OptResult res =
        exhaustive_assignment_opt(n, sys.total_weight(), weight_of, cap, jobs, "max_cnf");
    if (!res.assignment.empty() && sat_weight(sys, res.assignment) != res.value)
        throw Error("max_cnf: witness re-verification failed");
    return res;
}

std::optional<std::vector<uint8_t>> xor_solve(const XorSystem& sys) {
    int n = sys.nvars();
    size_t words = size_t(n) / 64 + 1;  // coefficient bits 0..n-1, augmented bit n
    auto get = [words](const std::vector<uint64_t>& row, int bit) {
        return (row[size_t(bit) / 64] >> (size_t(bit) % 64)) & 1;
    };
    std::vector<std::vector<uint64_t>> rows;
    rows.reserve(sys.size());
    for (const auto& c : sys.constraints()) {
        std::vector<uint64_t> row(words, 0);
        for (int v : c.v) row[size_t(v) / 64] ^= uint64_t(1) << (size_t(v) % 64);
        if (c.rhs) row[size_t(n) / 64] ^= uint64_t(1) << (size_t(n) % 64);
        rows.push_back(std::move(row));
    }
    std::vector<std::pair<int, size_t>> pivots;  // (column, row index)
    size_t next = 0;
    for (int col = 0; col < n && next < rows.size(); ++col) {
        size_t hit = rows.size();
        for (size_t i = next; i < rows.size(); ++i)
            if (get(rows[i], col)) {
                hit = i;
                break;
            }
        if (hit == rows.size()) continue;
        std::swap(rows[next], rows[hit]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == next || !get(rows[i], col)) continue;
            for (size_t w = 0; w < words; ++w) rows[i][w] ^= rows[next][w];
        }
        pivots.push_back({col, next});
        ++next;
    }
    for (size_t i = next; i < rows.size(); ++i) {
        bool zero = true;
        for (size_t w = 0; w < words && zero; ++w) {
            uint64_t word = rows[i][w];
            if (w == size_t(n) / 64) word &= ~(uint64_t(1) << (size_t(n) % 64));
            zero = word == 0;
        }
        if (zero && get(rows[i], n)) return std::nullopt;
    }
    std::vector<uint8_t> x(size_t(n), 0);
    for (auto [col, row] : pivots) x[size_t(col)] = uint8_t(get(rows[row], n));
    return x;
}

bool xor_satisfiable(const XorSystem& sys) { return xor_solve(sys).has_value(); }

LcOpt labelcover_opt(const LabelCover& lc, uint64_t cap) {
    uint64_t m = lc.m(), n = lc.n(), p = lc.p(), q = lc.q();
    uint64_t assignments = 1;
    for (uint64_t i = 0; i < m; ++i) {
        assignments = mul_u64(assignments, p, "labelcover_opt enumeration");
        if (assignments > cap)
            throw BudgetError("labelcover_opt: refusing p^m = " + std::to_string(p) + "^" +
                              std::to_string(m) + " enumeration, cap " + std::to_string(cap));
    }
    std::vector<std::vector<size_t>> by_v(n);
    for (size_t e = 0; e < lc.entries().size(); ++e)
        by_v[lc.entries()[e].v].push_back(e);
    LcOpt best;
    best.f.assign(size_t(m), 0);
    best.g.assign(size_t(n), 0);
    if (lc.w0() == 0) return best;  // no weight at stake, value 1/1 by convention
    uint64_t total = lc.w0();
    std::vector<int> f(size_t(m), 0);
    uint64_t best_val = 0;
    bool any = false;
    std::vector<int> g(n);
    std::vector<uint64_t> score(q);
    for (;;) {
        uint64_t val = 0;
        for (size_t v = 0; v < n; ++v) {
            std::fill(score.begin(), score.end(), 0);
            for (size_t e : by_v[v]) {
                const auto& ent = lc.entries()[e];
                for (auto [a, b] : ent.accepted)
                    if (a == f[ent.u]) score[b] += ent.w;
            }
            size_t arg = 0;
            for (size_t b = 1; b < q; ++b)
                if (score[b] > score[arg]) arg = b;
            g[v] = int(arg);
            val += score[arg];
        }
        if (!any || val > best_val) {
            best_val = val;
            best.f = f;
            best.g = g;
            any = true;
        }
        // odometer, coordinate m-1 fastest: ascent is lexicographic on f
        size_t i = size_t(m);
        while (i > 0) {
            --i;
            if (uint64_t(++f[i]) < p) break;
            f[i] = 0;
            if (i == 0) {
                best.value = Rational(int64_t(best_val), int64_t(total));
                return best;
            }
        }
        if (m == 0) break;
    }
    best.value = Rational(int64_t(best_val), int64_t(total));
    return best;
}

namespace {

// Weighted max independent set over bitmask graphs, with forced decisions.
// Everything below works on at most 63 vertices.
struct MisSolver {
    int n;
    std::vector<uint64_t> adj;
    std::vector<uint64_t> w;
    uint64_t best = 0;
    uint64_t nodes = 0;

    uint64_t weight_sum(uint64_t mask) const {
        uint64_t s = 0;
        while (mask) {
            int v = std::countr_zero(mask);
            mask &= mask - 1;
            s += w[size_t(v)];
        }
        return s;
    }

    void branch(uint64_t avail, uint64_t cur) {
        ++nodes;
        if (cur > best) best = cur;
        if (!avail) return;
        if (cur + weight_sum(avail) <= best) return;
        int pick = -1, deg = -1;
        uint64_t scan = avail;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(adj[size_t(v)] & avail);
            if (d > deg) {
                deg = d;
                pick = v;
            }
        }
        uint64_t bit = uint64_t(1) << pick;
        branch(avail & ~bit & ~adj[size_t(pick)], cur + w[size_t(pick)]);
        branch(avail & ~bit, cur);
    }

    // Max IS weight subject to in_mask included, out_mask excluded;
    // nullopt when in_mask itself is not independent.
    std::optional<uint64_t> solve(uint64_t in_mask, uint64_t out_mask) {
        uint64_t blocked = 0;
        uint64_t scan = in_mask;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (adj[size_t(v)] & in_mask) return std::nullopt;
            blocked |= adj[size_t(v)];
        }
        uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
        best = 0;
        branch(all & ~in_mask & ~out_mask & ~blocked, 0);
        return weight_sum(in_mask) + best;
    }
};

MisSolver make_mis(const Graph& g, int cap, const char* what) {
    if (g.n() > cap)
        throw BudgetError(std::string(what) + ": refusing n=" + std::to_string(g.n()) +
                          " search, cap " + std::to_string(cap));
    if (g.n() > 63) throw BudgetError(std::string(what) + ": bitmask solver limit is 63");
    MisSolver s;
    s.n = g.n();
    s.adj.assign(size_t(g.n()), 0);
    for (auto [u, v] : g.edges()) {
        s.adj[size_t(u)] |= uint64_t(1) << v;
        s.adj[size_t(v)] |= uint64_t(1) << u;
    }
    s.w.assign(size_t(g.n()), 1);
    if (g.weighted())
        for (int v = 0; v < g.n(); ++v) s.w[size_t(v)] = g.weight(v);
    return s;
}

std::vector<int> mask_to_vertices(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        out.push_back(v);
    }
    return out;
}

OptResult finish_set_result(const Graph& g, uint64_t value, uint64_t mask) {
    OptResult res;
    res.value = value;
    res.total = g.total_weight();
    res.fraction = res.total == 0 ? Rational(1) : Rational(int64_t(value), int64_t(res.total));
    res.vertices = mask_to_vertices(mask);
    return res;
}

void check_cover(const Graph& g, uint64_t mask, uint64_t claimed) {
    uint64_t w = 0;
    for (int v : mask_to_vertices(mask)) w += g.weight(v);
    if (w != claimed) throw Error("min_vc: witness weight mismatch");
    for (auto [u, v] : g.edges())
        if (!((mask >> u) & 1) && !((mask >> v) & 1))
            throw Error("min_vc: witness leaves an edge uncovered");
}

void check_independent(const Graph& g, uint64_t mask, uint64_t claimed, const char* what) {
    uint64_t w = 0;
    for (int v : mask_to_vertices(mask)) w += g.weight(v);
    if (w != claimed) throw Error(std::string(what) + ": witness weight mismatch");
    for (auto [u, v] : g.edges())
        if (((mask >> u) & 1) && ((mask >> v) & 1))
            throw Error(std::string(what) + ": witness contains an edge");
}

}  // namespace

OptResult max_is(const Graph& g, int cap) {
    MisSolver s = make_mis(g, cap, "max_is");
    uint64_t opt = *s.solve(0, 0);
    uint64_t in = 0, out = 0;
    for (int v = 0; v < g.n(); ++v) {
        uint64_t bit = uint64_t(1) << v;
        auto with_v = s.solve(in | bit, out);
        if (with_v && *with_v == opt)
            in |= bit;
        else
            out |= bit;
    }
    check_independent(g, in, opt, "max_is");
    OptResult res = finish_set_result(g, opt, in);
    res.explored = s.nodes;
    return res;
}

OptResult min_vc(const Graph& g, int cap) {
    MisSolver s = make_mis(g, cap, "min_vc");
    uint64_t opt_is = *s.solve(0, 0);
    uint64_t opt = g.total_weight() - opt_is;
    // Cover membership of v means exclusion from the independent set.
    uint64_t cover = 0, rest = 0;
    for (int v = 0; v < g.n(); ++v) {
        uint64_t bit = uint64_t(1) << v;
        auto without_v = s.solve(rest, cover | bit);
        if (without_v && *without_v == opt_is)
            cover |= bit;
        else
            rest |= bit;
    }
    check_cover(g, cover, opt);
    OptResult res = finish_set_result(g, opt, cover);
    res.explored = s.nodes;
    return res;
}

namespace {

// Max weight of a set inducing no h-clique, again with forced decisions.
struct CliqueFreeSolver {
    int n, h;
    std::vector<uint64_t> adj;
    std::vector<uint64_t> w;
    uint64_t best = 0;
    uint64_t nodes = 0;

    bool has_clique(uint64_t mask, int need) const {
        if (need == 0) return true;
        if (std::popcount(mask) < need) return false;
        int v = std::countr_zero(mask);
        uint64_t rest = mask & (mask - 1);
        return has_clique(rest & adj[size_t(v)], need - 1) || has_clique(rest, need);
    }

    uint64_t weight_sum(uint64_t mask) const {
        uint64_t s = 0;
        while (mask) {
            int v = std::countr_zero(mask);
            mask &= mask - 1;
            s += w[size_t(v)];
        }
        return s;
    }

    void branch(int idx, uint64_t undecided, uint64_t chosen, uint64_t cur) {
        ++nodes;
        if (cur > best) best = cur;
        if (idx >= n) return;
        uint64_t left = undecided & ~((uint64_t(1) << idx) - 1);
        if (cur + weight_sum(left) <= best) return;
        uint64_t bit = uint64_t(1) << idx;
        int next = idx + 1;
        if (!(undecided & bit)) {
            branch(next, undecided, chosen, cur);
            return;
        }
        if (!has_clique(chosen & adj[size_t(idx)], h - 1))
            branch(next, undecided, chosen | bit, cur + w[size_t(idx)]);
        branch(next, undecided, chosen, cur);
    }

    std::optional<uint64_t> solve(uint64_t in_mask, uint64_t out_mask) {
        if (has_clique(in_mask, h)) return std::nullopt;
        uint64_t all = (uint64_t(1) << n) - 1;
        best = 0;
        // chosen starts at in_mask; undecided vertices are branched in order,
        // so forced inclusions must be offered to has_clique from the start
        branch(0, all & ~in_mask & ~out_mask, in_mask, 0);
        return weight_sum(in_mask) + best;
    }
};

}  // namespace

OptResult max_hclique_free(const Graph& g, int h, int cap) {
    if (h < 2) throw InvalidArgument("max_hclique_free: h must be at least 2");
    if (g.n() > cap)
        throw BudgetError("max_hclique_free: refusing n=" + std::to_string(g.n()) +
                          " search, cap " + std::to_string(cap));
    if (g.n() > 63) throw BudgetError("max_hclique_free: bitmask solver limit is 63");
    CliqueFreeSolver s;
    s.n = g.n();
    s.h = h;
    s.adj.assign(size_t(g.n()), 0);
    for (auto [u, v] : g.edges()) {
        s.adj[size_t(u)] |= uint64_t(1) << v;
        s.adj[size_t(v)] |= uint64_t(1) << u;
    }
    s.w.assign(size_t(g.n()), 1);
    if (g.weighted())
        for (int v = 0; v < g.n(); ++v) s.w[size_t(v)] = g.weight(v);
    uint64_t opt = *s.solve(0, 0);
    uint64_t in = 0, out = 0;
    for (int v = 0; v < g.n(); ++v) {
        uint64_t bit = uint64_t(1) << v;
        auto with_v = s.solve(in | bit, out);
        if (with_v && *with_v == opt)
            in |= bit;
        else
            out |= bit;
    }
    uint64_t w = 0;
    for (int v : mask_to_vertices(in)) w += s.w[size_t(v)];
    if (w != opt || s.has_clique(in, h)) throw Error("max_hclique_free: witness re-verification failed");
    OptResult res = finish_set_result(g, opt, in);
    res.explored = s.nodes;
    return res;
}

namespace {

template <class Feasible>
OptResult exhaustive_sets(const Graph& g, int cap, bool maximize, Feasible&& ok,
                          const char* what) {
    if (g.n() > cap)
        throw BudgetError(std::string(what) + ": refusing 2^" + std::to_string(g.n()) +
                          " enumeration, cap is 2^" + std::to_string(cap));
    std::vector<uint64_t> w(size_t(g.n()), 1);
    if (g.weighted())
        for (int v = 0; v < g.n(); ++v) w[size_t(v)] = g.weight(v);
    bool any = false;
    uint64_t best_val = 0, best_mask = 0;
    std::vector<int> best_list;
    for (uint64_t mask = 0; mask < (uint64_t(1) << g.n()); ++mask) {
        if (!ok(mask)) continue;
        uint64_t val = 0;
        for (uint64_t m = mask; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            val += w[size_t(v)];
        }
        bool better = !any || (maximize ? val > best_val : val < best_val);
        if (!better && any && val == best_val) {
            auto list = mask_to_vertices(mask);
            if (std::lexicographical_compare(list.begin(), list.end(), best_list.begin(),
                                             best_list.end()))
                better = true;
        }
        if (better) {
            any = true;
            best_val = val;
            best_mask = mask;
            best_list = mask_to_vertices(mask);
        }
    }
    OptResult res = finish_set_result(g, best_val, best_mask);
    res.explored = uint64_t(1) << g.n();
    return res;
}

}  // namespace

OptResult min_vc_exhaustive(const Graph& g, int cap) {
    std::vector<uint64_t> adj(size_t(g.n()), 0);
    for (auto [u, v] : g.edges()) {
        adj[size_t(u)] |= uint64_t(1) << v;
        adj[size_t(v)] |= uint64_t(1) << u;
    }
    auto covers = [&](uint64_t mask) {
        for (auto [u, v] : g.edges())
            if (!((mask >> u) & 1) && !((mask >> v) & 1)) return false;
        return true;
    };
    return exhaustive_sets(g, cap, false, covers, "min_vc_exhaustive");
}

OptResult max_is_exhaustive(const Graph& g, int cap) {
    auto independent = [&](uint64_t mask) {
        for (auto [u, v] : g.edges())
            if (((mask >> u) & 1) && ((mask >> v) & 1)) return false;
        return true;
    };
    return exhaustive_sets(g, cap, true, independent, "max_is_exhaustive");
}

}  // namespace gapkit
