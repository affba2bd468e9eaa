#include "graph_reductions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <unordered_map>
#include <vector>

namespace gapkit {

namespace {

bool conflicting(const std::array<int, 3>& va, const std::array<uint8_t, 3>& xa,
                 const std::array<int, 3>& vb, const std::array<uint8_t, 3>& xb) {
    int i = 0, j = 0;
    while (i < 3 && j < 3) {
        if (va[i] == vb[j]) {
            if (xa[i] != xb[j]) return true;
            ++i, ++j;
        } else if (va[i] < vb[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

uint64_t comb_rank(int n, const std::vector<int>& c) {
    uint64_t r = 0;
    int l = int(c.size()), prev = -1;
    for (int i = 0; i < l; ++i) {
        for (int x = prev + 1; x < c[i]; ++x)
            r = add_u64(r, binom_u64(uint64_t(n - 1 - x), uint64_t(l - 1 - i)), "combination rank");
        prev = c[i];
    }
    return r;
}

bool next_combination(std::vector<int>& c, int n) {
    int l = int(c.size());
    for (int i = l - 1; i >= 0; --i) {
        if (c[i] < n - l + i) {
            ++c[i];
            for (int j = i + 1; j < l; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// drop bit pos, shifting the higher bits down
uint32_t squeeze(uint32_t mask, int pos) {
    return ((mask >> (pos + 1)) << pos) | (mask & ((uint32_t(1) << pos) - 1));
}

// inverse of squeeze, inserting bit value c at pos
uint32_t unsqueeze(uint32_t mask, int pos, uint32_t c) {
    return ((mask >> pos) << (pos + 1)) | (c << pos) | (mask & ((uint32_t(1) << pos) - 1));
}

struct BlockFrame {
    int l = 0;
    int q = 0;
    std::vector<uint32_t> fam;   // masks over [l] with popcount >= l1, ascending
    std::vector<int> famidx;     // mask -> family position, -1 outside
    uint64_t nblocks = 0;
};

BlockFrame open_blocks(const Graph& g, int l1, const char* who) {
    if (!g.copartite())
        throw InvalidArgument(std::string(who) + ": co-partite certificate required");
    if (l1 < 1) throw InvalidArgument(std::string(who) + ": l1 must be positive");
    int r = g.copartite()->psize;
    if (l1 > 10 || r > 10) throw BudgetError(std::string(who) + ": block size too large");
    BlockFrame f;
    f.l = 2 * l1 * r;
    if (f.l > 20) throw BudgetError(std::string(who) + ": block size too large");
    if (g.n() < f.l) throw InvalidArgument(std::string(who) + ": fewer vertices than block size");
    uint64_t q = 0;
    for (int i = l1; i <= f.l; ++i) q = add_u64(q, binom_u64(uint64_t(f.l), uint64_t(i)));
    if (q > 25) throw BudgetError(std::string(who) + ": subset family too large");
    f.q = int(q);
    f.fam.reserve(q);
    f.famidx.assign(size_t(1) << f.l, -1);
    for (uint32_t a = 0; a < (uint32_t(1) << f.l); ++a)
        if (std::popcount(a) >= l1) {
            f.famidx[a] = int(f.fam.size());
            f.fam.push_back(a);
        }
    f.nblocks = binom_u64(uint64_t(g.n()), uint64_t(f.l));
    return f;
}

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const BudgetError& e) {
        std::string msg = e.what();
        if (msg.rfind(name, 0) == 0) throw;
        throw BudgetError(std::string(name) + ": " + msg);
    }
}

}  // namespace

Graph fglss(const XorSystem& sys, uint64_t max_vertices) {
    uint64_t copies = 0;
    for (const auto& c : sys.constraints()) copies = add_u64(copies, c.mult, "fglss copies");
    uint64_t nv = mul_u64(copies, 4, "fglss vertices");
    if (nv > max_vertices || nv > (uint64_t(1) << 30))
        throw BudgetError("fglss: vertex budget exceeded");

    std::vector<std::array<int, 3>> var;
    std::vector<std::array<uint8_t, 3>> val;
    std::vector<std::string> labels;
    var.reserve(nv), val.reserve(nv), labels.reserve(nv);
    for (size_t ci = 0; ci < sys.constraints().size(); ++ci) {
        const auto& c = sys.constraints()[ci];
        for (uint64_t rep = 0; rep < c.mult; ++rep) {
            for (int a = 0; a < 4; ++a) {
                uint8_t y0 = uint8_t(a >> 1), y1 = uint8_t(a & 1);
                uint8_t y2 = uint8_t(c.rhs ^ y0 ^ y1);
                var.push_back(c.v);
                val.push_back({y0, y1, y2});
                labels.push_back("e" + std::to_string(ci) + "c" + std::to_string(rep) + ":" +
                                 std::to_string(y0) + std::to_string(y1) + std::to_string(y2));
            }
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < var.size(); ++i)
        for (size_t j = i + 1; j < var.size(); ++j)
            if (conflicting(var[i], val[i], var[j], val[j])) edges.push_back({int(i), int(j)});

    Graph g(int(nv), std::move(edges));
    g.set_labels(std::move(labels));
    if (copies > 0) g.set_copartite({int(copies), 4});
    return g;
}

Graph labelcover_to_graph(const LabelCover& lc, uint64_t max_vertices) {
    if (!lc.flags().projection)
        throw InvalidArgument("labelcover_to_graph: projection game required");
    int p = lc.p();
    uint64_t nv = mul_u64(uint64_t(lc.m()), uint64_t(p), "conflict graph vertices");
    if (nv > max_vertices || nv > (uint64_t(1) << 30))
        throw BudgetError("labelcover_to_graph: vertex budget exceeded");

    std::vector<std::vector<size_t>> byv(size_t(lc.n()));
    for (size_t i = 0; i < lc.entries().size(); ++i)
        byv[size_t(lc.entries()[i].v)].push_back(i);
    uint64_t work = mul_u64(uint64_t(lc.m()), uint64_t(p) * uint64_t(p), "conflict graph work");
    for (const auto& list : byv)
        work = add_u64(work,
                       mul_u64(uint64_t(list.size() * list.size()), uint64_t(p) * uint64_t(p),
                               "conflict graph work"),
                       "conflict graph work");
    if (work > (uint64_t(1) << 26)) throw BudgetError("labelcover_to_graph: work budget exceeded");

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < lc.m(); ++u)
        for (int a = 0; a < p; ++a)
            for (int a2 = a + 1; a2 < p; ++a2) edges.push_back({u * p + a, u * p + a2});
    for (const auto& list : byv) {
        for (size_t i = 0; i < list.size(); ++i) {
            const auto& e1 = lc.entries()[list[i]];
            auto p1 = lc.projection_map(e1);
            for (size_t j = i + 1; j < list.size(); ++j) {
                const auto& e2 = lc.entries()[list[j]];
                auto p2 = lc.projection_map(e2);
                for (int a1 = 0; a1 < p; ++a1)
                    for (int a2 = 0; a2 < p; ++a2)
                        if (p1[a1] != p2[a2])
                            edges.push_back({e1.u * p + a1, e2.u * p + a2});
            }
        }
    }

    Graph g(int(nv), std::move(edges));
    std::vector<std::string> labels(nv);
    for (int u = 0; u < lc.m(); ++u)
        for (int a = 0; a < p; ++a)
            labels[size_t(u) * size_t(p) + size_t(a)] =
                "u" + std::to_string(u) + ":" + std::to_string(a);
    g.set_labels(std::move(labels));
    if (lc.m() > 0 && p > 0) g.set_copartite({lc.m(), p});
    return g;
}

Graph dinur_safra(const Graph& g, const Rational& bias, int l1, const DsBudget& budget) {
    if (bias.num() <= 0 || bias.num() >= bias.den())
        throw InvalidArgument("dinur_safra: bias must be in (0,1)");
    BlockFrame f = open_blocks(g, l1, "dinur_safra");
    uint64_t N = uint64_t(bias.num()), M = uint64_t(bias.den());
    uint64_t nv = mul_u64(f.nblocks, uint64_t(1) << f.q, "dinur_safra vertices");
    if (nv == 0) throw InvalidArgument("dinur_safra: empty vertex set");
    if (nv > budget.max_vertices || nv > (uint64_t(1) << 30))
        throw BudgetError("dinur_safra: vertex budget exceeded");

    std::vector<uint64_t> wpop(size_t(f.q) + 1);
    for (int s = 0; s <= f.q; ++s)
        wpop[size_t(s)] = mul_u64(pow_u64(N, unsigned(s), "dinur_safra weight"),
                                  pow_u64(M - N, unsigned(f.q - s), "dinur_safra weight"),
                                  "dinur_safra weight");
    std::vector<uint64_t> weights(nv);
    uint64_t full = (uint64_t(1) << f.q) - 1;
    for (uint64_t b = 0; b < f.nblocks; ++b)
        for (uint64_t s = 0; s <= full; ++s)
            weights[(b << f.q) + s] = wpop[size_t(std::popcount(s))];

    std::vector<std::pair<int, int>> edges;
    uint64_t ecount = 0;
    auto push_edge = [&](uint64_t x, uint64_t y) {
        ecount = add_u64(ecount, 1, "dinur_safra edges");
        if (ecount > budget.max_edges) throw BudgetError("dinur_safra: edge budget exceeded");
        edges.push_back({int(x), int(y)});
    };

    // conflicts inside one block: disjoint subfamilies
    for (uint64_t b = 0; b < f.nblocks; ++b) {
        uint64_t base = b << f.q;
        for (uint64_t s1 = 0; s1 <= full; ++s1) {
            uint64_t comp = full & ~s1;
            for (uint64_t s2 = comp;; s2 = (s2 - 1) & comp) {
                if (s2 > s1) push_edge(base + s1, base + s2);
                if (s2 == 0) break;
            }
        }
    }

    // conflicts across blocks exchanging one edge of g
    if (f.nblocks > 1 && !g.edges().empty() && f.l >= 1) {
        std::vector<int> hat(size_t(f.l) - 1);
        for (int i = 0; i + 1 < f.l; ++i) hat[size_t(i)] = i;
        std::vector<uint64_t> badset(size_t(1) << f.q);
        bool more = f.l >= 1;
        while (more) {
            auto inhat = [&](int v) {
                return std::binary_search(hat.begin(), hat.end(), v);
            };
            for (const auto& [v1, v2] : g.edges()) {
                if (inhat(v1) || inhat(v2)) continue;
                std::vector<int> b1(hat), b2(hat);
                b1.insert(std::upper_bound(b1.begin(), b1.end(), v1), v1);
                b2.insert(std::upper_bound(b2.begin(), b2.end(), v2), v2);
                int pos1 = int(std::lower_bound(b1.begin(), b1.end(), v1) - b1.begin());
                int pos2 = int(std::lower_bound(b2.begin(), b2.end(), v2) - b2.begin());
                uint64_t base1 = comb_rank(g.n(), b1) << f.q;
                uint64_t base2 = comb_rank(g.n(), b2) << f.q;
                // bad2[j]: subfamilies of B2 conflicting-free is violated by fam[j] of B1
                std::vector<uint64_t> bad2(size_t(f.q), 0);
                for (int j = 0; j < f.q; ++j) {
                    uint32_t a1 = f.fam[size_t(j)];
                    uint32_t ahat = squeeze(a1, pos1);
                    bool c1 = (a1 >> pos1) & 1;
                    uint32_t z0 = unsqueeze(ahat, pos2, 0);
                    if (f.famidx[z0] >= 0) bad2[size_t(j)] |= uint64_t(1) << f.famidx[z0];
                    if (!c1) {
                        uint32_t z1 = unsqueeze(ahat, pos2, 1);
                        if (f.famidx[z1] >= 0) bad2[size_t(j)] |= uint64_t(1) << f.famidx[z1];
                    }
                }
                badset[0] = 0;
                for (uint64_t s = 1; s <= full; ++s) {
                    uint64_t low = s & (~s + 1);
                    badset[s] = badset[s ^ low] | bad2[size_t(std::countr_zero(low))];
                }
                for (uint64_t s1 = 0; s1 <= full; ++s1) {
                    uint64_t ok = full & ~badset[s1];
                    for (uint64_t s2 = ok;; s2 = (s2 - 1) & ok) {
                        push_edge(base1 + s1, base2 + s2);
                        if (s2 == 0) break;
                    }
                }
            }
            more = next_combination(hat, g.n());
        }
    }

    Graph h(int(nv), std::move(edges));
    h.set_weights(std::move(weights));
    return h;
}

DsCensus dinur_safra_census(const Graph& g, int l1, uint64_t max_pairs) {
    BlockFrame f = open_blocks(g, l1, "dinur_safra_census");
    int n = g.n(), l = f.l;
    uint64_t tuples = 1;
    for (int i = 0; i < l; ++i) tuples = mul_u64(tuples, uint64_t(n - i), "census tuples");
    uint64_t pairs = mul_u64(tuples, uint64_t(1) << f.q, "census pairs");
    if (pairs > max_pairs) throw BudgetError("dinur_safra_census: pair budget exceeded");

    uint64_t fact = 1;
    for (int i = 2; i <= l; ++i) fact = mul_u64(fact, uint64_t(i), "census class size");

    uint64_t full = (uint64_t(1) << f.q) - 1;
    std::unordered_map<uint64_t, uint64_t> counts;
    std::vector<int> tup(l);
    std::vector<char> used(size_t(n), 0);
    std::vector<int> posmap(l);
    std::vector<int> fammap(size_t(f.q));
    std::vector<uint64_t> remap(size_t(1) << f.q);

    auto visit = [&]() {
        std::vector<int> sorted(tup);
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < l; ++i)
            posmap[size_t(i)] =
                int(std::lower_bound(sorted.begin(), sorted.end(), tup[size_t(i)]) - sorted.begin());
        for (int j = 0; j < f.q; ++j) {
            uint32_t a = f.fam[size_t(j)], out = 0;
            for (int i = 0; i < l; ++i)
                if ((a >> i) & 1) out |= uint32_t(1) << posmap[size_t(i)];
            fammap[size_t(j)] = f.famidx[out];
        }
        uint64_t base = comb_rank(n, sorted) << f.q;
        remap[0] = 0;
        for (uint64_t s = 1; s <= full; ++s) {
            uint64_t low = s & (~s + 1);
            remap[s] = remap[s ^ low] | (uint64_t(1) << fammap[size_t(std::countr_zero(low))]);
        }
        for (uint64_t s = 0; s <= full; ++s) ++counts[base + remap[s]];
    };

    // ordered tuples of distinct vertices
    int depth = 0;
    std::vector<int> cursor(size_t(l), 0);
    while (depth >= 0) {
        if (depth == l) {
            visit();
            --depth;
            if (depth >= 0) used[size_t(tup[size_t(depth)])] = 0, ++cursor[size_t(depth)];
            continue;
        }
        int& v = cursor[size_t(depth)];
        while (v < n && used[size_t(v)]) ++v;
        if (v >= n) {
            --depth;
            if (depth >= 0) used[size_t(tup[size_t(depth)])] = 0, ++cursor[size_t(depth)];
            continue;
        }
        tup[size_t(depth)] = v;
        used[size_t(v)] = 1;
        ++depth;
        if (depth < l) cursor[size_t(depth)] = 0;
    }

    DsCensus out;
    out.pairs = pairs;
    out.classes = counts.size();
    out.class_size = fact;
    out.uniform = true;
    for (const auto& [id, c] : counts)
        if (c != fact) out.uniform = false;
    return out;
}

Graph unweight(const Graph& g, uint64_t max_vertices, uint64_t max_edges) {
    if (!g.weighted()) return Graph(g.n(), g.edges());
    std::vector<uint64_t> start(size_t(g.n()) + 1, 0);
    for (int v = 0; v < g.n(); ++v)
        start[size_t(v) + 1] = add_u64(start[size_t(v)], g.weight(v), "unweight vertices");
    uint64_t nv = start[size_t(g.n())];
    if (nv > max_vertices || nv > (uint64_t(1) << 30))
        throw BudgetError("unweight: vertex budget exceeded");
    uint64_t ne = 0;
    for (const auto& [u, v] : g.edges())
        ne = add_u64(ne, mul_u64(g.weight(u), g.weight(v), "unweight edges"), "unweight edges");
    if (ne > max_edges) throw BudgetError("unweight: edge budget exceeded");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(ne);
    for (const auto& [u, v] : g.edges())
        for (uint64_t i = 0; i < g.weight(u); ++i)
            for (uint64_t j = 0; j < g.weight(v); ++j)
                edges.push_back({int(start[size_t(u)] + i), int(start[size_t(v)] + j)});
    return Graph(int(nv), std::move(edges));
}

PipelineXor pipeline_xor(const XorSystem& sys, int t, const Rational& epsilon,
                         const LongCodeBudget& budget, const RepetitionBudget& rb) {
    PipelineXor out;
    out.bipartite = stage("bipartite_reduction", [&] { return bipartite_reduction(sys); });
    out.repeated =
        stage("parallel_repetition", [&] { return parallel_repetition(out.bipartite, t, rb); });
    out.system =
        stage("longcode_xor", [&] { return longcode_xor(out.repeated, epsilon, &out.stats, budget); });
    return out;
}

PipelineSat pipeline_sat(const XorSystem& sys, int t, const Rational& delta,
                         const LongCodeBudget& budget, const RepetitionBudget& rb) {
    PipelineSat out;
    out.bipartite = stage("bipartite_reduction", [&] { return bipartite_reduction(sys); });
    out.repeated =
        stage("parallel_repetition", [&] { return parallel_repetition(out.bipartite, t, rb); });
    out.system =
        stage("longcode_sat", [&] { return longcode_sat(out.repeated, delta, &out.stats, budget); });
    return out;
}

PipelineSat pipeline_sat_single(const XorSystem& sys, int t, const Rational& epsilon,
                                const LongCodeBudget& budget, const RepetitionBudget& rb) {
    PipelineSat out;
    out.bipartite = stage("bipartite_reduction", [&] { return bipartite_reduction(sys); });
    out.repeated =
        stage("parallel_repetition", [&] { return parallel_repetition(out.bipartite, t, rb); });
    out.system = stage("longcode_sat_single",
                       [&] { return longcode_sat_single(out.repeated, epsilon, &out.stats, budget); });
    return out;
}

PipelineVc pipeline_vc(const XorSystem& sys, int t, const Rational& bias, int l1,
                       const DsBudget& budget, const RepetitionBudget& rb) {
    PipelineVc out;
    out.bipartite = stage("bipartite_reduction", [&] { return bipartite_reduction(sys); });
    out.repeated =
        stage("parallel_repetition", [&] { return parallel_repetition(out.bipartite, t, rb); });
    out.conflict = stage("labelcover_to_graph",
                         [&] { return labelcover_to_graph(out.repeated, budget.max_vertices); });
    out.blocks = stage("dinur_safra", [&] { return dinur_safra(out.conflict, bias, l1, budget); });
    out.unweighted =
        stage("unweight", [&] { return unweight(out.blocks, budget.max_vertices, budget.max_edges); });
    return out;
}

}  // namespace gapkit
