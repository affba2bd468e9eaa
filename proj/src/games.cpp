#include "games.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>

namespace gapkit {

namespace {

using Key = std::pair<uint64_t, uint64_t>;

struct KeyHash {
    size_t operator()(const Key& k) const {
        uint64_t h = k.first * 0x9e3779b97f4a7c15ull;
        h ^= k.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return size_t(h);
    }
};

// Pairs are packed two bytes each (values offset by 1 so zero means empty),
// which caps k at 8 and universe sizes at 254.
Key key_of(const Position& p) {
    uint64_t lo = 0, hi = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        uint64_t chunk = uint64_t(p[i].first + 1) | (uint64_t(p[i].second + 1) << 8);
        if (i < 4)
            lo |= chunk << (16 * i);
        else
            hi |= chunk << (16 * (i - 4));
    }
    return {lo, hi};
}

int lookup_left(const Position& p, int a) {
    for (const auto& [x, y] : p)
        if (x == a) return y;
    return -1;
}

int lookup_right(const Position& p, int b) {
    for (const auto& [x, y] : p)
        if (y == b) return x;
    return -1;
}

// Tuples of each structure indexed by incident element, so that extending a
// position by one pair only has to examine tuples touching the new elements.
struct SupportIndex {
    std::vector<std::vector<std::pair<int, int>>> incident;  // element -> (rel, tuple idx)

    explicit SupportIndex(const RelStructure& s) : incident(size_t(s.n())) {
        for (size_t r = 0; r < s.tuples().size(); ++r)
            for (size_t t = 0; t < s.tuples()[r].size(); ++t) {
                const auto& tup = s.tuples()[r][t];
                for (size_t i = 0; i < tup.size(); ++i) {
                    bool seen = false;
                    for (size_t j = 0; j < i && !seen; ++j) seen = tup[j] == tup[i];
                    if (!seen) incident[size_t(tup[i])].push_back({int(r), int(t)});
                }
            }
    }
};

struct Solver {
    const RelStructure& A;
    const RelStructure& B;
    int k;
    bool bijective;
    SupportIndex suppA, suppB;
    std::vector<Position> positions;
    std::unordered_map<Key, uint32_t, KeyHash> index;
    std::vector<char> alive;

    Solver(const RelStructure& a, const RelStructure& b, int kk, bool bij)
        : A(a), B(b), k(kk), bijective(bij), suppA(a), suppB(b) {
        if (k < 1) throw InvalidArgument("pebble game: k must be at least 1");
        if (k > 8) throw BudgetError("pebble game: position packing supports k <= 8");
        if (A.n() > 254 || B.n() > 254)
            throw BudgetError("pebble game: universes larger than 254 are not supported");
        if (!(A.voc() == B.voc()))
            throw InvalidArgument("pebble game: structures have different vocabularies");
    }

    // Extension check: base is a valid position, (a,b) a fresh pair with a not
    // on the left of base (and, bijectively, b not on the right). Everything
    // newly constrained involves a on the A side or b on the B side.
    bool valid_extension(const Position& base, int a, int b) const {
        std::vector<int> mapped(3);
        for (auto [r, t] : suppA.incident[size_t(a)]) {
            const auto& tup = A.tuples()[size_t(r)][size_t(t)];
            bool covered = true;
            for (size_t i = 0; i < tup.size() && covered; ++i) {
                if (tup[i] == a) {
                    mapped[i] = b;
                    continue;
                }
                int img = lookup_left(base, tup[i]);
                if (img < 0)
                    covered = false;
                else
                    mapped[i] = img;
            }
            if (!covered) continue;
            std::vector<int> m(mapped.begin(), mapped.begin() + long(tup.size()));
            if (!B.has_tuple(r, m)) return false;
        }
        if (!bijective) return true;
        std::vector<int> pre(3);
        for (auto [r, t] : suppB.incident[size_t(b)]) {
            const auto& tup = B.tuples()[size_t(r)][size_t(t)];
            bool covered = true;
            for (size_t i = 0; i < tup.size() && covered; ++i) {
                if (tup[i] == b) {
                    pre[i] = a;
                    continue;
                }
                int src = lookup_right(base, tup[i]);
                if (src < 0)
                    covered = false;
                else
                    pre[i] = src;
            }
            if (!covered) continue;
            std::vector<int> m(pre.begin(), pre.begin() + long(tup.size()));
            if (!A.has_tuple(r, m)) return false;
        }
        return true;
    }

    void enumerate(uint64_t max_positions) {
        positions.push_back({});
        index[key_of(positions[0])] = 0;
        Position cur;
        enumerate_from(cur, 0, max_positions);
        alive.assign(positions.size(), 1);
    }

    void enumerate_from(Position& cur, int start, uint64_t max_positions) {
        if (int(cur.size()) == k) return;
        for (int a = start; a < A.n(); ++a) {
            for (int b = 0; b < B.n(); ++b) {
                if (bijective && lookup_right(cur, b) >= 0) continue;
                if (!valid_extension(cur, a, b)) continue;
                cur.push_back({a, b});
                if (positions.size() >= max_positions)
                    throw BudgetError("pebble game: position budget " +
                                      std::to_string(max_positions) + " exceeded");
                index[key_of(cur)] = uint32_t(positions.size());
                positions.push_back(cur);
                enumerate_from(cur, a + 1, max_positions);
                cur.pop_back();
            }
        }
    }

    // Index of a valid position, or -1 when the pair set is not a position.
    int find(const Position& p) const {
        auto it = index.find(key_of(p));
        return it == index.end() ? -1 : int(it->second);
    }

    bool is_alive(const Position& p) const {
        int i = find(p);
        return i >= 0 && alive[size_t(i)];
    }

    static Position without(const Position& p, int r) {
        Position q = p;
        if (r < int(p.size())) q.erase(q.begin() + r);
        return q;
    }

    // Existential survival: every removal and Spoiler element leaves some
    // alive response. Returns the first failing (removal, element) if any.
    std::optional<std::pair<int, int>> existential_failure(const Position& p) const {
        int rmax = int(p.size()) < k ? int(p.size()) : int(p.size()) - 1;
        for (int r = 0; r <= rmax; ++r) {
            Position base = without(p, r);
            for (int a = 0; a < A.n(); ++a) {
                int forced = lookup_left(base, a);
                bool ok = false;
                if (forced >= 0) {
                    ok = is_alive(base);
                } else {
                    for (int b = 0; b < B.n() && !ok; ++b) {
                        Position q = base;
                        q.insert(std::upper_bound(q.begin(), q.end(), PebblePair{a, -1}),
                                 {a, b});
                        ok = is_alive(q);
                    }
                }
                if (!ok) return std::make_pair(r, a);
            }
        }
        return std::nullopt;
    }

    // Bijective survival: every removal admits a perfect matching of safe
    // responses. Returns the first failing removal if any.
    std::optional<int> bijective_failure(const Position& p) const {
        int n = A.n();
        int rmax = int(p.size()) < k ? int(p.size()) : int(p.size()) - 1;
        std::vector<std::vector<int>> safe(n);
        for (int r = 0; r <= rmax; ++r) {
            Position base = without(p, r);
            bool base_alive = is_alive(base);
            for (int a = 0; a < n; ++a) {
                safe[size_t(a)].clear();
                int forced = lookup_left(base, a);
                if (forced >= 0) {
                    if (base_alive) safe[size_t(a)].push_back(forced);
                    continue;
                }
                for (int b = 0; b < n; ++b) {
                    if (lookup_right(base, b) >= 0) continue;
                    Position q = base;
                    q.insert(std::upper_bound(q.begin(), q.end(), PebblePair{a, -1}), {a, b});
                    if (is_alive(q)) safe[size_t(a)].push_back(b);
                }
            }
            if (!perfect_matching(safe, n)) return r;
        }
        return std::nullopt;
    }

    static bool perfect_matching(const std::vector<std::vector<int>>& adj, int n) {
        std::vector<int> match_b(size_t(n), -1);
        std::vector<char> used;
        auto augment = [&](auto&& self, int a) -> bool {
            for (int b : adj[size_t(a)]) {
                if (used[size_t(b)]) continue;
                used[size_t(b)] = 1;
                if (match_b[size_t(b)] < 0 || self(self, match_b[size_t(b)])) {
                    match_b[size_t(b)] = a;
                    return true;
                }
            }
            return false;
        };
        for (int a = 0; a < n; ++a) {
            used.assign(size_t(n), 0);
            if (!augment(augment, a)) return false;
        }
        return true;
    }

    GameResult run(uint64_t max_positions) {
        GameResult res;
        if (bijective && A.n() != B.n()) {
            res.winner = Winner::Spoiler;
            res.size_mismatch = true;
            return res;
        }
        enumerate(max_positions);
        res.total_positions = positions.size();
        std::deque<uint32_t> queue;
        std::vector<char> queued(positions.size(), 1);
        for (uint32_t i = 0; i < positions.size(); ++i) queue.push_back(i);
        while (!queue.empty()) {
            uint32_t i = queue.front();
            queue.pop_front();
            queued[i] = 0;
            if (!alive[i]) continue;
            DeadRecord rec;
            if (bijective) {
                auto fail = bijective_failure(positions[i]);
                if (!fail) continue;
                rec = {positions[i], *fail, -1};
            } else {
                auto fail = existential_failure(positions[i]);
                if (!fail) continue;
                rec = {positions[i], fail->first, fail->second};
            }
            alive[i] = 0;
            res.deaths.push_back(std::move(rec));
            requeue_dependents(positions[i], queue, queued);
        }
        res.live_positions = 0;
        for (char c : alive) res.live_positions += uint64_t(c);
        res.winner = alive[0] ? Winner::Duplicator : Winner::Spoiler;
        return res;
    }

    // Positions whose survival check may have used dead position q: remove one
    // pair of q (or none), then add one arbitrary pair (or none).
    void requeue_dependents(const Position& q, std::deque<uint32_t>& queue,
                            std::vector<char>& queued) {
        auto push = [&](int idx) {
            if (idx < 0 || !alive[size_t(idx)] || queued[size_t(idx)]) return;
            queued[size_t(idx)] = 1;
            queue.push_back(uint32_t(idx));
        };
        for (int r = 0; r <= int(q.size()); ++r) {
            Position base = without(q, r);  // r == size: base = q
            push(find(base));
            if (int(base.size()) == k) continue;
            for (int a = 0; a < A.n(); ++a) {
                if (lookup_left(base, a) >= 0) continue;
                for (int b = 0; b < B.n(); ++b) {
                    if (bijective && lookup_right(base, b) >= 0) continue;
                    Position p = base;
                    p.insert(std::upper_bound(p.begin(), p.end(), PebblePair{a, -1}), {a, b});
                    push(find(p));
                }
            }
        }
    }
};

}  // namespace

GameResult existential_game(const RelStructure& A, const RelStructure& B, int k,
                            uint64_t max_positions) {
    Solver s(A, B, k, false);
    return s.run(max_positions);
}

GameResult bijective_game(const RelStructure& A, const RelStructure& B, int k,
                          uint64_t max_positions) {
    Solver s(A, B, k, true);
    return s.run(max_positions);
}

bool replay_certificate(const RelStructure& A, const RelStructure& B, int k,
                        const GameResult& result, bool bijective, uint64_t max_positions) {
    if (bijective && A.n() != B.n())
        return result.size_mismatch && result.winner == Winner::Spoiler &&
               result.deaths.empty();
    if (result.size_mismatch) return false;
    Solver s(A, B, k, bijective);
    s.enumerate(max_positions);
    if (result.total_positions != s.positions.size()) return false;
    if (result.live_positions + result.deaths.size() != s.positions.size()) return false;
    std::unordered_map<Key, size_t, KeyHash> rank;
    for (size_t i = 0; i < result.deaths.size(); ++i) {
        const auto& d = result.deaths[i];
        int idx = s.find(d.pos);
        if (idx < 0) return false;  // not a valid position
        if (rank.count(key_of(d.pos))) return false;
        rank[key_of(d.pos)] = i;
    }
    auto dead_before = [&](const Position& p, size_t i) {
        auto it = rank.find(key_of(p));
        return it != rank.end() && it->second < i;
    };
    for (size_t i = 0; i < result.deaths.size(); ++i) {
        const auto& d = result.deaths[i];
        int sz = int(d.pos.size());
        if (d.removal < 0 || d.removal > sz) return false;
        if (d.removal == sz && sz >= k) return false;
        Position base = Solver::without(d.pos, d.removal);
        if (!bijective) {
            if (d.element < 0 || d.element >= A.n()) return false;
            int forced = lookup_left(base, d.element);
            if (forced >= 0) {
                if (!dead_before(base, i)) return false;
                continue;
            }
            for (int b = 0; b < B.n(); ++b) {
                Position q = base;
                q.insert(std::upper_bound(q.begin(), q.end(), PebblePair{d.element, -1}),
                         {d.element, b});
                int idx = s.find(q);
                if (idx < 0) continue;           // invalid response
                if (!dead_before(q, i)) return false;  // surviving response exists
            }
        } else {
            int n = A.n();
            std::vector<std::vector<int>> safe(n);
            bool base_ok = s.find(base) >= 0 && !dead_before(base, i);
            for (int a = 0; a < n; ++a) {
                int forced = lookup_left(base, a);
                if (forced >= 0) {
                    if (base_ok) safe[size_t(a)].push_back(forced);
                    continue;
                }
                for (int b = 0; b < n; ++b) {
                    if (lookup_right(base, b) >= 0) continue;
                    Position q = base;
                    q.insert(std::upper_bound(q.begin(), q.end(), PebblePair{a, -1}), {a, b});
                    int idx = s.find(q);
                    if (idx >= 0 && !dead_before(q, i)) safe[size_t(a)].push_back(b);
                }
            }
            if (Solver::perfect_matching(safe, n)) return false;
        }
    }
    bool empty_dead = rank.count(key_of(Position{})) > 0;
    return (result.winner == Winner::Spoiler) == empty_dead;
}

RefinementResult color_refinement(const Graph& g) {
    int n = g.n();
    auto adj = g.adjacency();
    std::vector<int> color(size_t(n), 0);
    int ncolors = n == 0 ? 0 : 1;
    for (;;) {
        std::map<std::vector<int>, int> ids;
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[size_t(v)]);
            std::vector<int> nb;
            for (int u : adj[size_t(v)]) nb.push_back(color[size_t(u)]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[size_t(v)] = std::move(s);
            ids.emplace(sig[size_t(v)], 0);
        }
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        if (next == ncolors) break;
        ncolors = next;
        for (int v = 0; v < n; ++v) color[size_t(v)] = ids[sig[size_t(v)]];
    }
    // classes ordered by their least vertex
    std::vector<int> first_seen(size_t(ncolors), -1);
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (first_seen[size_t(color[size_t(v)])] < 0) {
            first_seen[size_t(color[size_t(v)])] = int(order.size());
            order.push_back(color[size_t(v)]);
        }
    RefinementResult res;
    res.classes.assign(order.size(), {});
    for (int v = 0; v < n; ++v)
        res.classes[size_t(first_seen[size_t(color[size_t(v)])])].push_back(v);
    res.delta.assign(order.size(), std::vector<int>(order.size(), 0));
    for (size_t i = 0; i < res.classes.size(); ++i) {
        int rep = res.classes[i][0];
        for (int u : adj[size_t(rep)]) ++res.delta[i][size_t(first_seen[size_t(color[size_t(u)])])];
    }
    return res;
}

bool c2_equivalent(const Graph& g, const Graph& h) {
    if (g.n() != h.n()) return false;
    int n = g.n();
    Graph u(2 * n);
    for (auto [a, b] : g.edges()) u.add_edge(a, b);
    for (auto [a, b] : h.edges()) u.add_edge(a + n, b + n);
    RefinementResult r = color_refinement(u);
    for (const auto& cls : r.classes) {
        int left = 0;
        for (int v : cls) left += v < n ? 1 : -1;
        if (left != 0) return false;
    }
    return true;
}

namespace {

// Atomic type of a j-tuple: packed equality pattern plus, per relation, the
// membership mask over all coordinate substitutions sigma in [j]^arity.
std::vector<uint64_t> atomic_type(const RelStructure& s, const std::vector<int>& t) {
    size_t j = t.size();
    std::vector<uint64_t> out;
    uint64_t eq = 0;
    for (size_t i = 0; i < j; ++i) {
        size_t e = i;
        for (size_t p = 0; p < i; ++p)
            if (t[p] == t[i]) {
                e = p;
                break;
            }
        eq |= uint64_t(e) << (4 * i);
    }
    out.push_back(eq);
    for (size_t r = 0; r < s.voc().rels.size(); ++r) {
        int arity = s.voc().rels[r].arity;
        uint64_t count = 1;
        for (int i = 0; i < arity; ++i) count *= j;
        uint64_t mask = 0;
        std::vector<int> probe(arity);
        for (uint64_t sigma = 0; sigma < count; ++sigma) {
            uint64_t x = sigma;
            for (int i = 0; i < arity; ++i) {
                probe[size_t(i)] = t[size_t(x % j)];
                x /= j;
            }
            if (s.has_tuple(int(r), probe)) mask |= uint64_t(1) << sigma;
        }
        out.push_back(mask);
    }
    return out;
}

}  // namespace

bool wl_equivalent(const RelStructure& A, const RelStructure& B, int k, uint64_t max_tuples) {
    if (k < 1) throw InvalidArgument("wl_equivalent: k must be at least 1");
    if (!(A.voc() == B.voc()))
        throw InvalidArgument("wl_equivalent: structures have different vocabularies");
    int max_arity = 1;
    for (const auto& r : A.voc().rels) max_arity = std::max(max_arity, r.arity);
    uint64_t substs = 1;
    for (int i = 0; i < max_arity; ++i) substs *= uint64_t(k) + 1;
    if (substs > 64 || k > 15)
        throw BudgetError("wl_equivalent: atomic-type packing supports (k+1)^arity <= 64");
    if (A.n() != B.n()) return false;
    int n = A.n();
    if (n == 0) return true;
    uint64_t ntuples = 1;
    for (int i = 0; i < k; ++i) {
        ntuples = mul_u64(ntuples, uint64_t(n), "wl tuple space");
        if (ntuples > max_tuples)
            throw BudgetError("wl_equivalent: n^k tuple budget exceeded");
    }
    auto tuple_of = [&](uint64_t idx) {
        std::vector<int> t(k);
        for (int i = 0; i < k; ++i) {
            t[size_t(i)] = int(idx % uint64_t(n));
            idx /= uint64_t(n);
        }
        return t;
    };
    // Substituting w at coordinate i moves the index by (w - t_i) * n^i.
    std::vector<uint64_t> stride(size_t(k), 1);
    for (int i = 1; i < k; ++i) stride[size_t(i)] = stride[size_t(i) - 1] * uint64_t(n);

    std::vector<int> colA(ntuples), colB(ntuples);
    {
        std::map<std::vector<uint64_t>, int> ids;
        std::vector<std::vector<uint64_t>> tA(ntuples), tB(ntuples);
        for (uint64_t i = 0; i < ntuples; ++i) {
            tA[i] = atomic_type(A, tuple_of(i));
            tB[i] = atomic_type(B, tuple_of(i));
            ids.emplace(tA[i], 0);
            ids.emplace(tB[i], 0);
        }
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        for (uint64_t i = 0; i < ntuples; ++i) {
            colA[i] = ids[tA[i]];
            colB[i] = ids[tB[i]];
        }
    }
    // Extended atomic types atype(t, w) never change; intern them once.
    std::vector<int> extA(size_t(ntuples) * size_t(n)), extB(size_t(ntuples) * size_t(n));
    {
        std::map<std::vector<uint64_t>, int> ids;
        std::vector<int>* dst[2] = {&extA, &extB};
        const RelStructure* src[2] = {&A, &B};
        for (int side = 0; side < 2; ++side)
            for (uint64_t i = 0; i < ntuples; ++i) {
                std::vector<int> t = tuple_of(i);
                t.push_back(0);
                for (int w = 0; w < n; ++w) {
                    t[size_t(k)] = w;
                    auto at = atomic_type(*src[side], t);
                    auto [it, fresh] = ids.emplace(std::move(at), int(ids.size()));
                    (*dst[side])[size_t(i) * size_t(n) + size_t(w)] = it->second;
                }
            }
    }
    int ncolors = 0;
    for (int c : colA) ncolors = std::max(ncolors, c + 1);
    for (int c : colB) ncolors = std::max(ncolors, c + 1);
    for (;;) {
        std::map<std::vector<int>, int> ids;
        std::vector<std::vector<int>> sA(ntuples), sB(ntuples);
        const std::vector<int>* cols[2] = {&colA, &colB};
        const std::vector<int>* exts[2] = {&extA, &extB};
        std::vector<std::vector<int>>* sigs[2] = {&sA, &sB};
        for (int side = 0; side < 2; ++side) {
            for (uint64_t i = 0; i < ntuples; ++i) {
                std::vector<int> t = tuple_of(i);
                std::vector<std::vector<int>> parts(n);
                for (int w = 0; w < n; ++w) {
                    std::vector<int> part;
                    part.push_back((*exts[side])[size_t(i) * size_t(n) + size_t(w)]);
                    for (int c = 0; c < k; ++c) {
                        uint64_t j = i + (uint64_t(w) - uint64_t(t[size_t(c)])) * stride[size_t(c)];
                        part.push_back((*cols[side])[j]);
                    }
                    parts[size_t(w)] = std::move(part);
                }
                std::sort(parts.begin(), parts.end());
                std::vector<int> sig;
                sig.push_back((*cols[side])[i]);
                for (auto& part : parts) sig.insert(sig.end(), part.begin(), part.end());
                (*sigs[side])[i] = std::move(sig);
                ids.emplace((*sigs[side])[i], 0);
            }
        }
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        if (next == ncolors) break;
        ncolors = next;
        for (uint64_t i = 0; i < ntuples; ++i) {
            colA[i] = ids[sA[i]];
            colB[i] = ids[sB[i]];
        }
    }
    std::vector<int> ca = colA, cb = colB;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

bool wl_equivalent(const Graph& g, const Graph& h, int k, uint64_t max_tuples) {
    return wl_equivalent(graph_structure(g), graph_structure(h), k, max_tuples);
}

bool k_locally_satisfiable(const XorSystem& sys, int k, Encoding enc, uint64_t max_positions) {
    RelStructure inst = enc == Encoding::Second ? encode_second(sys) : encode_first(sys);
    RelStructure lang = encode_language(Lang::Xor3, enc);
    return existential_game(inst, lang, k, max_positions).winner == Winner::Duplicator;
}

bool k_locally_satisfiable(const CnfSystem& sys, int k, Encoding enc, uint64_t max_positions) {
    RelStructure inst = enc == Encoding::Second ? encode_second(sys) : encode_first(sys);
    RelStructure lang = encode_language(Lang::Sat3, enc);
    return existential_game(inst, lang, k, max_positions).winner == Winner::Duplicator;
}

}  // namespace gapkit
