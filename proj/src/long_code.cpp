#include "long_code.hpp"

#include <bit>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace gapkit {

uint64_t residue_weight(const LongCodeStats& stats) {
    uint64_t w = stats.dropped_tautology;
    for (const auto& r : stats.xor_residue) w = add_u64(w, r.weight, "residue weight");
    for (const auto& r : stats.cnf_residue) w = add_u64(w, r.weight, "residue weight");
    return w;
}

uint64_t residue_satisfied(const LongCodeStats& stats, const std::vector<uint8_t>& f) {
    uint64_t w = stats.dropped_tautology;
    for (const auto& r : stats.xor_residue)
        if (f[size_t(r.var)] == r.rhs) w = add_u64(w, r.weight, "residue weight");
    for (const auto& r : stats.cnf_residue)
        if (f[size_t(r.a.var)] == r.a.s || f[size_t(r.b.var)] == r.b.s)
            w = add_u64(w, r.weight, "residue weight");
    return w;
}

Folded fold(uint64_t z, int d) {
    if (d < 1 || d > 62) throw InvalidArgument("fold: table dimension out of range");
    uint64_t mask = (uint64_t(1) << (d - 1)) - 1;
    uint8_t s = uint8_t((z >> (d - 1)) & 1);
    uint64_t f = (s ? ~z : z) & mask;
    return {f, s};
}

static std::string bits(uint64_t w, int d) {
    std::string out;
    for (int i = 0; i < d; ++i) out.push_back(char('0' + ((w >> i) & 1)));
    return out;
}

std::string LongCodeVars::name(uint64_t var) const {
    uint64_t ub = uint64_t(m) * u_block();
    if (var < ub) {
        uint64_t u = var / u_block();
        return "u" + std::to_string(u) + ":" + bits(var % u_block(), p - 1);
    }
    uint64_t rest = var - ub;
    uint64_t v = rest / v_block();
    if (v >= uint64_t(n)) throw InvalidArgument("LongCodeVars::name: variable out of range");
    return "v" + std::to_string(v) + ":" + bits(rest % v_block(), q - 1);
}

static LongCodeVars longcodevars_checked(const LabelCover& lc, const LongCodeBudget& budget) {
    if (lc.p() < 1 || lc.q() < 1) throw InvalidArgument("long code: empty label sets");
    if (lc.p() > 40 || lc.q() > 40) throw BudgetError("long code: label count too large");
    LongCodeVars vars{lc.m(), lc.n(), lc.p(), lc.q()};
    if (vars.count() > budget.max_vars || vars.count() > (uint64_t(1) << 30))
        throw BudgetError("long code: variable budget exceeded");
    return vars;
}

LongCodeVars longcode_vars(const LabelCover& lc) { return longcodevars_checked(lc, {}); }

namespace {

struct EpsParts {
    uint64_t n, m;  // epsilon = n/m in lowest terms
};

EpsParts eps_parts(const Rational& eps, bool allow_one) {
    if (eps.num() <= 0 || eps.num() > eps.den() || (eps.num() == eps.den() && !allow_one))
        throw InvalidArgument("long code: epsilon out of range");
    return {uint64_t(eps.num()), uint64_t(eps.den())};
}

void check_work(const LabelCover& lc, int zbits, const LongCodeBudget& budget) {
    uint64_t per = mul_u64(uint64_t(1) << lc.q(), pow_u64(2, unsigned(zbits), "long code work"),
                           "long code work");
    uint64_t work = mul_u64(uint64_t(lc.entries().size()), per, "long code work");
    if (work > budget.max_work) throw BudgetError("long code: work budget exceeded");
}

// x composed with the projection, as a p-bit word: bit i = x_{pi(i)}.
uint64_t compose(uint64_t x, const std::vector<uint16_t>& pi) {
    uint64_t w = 0;
    for (size_t i = 0; i < pi.size(); ++i) w |= ((x >> pi[i]) & 1) << i;
    return w;
}

void record(LongCodeStats* stats, size_t entry, bool kept, uint64_t w) {
    if (!stats) return;
    auto& e = stats->per_entry[entry];
    if (kept)
        e.emitted = add_u64(e.emitted, w, "long code stats");
    else
        e.dropped = add_u64(e.dropped, w, "long code stats");
}

using XorResKey = std::pair<int, uint8_t>;
using CnfResKey = std::tuple<int, uint8_t, int, uint8_t>;

void flatten_residue(LongCodeStats* stats, const std::map<XorResKey, uint64_t>& xres,
                     const std::map<CnfResKey, uint64_t>& cres) {
    if (!stats) return;
    for (const auto& [k, w] : xres) stats->xor_residue.push_back({k.first, k.second, w});
    for (const auto& [k, w] : cres) {
        auto [av, as, bv, bs] = k;
        stats->cnf_residue.push_back({{av, as}, {bv, bs}, w});
    }
}

}  // namespace

XorSystem longcode_xor(const LabelCover& lc, const Rational& epsilon, LongCodeStats* stats,
                       const LongCodeBudget& budget) {
    if (!lc.flags().projection) throw InvalidArgument("longcode_xor: projection game required");
    auto vars = longcodevars_checked(lc, budget);
    auto [N, M] = eps_parts(epsilon, false);
    check_work(lc, 2 * lc.p(), budget);
    if (stats) {
        *stats = LongCodeStats{};
        stats->per_entry.resize(lc.entries().size());
    }
    std::map<XorResKey, uint64_t> xres;

    int p = lc.p(), q = lc.q();
    // weight of one (x,y,z) triple with D noisy coordinates, before the
    // entry weight: N^D (M-N)^(p-D) M^q
    std::vector<uint64_t> wd(size_t(p) + 1);
    for (int d = 0; d <= p; ++d)
        wd[d] = mul_u64(mul_u64(pow_u64(N, unsigned(d)), pow_u64(M - N, unsigned(p - d))),
                        pow_u64(M, unsigned(q)));

    XorSystem out(int(vars.count()));
    for (size_t ei = 0; ei < lc.entries().size(); ++ei) {
        const auto& e = lc.entries()[ei];
        auto pi = lc.projection_map(e);
        for (uint64_t x = 0; x < (uint64_t(1) << q); ++x) {
            uint64_t xpi = compose(x, pi);
            Folded fx = fold(x, q);
            int vv = int(vars.v_var(e.v, fx.f));
            for (uint64_t y = 0; y < (uint64_t(1) << p); ++y) {
                Folded fy = fold(y, p);
                for (uint64_t z = 0; z < (uint64_t(1) << p); ++z) {
                    int d = std::popcount(z ^ xpi ^ y);
                    uint64_t w = mul_u64(e.w, wd[size_t(d)]);
                    if (w == 0) continue;
                    Folded fz = fold(z, p);
                    int rhs = fx.s ^ fy.s ^ fz.s;
                    if (fy.f == fz.f) {
                        // u-lookups cancel; the pair collapses to vv = rhs
                        record(stats, ei, false, w);
                        if (stats) {
                            stats->dropped_repeated = add_u64(stats->dropped_repeated, w);
                            auto [it, fresh] = xres.try_emplace({vv, uint8_t(rhs)}, 0);
                            it->second = add_u64(it->second, w);
                        }
                        continue;
                    }
                    out.add(int(vars.u_var(e.u, fy.f)), int(vars.u_var(e.u, fz.f)), vv, rhs, w);
                    record(stats, ei, true, w);
                }
            }
        }
    }
    flatten_residue(stats, xres, {});
    out.total_weight();  // overflow check
    return out;
}

CnfSystem longcode_sat_single(const LabelCover& lc, const Rational& epsilon, LongCodeStats* stats,
                              const LongCodeBudget& budget) {
    if (!lc.flags().projection) throw InvalidArgument("longcode_sat: projection game required");
    auto vars = longcodevars_checked(lc, budget);
    auto [N, M] = eps_parts(epsilon, true);
    check_work(lc, 2 * lc.p(), budget);
    if (stats) {
        *stats = LongCodeStats{};
        stats->per_entry.resize(lc.entries().size());
    }
    std::map<CnfResKey, uint64_t> cres;

    int p = lc.p(), q = lc.q();
    uint64_t pmask = (uint64_t(1) << p) - 1;
    CnfSystem out(int(vars.count()));
    for (size_t ei = 0; ei < lc.entries().size(); ++ei) {
        const auto& e = lc.entries()[ei];
        auto pi = lc.projection_map(e);
        for (uint64_t x = 0; x < (uint64_t(1) << q); ++x) {
            uint64_t xpi = compose(x, pi);
            uint64_t zeros = ~xpi & pmask;
            int ecount = std::popcount(xpi);
            Folded fx = fold(x, q);
            Literal lx{int(vars.v_var(e.v, fx.f)), fx.s};
            // N^D (M-N)^(E-D) M^(p-E) for D = 0..E
            std::vector<uint64_t> wd(size_t(ecount) + 1);
            for (int d = 0; d <= ecount; ++d)
                wd[d] = mul_u64(mul_u64(pow_u64(N, unsigned(d)), pow_u64(M - N, unsigned(ecount - d))),
                                pow_u64(M, unsigned(p - ecount)));
            for (uint64_t y = 0; y < (uint64_t(1) << p); ++y) {
                Folded fy = fold(y, p);
                for (uint64_t z = 0; z < (uint64_t(1) << p); ++z) {
                    uint64_t diff = z ^ y;
                    if ((diff & zeros) != zeros) continue;  // z must flip y outside the support of x.pi
                    uint64_t w = mul_u64(e.w, wd[size_t(std::popcount(diff & xpi))]);
                    if (w == 0) continue;
                    Folded fz = fold(z, p);
                    if (fy.f == fz.f) {
                        record(stats, ei, false, w);
                        if (stats) {
                            if (fy.s == fz.s) {
                                // repeated literal; a two-literal clause remains
                                stats->dropped_repeated = add_u64(stats->dropped_repeated, w);
                                int uv = int(vars.u_var(e.u, fy.f));
                                auto [it, fresh] =
                                    cres.try_emplace({lx.var, lx.s, uv, fy.s}, 0);
                                it->second = add_u64(it->second, w);
                            } else {
                                stats->dropped_tautology = add_u64(stats->dropped_tautology, w);
                            }
                        }
                        continue;
                    }
                    out.add(lx, Literal{int(vars.u_var(e.u, fy.f)), fy.s},
                            Literal{int(vars.u_var(e.u, fz.f)), fz.s}, w);
                    record(stats, ei, true, w);
                }
            }
        }
    }
    flatten_residue(stats, {}, cres);
    out.total_weight();
    return out;
}

std::vector<EpsTerm> sat_epsilon_schedule(const Rational& delta) {
    if (delta.num() <= 0 || delta.num() > delta.den())
        throw InvalidArgument("sat_epsilon_schedule: delta out of range");
    // t = ceil(1/delta)
    uint64_t nd = uint64_t(delta.num()), md = uint64_t(delta.den());
    uint64_t t = (md + nd - 1) / nd;
    std::vector<EpsTerm> out;
    for (uint64_t i = 1; i <= t; ++i) out.push_back({71 * (i - 1) + 1, 35 * (i - 1)});
    return out;
}

Rational eps_term_value(const EpsTerm& term, const Rational& delta) {
    if (delta.num() <= 0 || delta.num() > delta.den())
        throw InvalidArgument("eps_term_value: delta out of range");
    if (term.delta_pow > 4096 || term.two_pow > 4096)
        throw BudgetError("eps_term_value: exponent out of range");
    const char* what = "epsilon schedule term";
    uint64_t num = pow_u64(uint64_t(delta.num()), unsigned(term.delta_pow), what);
    uint64_t den = pow_u64(uint64_t(delta.den()), unsigned(term.delta_pow), what);
    den = mul_u64(den, pow_u64(2, unsigned(term.two_pow), what), what);
    if (num > uint64_t(INT64_MAX) || den > uint64_t(INT64_MAX)) throw BudgetError(what);
    return Rational(int64_t(num)) / Rational(int64_t(den));
}

CnfSystem longcode_sat(const LabelCover& lc, const Rational& delta, LongCodeStats* stats,
                       const LongCodeBudget& budget) {
    auto schedule = sat_epsilon_schedule(delta);
    if (stats) {
        *stats = LongCodeStats{};
        stats->per_entry.resize(lc.entries().size());
    }
    std::map<CnfResKey, uint64_t> cres;
    CnfSystem out(int(longcodevars_checked(lc, budget).count()));
    for (const auto& term : schedule) {
        Rational eps = eps_term_value(term, delta);
        LongCodeStats layer;
        CnfSystem part = longcode_sat_single(lc, eps, stats ? &layer : nullptr, budget);
        for (const auto& c : part.clauses())
            out.add(Literal{c.v[0], c.s[0]}, Literal{c.v[1], c.s[1]}, Literal{c.v[2], c.s[2]},
                    c.mult);
        if (stats) {
            for (size_t i = 0; i < layer.per_entry.size(); ++i) {
                stats->per_entry[i].emitted =
                    add_u64(stats->per_entry[i].emitted, layer.per_entry[i].emitted);
                stats->per_entry[i].dropped =
                    add_u64(stats->per_entry[i].dropped, layer.per_entry[i].dropped);
            }
            stats->dropped_repeated = add_u64(stats->dropped_repeated, layer.dropped_repeated);
            stats->dropped_tautology = add_u64(stats->dropped_tautology, layer.dropped_tautology);
            for (const auto& r : layer.cnf_residue) {
                auto [it, fresh] = cres.try_emplace({r.a.var, r.a.s, r.b.var, r.b.s}, 0);
                it->second = add_u64(it->second, r.weight);
            }
        }
    }
    flatten_residue(stats, {}, cres);
    out.total_weight();
    return out;
}

}  // namespace gapkit
