#include <gapkit/gapkit.h>

#include <cstring>
#include <string>
#include <utility>

#include <json.hpp>

#include "gadgets.hpp"
#include "games.hpp"
#include "generators.hpp"
#include "graph_reductions.hpp"
#include "long_code.hpp"
#include "oracles.hpp"
#include "rel_structure.hpp"
#include "vc_width.hpp"
#include "verify.hpp"

using nlohmann::json;

struct gk_xor {
    gapkit::XorSystem rep;
};
struct gk_cnf {
    gapkit::CnfSystem rep;
};
struct gk_graph {
    gapkit::Graph rep;
};
struct gk_lc {
    gapkit::LabelCover rep;
};
struct gk_struct {
    gapkit::RelStructure rep;
};

namespace {

thread_local std::string t_error;

template <typename F>
gk_status wrap(F&& body) {
    try {
        body();
        return GK_OK;
    } catch (const gapkit::BudgetError& e) {
        t_error = e.what();
        return GK_EBUDGET;
    } catch (const gapkit::ParseError& e) {
        t_error = e.what();
        return GK_EPARSE;
    } catch (const gapkit::IoError& e) {
        t_error = e.what();
        return GK_EIO;
    } catch (const gapkit::InvalidArgument& e) {
        t_error = e.what();
        return GK_EINVAL;
    } catch (const std::exception& e) {
        t_error = e.what();
        return GK_ERROR;
    }
}

gk_status fail_null(const char* what) {
    t_error = std::string(what) + ": null argument";
    return GK_EINVAL;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put_string(char** slot, const std::string& s) {
    if (slot) *slot = dup_string(s);
}

gapkit::Rational make_rational(int64_t num, int64_t den) { return {num, den}; }

gapkit::Encoding to_encoding(gk_encoding enc) {
    switch (enc) {
        case GK_ENCODING_FIRST: return gapkit::Encoding::First;
        case GK_ENCODING_SECOND: return gapkit::Encoding::Second;
    }
    throw gapkit::InvalidArgument("unknown encoding value " + std::to_string(int(enc)));
}

gapkit::Lang to_lang(gk_lang lang) {
    switch (lang) {
        case GK_LANG_XOR3: return gapkit::Lang::Xor3;
        case GK_LANG_SAT3: return gapkit::Lang::Sat3;
    }
    throw gapkit::InvalidArgument("unknown language value " + std::to_string(int(lang)));
}

json stats_json(const gapkit::LongCodeStats& st) {
    json per = json::array();
    for (const auto& e : st.per_entry) per.push_back({{"emitted", e.emitted}, {"dropped", e.dropped}});
    json xres = json::array();
    for (const auto& r : st.xor_residue)
        xres.push_back({{"var", r.var}, {"rhs", int(r.rhs)}, {"weight", r.weight}});
    json cres = json::array();
    for (const auto& r : st.cnf_residue)
        cres.push_back({{"a", {{"var", r.a.var}, {"s", int(r.a.s)}}},
                        {"b", {{"var", r.b.var}, {"s", int(r.b.s)}}},
                        {"weight", r.weight}});
    return {{"per_entry", per},
            {"dropped_repeated", st.dropped_repeated},
            {"dropped_tautology", st.dropped_tautology},
            {"xor_residue", xres},
            {"cnf_residue", cres},
            {"residue_weight", gapkit::residue_weight(st)}};
}

std::string witness_bits(const std::vector<uint8_t>& xs) {
    std::string s;
    s.reserve(xs.size());
    for (uint8_t b : xs) s.push_back(b ? '1' : '0');
    return s;
}

gapkit::LongCodeBudget lc_budget(uint64_t max_vars, uint64_t max_work) {
    gapkit::LongCodeBudget b;
    if (max_vars) b.max_vars = max_vars;
    if (max_work) b.max_work = max_work;
    return b;
}

}  // namespace

extern "C" {

const char* gk_last_error(void) { return t_error.c_str(); }

void gk_string_free(char* s) { delete[] s; }

const char* gk_version(void) { return "0.1.0"; }

void gk_xor_free(gk_xor* s) { delete s; }
void gk_cnf_free(gk_cnf* s) { delete s; }
void gk_graph_free(gk_graph* g) { delete g; }
void gk_lc_free(gk_lc* lc) { delete lc; }
void gk_struct_free(gk_struct* a) { delete a; }

/* ---- parity systems ---------------------------------------------------- */

gk_status gk_xor_new(int nvars, gk_xor** out) {
    if (!out) return fail_null("gk_xor_new");
    return wrap([&] { *out = new gk_xor{gapkit::XorSystem(nvars)}; });
}

gk_status gk_xor_add(gk_xor* s, int a, int b, int c, int rhs, uint64_t mult) {
    if (!s) return fail_null("gk_xor_add");
    return wrap([&] { s->rep.add(a, b, c, rhs, mult); });
}

gk_status gk_xor_parse(const char* text, gk_xor** out) {
    if (!text || !out) return fail_null("gk_xor_parse");
    return wrap([&] { *out = new gk_xor{gapkit::parse_xor(text)}; });
}

gk_status gk_xor_write(const gk_xor* s, char** out) {
    if (!s || !out) return fail_null("gk_xor_write");
    return wrap([&] { *out = dup_string(gapkit::write_xor(s->rep)); });
}

int gk_xor_nvars(const gk_xor* s) { return s ? s->rep.nvars() : 0; }
uint64_t gk_xor_size(const gk_xor* s) { return s ? s->rep.size() : 0; }
uint64_t gk_xor_total_weight(const gk_xor* s) { return s ? s->rep.total_weight() : 0; }

gk_status gk_cnf_parse(const char* text, gk_cnf** out) {
    if (!text || !out) return fail_null("gk_cnf_parse");
    return wrap([&] { *out = new gk_cnf{gapkit::parse_cnf(text)}; });
}

gk_status gk_cnf_write(const gk_cnf* s, char** out) {
    if (!s || !out) return fail_null("gk_cnf_write");
    return wrap([&] { *out = dup_string(gapkit::write_cnf(s->rep)); });
}

int gk_cnf_nvars(const gk_cnf* s) { return s ? s->rep.nvars() : 0; }
uint64_t gk_cnf_size(const gk_cnf* s) { return s ? s->rep.size() : 0; }
uint64_t gk_cnf_total_weight(const gk_cnf* s) { return s ? s->rep.total_weight() : 0; }

/* ---- graphs ------------------------------------------------------------ */

gk_status gk_graph_parse(const char* text, gk_graph** out) {
    if (!text || !out) return fail_null("gk_graph_parse");
    return wrap([&] { *out = new gk_graph{gapkit::parse_graph(text)}; });
}

gk_status gk_graph_write(const gk_graph* g, char** out) {
    if (!g || !out) return fail_null("gk_graph_write");
    return wrap([&] { *out = dup_string(gapkit::write_graph(g->rep)); });
}

int gk_graph_n(const gk_graph* g) { return g ? g->rep.n() : 0; }
uint64_t gk_graph_ecount(const gk_graph* g) { return g ? g->rep.edges().size() : 0; }
uint64_t gk_graph_total_weight(const gk_graph* g) { return g ? g->rep.total_weight() : 0; }

/* ---- label covers ------------------------------------------------------ */

gk_status gk_lc_parse(const char* text, gk_lc** out) {
    if (!text || !out) return fail_null("gk_lc_parse");
    return wrap([&] { *out = new gk_lc{gapkit::parse_labelcover_json(text)}; });
}

gk_status gk_lc_write(const gk_lc* lc, char** out) {
    if (!lc || !out) return fail_null("gk_lc_write");
    return wrap([&] { *out = dup_string(gapkit::write_labelcover_json(lc->rep)); });
}

int gk_lc_m(const gk_lc* lc) { return lc ? lc->rep.m() : 0; }
int gk_lc_n(const gk_lc* lc) { return lc ? lc->rep.n() : 0; }
int gk_lc_p(const gk_lc* lc) { return lc ? lc->rep.p() : 0; }
int gk_lc_q(const gk_lc* lc) { return lc ? lc->rep.q() : 0; }
uint64_t gk_lc_entries(const gk_lc* lc) { return lc ? lc->rep.entries().size() : 0; }
uint64_t gk_lc_w0(const gk_lc* lc) { return lc ? lc->rep.w0() : 0; }

gk_status gk_lc_flags(const gk_lc* lc, char** out) {
    if (!lc || !out) return fail_null("gk_lc_flags");
    return wrap([&] {
        gapkit::LcFlags f = lc->rep.flags();
        json j = {{"projection", f.projection},
                  {"unique_game", f.unique_game},
                  {"left_regular", f.left_regular},
                  {"right_regular", f.right_regular},
                  {"uniform_weights", f.uniform_weights}};
        *out = dup_string(j.dump());
    });
}

/* ---- generators --------------------------------------------------------- */

gk_status gk_gen_xor(int n, int r, uint64_t seed, gk_xor** out) {
    if (!out) return fail_null("gk_gen_xor");
    return wrap([&] {
        gapkit::Rng rng(seed);
        gapkit::BipartiteIncidence inc = gapkit::random_incidence(n, r, rng.next());
        std::vector<uint8_t> b = gapkit::rhs_random(int(inc.rows.size()), rng.next());
        *out = new gk_xor{gapkit::system_from_incidence(inc, b)};
    });
}

gk_status gk_gen_gap_pair(int n, int r, int64_t eps_num, int64_t eps_den, int k_check,
                          uint64_t seed, int brute_cap, gk_xor** seed_system, gk_xor** easy,
                          gk_xor** hard, char** report) {
    return wrap([&] {
        gapkit::GapPair gp = gapkit::gap_pair(n, r, make_rational(eps_num, eps_den), k_check,
                                              seed, brute_cap ? brute_cap : 24);
        json j = {{"n", n},
                  {"r", r},
                  {"epsilon", gp.epsilon.str()},
                  {"seed", gp.seed},
                  {"k_check", gp.k_check},
                  {"k_locally_sat", gp.k_locally_sat}};
        if (gp.opt_easy) j["opt_easy"] = gp.opt_easy->str();
        if (gp.opt_hard) j["opt_hard"] = gp.opt_hard->str();
        if (seed_system) *seed_system = new gk_xor{std::move(gp.seed_system)};
        if (easy) *easy = new gk_xor{std::move(gp.easy)};
        if (hard) *hard = new gk_xor{std::move(gp.hard)};
        put_string(report, j.dump());
    });
}

gk_status gk_gen_regular(int n, int d, uint64_t seed, gk_graph** out) {
    if (!out) return fail_null("gk_gen_regular");
    return wrap([&] { *out = new gk_graph{gapkit::random_regular_graph(n, d, seed)}; });
}

gk_status gk_gen_regular_bipartite(int m, int d, uint64_t seed, gk_graph** out) {
    if (!out) return fail_null("gk_gen_regular_bipartite");
    return wrap([&] { *out = new gk_graph{gapkit::random_regular_bipartite(m, d, seed)}; });
}

/* ---- instance transformations ------------------------------------------ */

gk_status gk_gadget(const gk_xor* s, gk_xor** out) {
    if (!s || !out) return fail_null("gk_gadget");
    return wrap([&] { *out = new gk_xor{gapkit::gadget(s->rep).first}; });
}

gk_status gk_homogeneous(const gk_xor* s, gk_xor** out) {
    if (!s || !out) return fail_null("gk_homogeneous");
    return wrap([&] { *out = new gk_xor{gapkit::homogeneous(s->rep)}; });
}

gk_status gk_xor_to_cnf(const gk_xor* s, gk_cnf** out) {
    if (!s || !out) return fail_null("gk_xor_to_cnf");
    return wrap([&] { *out = new gk_cnf{gapkit::xor_to_cnf(s->rep)}; });
}

gk_status gk_bipartite_reduction(const gk_xor* s, gk_lc** out) {
    if (!s || !out) return fail_null("gk_bipartite_reduction");
    return wrap([&] { *out = new gk_lc{gapkit::bipartite_reduction(s->rep)}; });
}

gk_status gk_parallel_repetition(const gk_lc* lc, int t, uint64_t max_entries,
                                 uint64_t max_labels, uint64_t max_pairs, gk_lc** out) {
    if (!lc || !out) return fail_null("gk_parallel_repetition");
    return wrap([&] {
        gapkit::RepetitionBudget budget;
        if (max_entries) budget.max_entries = max_entries;
        if (max_labels) budget.max_labels = max_labels;
        if (max_pairs) budget.max_pairs = max_pairs;
        *out = new gk_lc{gapkit::parallel_repetition(lc->rep, t, budget)};
    });
}

gk_status gk_longcode_xor(const gk_lc* lc, int64_t eps_num, int64_t eps_den,
                          uint64_t max_vars, uint64_t max_work, gk_xor** out, char** stats) {
    if (!lc || !out) return fail_null("gk_longcode_xor");
    return wrap([&] {
        gapkit::LongCodeStats st;
        *out = new gk_xor{gapkit::longcode_xor(lc->rep, make_rational(eps_num, eps_den), &st,
                                               lc_budget(max_vars, max_work))};
        put_string(stats, stats_json(st).dump());
    });
}

gk_status gk_longcode_sat_single(const gk_lc* lc, int64_t eps_num, int64_t eps_den,
                                 uint64_t max_vars, uint64_t max_work, gk_cnf** out,
                                 char** stats) {
    if (!lc || !out) return fail_null("gk_longcode_sat_single");
    return wrap([&] {
        gapkit::LongCodeStats st;
        *out = new gk_cnf{gapkit::longcode_sat_single(lc->rep, make_rational(eps_num, eps_den),
                                                      &st, lc_budget(max_vars, max_work))};
        put_string(stats, stats_json(st).dump());
    });
}

gk_status gk_longcode_sat(const gk_lc* lc, int64_t delta_num, int64_t delta_den,
                          uint64_t max_vars, uint64_t max_work, gk_cnf** out, char** stats) {
    if (!lc || !out) return fail_null("gk_longcode_sat");
    return wrap([&] {
        gapkit::LongCodeStats st;
        *out = new gk_cnf{gapkit::longcode_sat(lc->rep, make_rational(delta_num, delta_den),
                                               &st, lc_budget(max_vars, max_work))};
        put_string(stats, stats_json(st).dump());
    });
}

gk_status gk_longcode_names(const gk_lc* lc, char** out) {
    if (!lc || !out) return fail_null("gk_longcode_names");
    return wrap([&] {
        gapkit::LongCodeVars vars = gapkit::longcode_vars(lc->rep);
        std::string text;
        for (uint64_t i = 0; i < vars.count(); ++i) {
            text += std::to_string(i);
            text += ' ';
            text += vars.name(i);
            text += '\n';
        }
        *out = dup_string(text);
    });
}

gk_status gk_fglss(const gk_xor* s, uint64_t max_vertices, gk_graph** out) {
    if (!s || !out) return fail_null("gk_fglss");
    return wrap([&] {
        *out = new gk_graph{max_vertices ? gapkit::fglss(s->rep, max_vertices)
                                         : gapkit::fglss(s->rep)};
    });
}

gk_status gk_labelcover_to_graph(const gk_lc* lc, uint64_t max_vertices, gk_graph** out) {
    if (!lc || !out) return fail_null("gk_labelcover_to_graph");
    return wrap([&] {
        *out = new gk_graph{max_vertices ? gapkit::labelcover_to_graph(lc->rep, max_vertices)
                                         : gapkit::labelcover_to_graph(lc->rep)};
    });
}

gk_status gk_dinur_safra(const gk_graph* g, int64_t bias_num, int64_t bias_den, int l1,
                         uint64_t max_vertices, uint64_t max_edges, gk_graph** out) {
    if (!g || !out) return fail_null("gk_dinur_safra");
    return wrap([&] {
        gapkit::DsBudget budget;
        if (max_vertices) budget.max_vertices = max_vertices;
        if (max_edges) budget.max_edges = max_edges;
        *out = new gk_graph{
            gapkit::dinur_safra(g->rep, make_rational(bias_num, bias_den), l1, budget)};
    });
}

gk_status gk_unweight(const gk_graph* g, uint64_t max_vertices, uint64_t max_edges,
                      gk_graph** out) {
    if (!g || !out) return fail_null("gk_unweight");
    return wrap([&] {
        gapkit::Graph r = gapkit::unweight(g->rep, max_vertices ? max_vertices : uint64_t(1) << 20,
                                           max_edges ? max_edges : uint64_t(1) << 24);
        *out = new gk_graph{std::move(r)};
    });
}

gk_status gk_pipeline_xor(const gk_xor* s, int t, int64_t eps_num, int64_t eps_den,
                          gk_lc** bipartite, gk_lc** repeated, gk_xor** system, char** stats) {
    if (!s) return fail_null("gk_pipeline_xor");
    return wrap([&] {
        gapkit::PipelineXor px =
            gapkit::pipeline_xor(s->rep, t, make_rational(eps_num, eps_den));
        if (bipartite) *bipartite = new gk_lc{std::move(px.bipartite)};
        if (repeated) *repeated = new gk_lc{std::move(px.repeated)};
        if (system) *system = new gk_xor{std::move(px.system)};
        put_string(stats, stats_json(px.stats).dump());
    });
}

gk_status gk_pipeline_sat(const gk_xor* s, int t, int64_t delta_num, int64_t delta_den,
                          gk_lc** bipartite, gk_lc** repeated, gk_cnf** system, char** stats) {
    if (!s) return fail_null("gk_pipeline_sat");
    return wrap([&] {
        gapkit::PipelineSat ps =
            gapkit::pipeline_sat(s->rep, t, make_rational(delta_num, delta_den));
        if (bipartite) *bipartite = new gk_lc{std::move(ps.bipartite)};
        if (repeated) *repeated = new gk_lc{std::move(ps.repeated)};
        if (system) *system = new gk_cnf{std::move(ps.system)};
        put_string(stats, stats_json(ps.stats).dump());
    });
}

gk_status gk_pipeline_sat_single(const gk_xor* s, int t, int64_t eps_num, int64_t eps_den,
                                 gk_lc** bipartite, gk_lc** repeated, gk_cnf** system,
                                 char** stats) {
    if (!s) return fail_null("gk_pipeline_sat_single");
    return wrap([&] {
        gapkit::PipelineSat ps =
            gapkit::pipeline_sat_single(s->rep, t, make_rational(eps_num, eps_den));
        if (bipartite) *bipartite = new gk_lc{std::move(ps.bipartite)};
        if (repeated) *repeated = new gk_lc{std::move(ps.repeated)};
        if (system) *system = new gk_cnf{std::move(ps.system)};
        put_string(stats, stats_json(ps.stats).dump());
    });
}

gk_status gk_pipeline_vc(const gk_xor* s, int t, int64_t bias_num, int64_t bias_den, int l1,
                         gk_lc** bipartite, gk_lc** repeated, gk_graph** conflict,
                         gk_graph** blocks, gk_graph** unweighted) {
    if (!s) return fail_null("gk_pipeline_vc");
    return wrap([&] {
        gapkit::PipelineVc pv =
            gapkit::pipeline_vc(s->rep, t, make_rational(bias_num, bias_den), l1);
        if (bipartite) *bipartite = new gk_lc{std::move(pv.bipartite)};
        if (repeated) *repeated = new gk_lc{std::move(pv.repeated)};
        if (conflict) *conflict = new gk_graph{std::move(pv.conflict)};
        if (blocks) *blocks = new gk_graph{std::move(pv.blocks)};
        if (unweighted) *unweighted = new gk_graph{std::move(pv.unweighted)};
    });
}

/* ---- relational structures and games ------------------------------------ */

gk_status gk_xor_encode(const gk_xor* s, gk_encoding enc, gk_struct** out) {
    if (!s || !out) return fail_null("gk_xor_encode");
    return wrap([&] {
        *out = new gk_struct{to_encoding(enc) == gapkit::Encoding::First
                                 ? gapkit::encode_first(s->rep)
                                 : gapkit::encode_second(s->rep)};
    });
}

gk_status gk_cnf_encode(const gk_cnf* s, gk_encoding enc, gk_struct** out) {
    if (!s || !out) return fail_null("gk_cnf_encode");
    return wrap([&] {
        *out = new gk_struct{to_encoding(enc) == gapkit::Encoding::First
                                 ? gapkit::encode_first(s->rep)
                                 : gapkit::encode_second(s->rep)};
    });
}

gk_status gk_language_structure(gk_lang lang, gk_encoding enc, gk_struct** out) {
    if (!out) return fail_null("gk_language_structure");
    return wrap(
        [&] { *out = new gk_struct{gapkit::encode_language(to_lang(lang), to_encoding(enc))}; });
}

gk_status gk_graph_structure(const gk_graph* g, gk_struct** out) {
    if (!g || !out) return fail_null("gk_graph_structure");
    return wrap([&] { *out = new gk_struct{gapkit::graph_structure(g->rep)}; });
}

int gk_struct_n(const gk_struct* a) { return a ? a->rep.n() : 0; }

static gk_status run_game(bool bijective, const gk_struct* a, const gk_struct* b, int k,
                          uint64_t max_positions, int* winner, uint64_t* live,
                          uint64_t* total) {
    if (!a || !b || !winner) return fail_null("gk game");
    return wrap([&] {
        uint64_t cap = max_positions ? max_positions : uint64_t(1) << 20;
        gapkit::GameResult res = bijective ? gapkit::bijective_game(a->rep, b->rep, k, cap)
                                           : gapkit::existential_game(a->rep, b->rep, k, cap);
        *winner = res.winner == gapkit::Winner::Duplicator ? GK_DUPLICATOR : GK_SPOILER;
        if (live) *live = res.live_positions;
        if (total) *total = res.total_positions;
    });
}

gk_status gk_existential_game(const gk_struct* a, const gk_struct* b, int k,
                              uint64_t max_positions, int* winner, uint64_t* live,
                              uint64_t* total) {
    return run_game(false, a, b, k, max_positions, winner, live, total);
}

gk_status gk_bijective_game(const gk_struct* a, const gk_struct* b, int k,
                            uint64_t max_positions, int* winner, uint64_t* live,
                            uint64_t* total) {
    return run_game(true, a, b, k, max_positions, winner, live, total);
}

gk_status gk_game_certificate(const gk_struct* a, const gk_struct* b, int k, int bijective,
                              uint64_t max_positions, char** out) {
    if (!a || !b || !out) return fail_null("gk_game_certificate");
    return wrap([&] {
        uint64_t cap = max_positions ? max_positions : uint64_t(1) << 20;
        gapkit::GameResult res = bijective ? gapkit::bijective_game(a->rep, b->rep, k, cap)
                                           : gapkit::existential_game(a->rep, b->rep, k, cap);
        bool verified =
            gapkit::replay_certificate(a->rep, b->rep, k, res, bijective != 0, cap);
        json deaths = json::array();
        for (const auto& d : res.deaths) {
            json pos = json::array();
            for (const auto& pb : d.pos) pos.push_back({pb.first, pb.second});
            deaths.push_back({{"pos", pos}, {"removal", d.removal}, {"element", d.element}});
        }
        json j = {{"winner", res.winner == gapkit::Winner::Duplicator ? "Duplicator" : "Spoiler"},
                  {"live", res.live_positions},
                  {"total", res.total_positions},
                  {"verified", verified},
                  {"deaths", deaths}};
        *out = dup_string(j.dump());
    });
}

gk_status gk_xor_k_locally_satisfiable(const gk_xor* s, int k, gk_encoding enc,
                                       uint64_t max_positions, int* out) {
    if (!s || !out) return fail_null("gk_xor_k_locally_satisfiable");
    return wrap([&] {
        uint64_t cap = max_positions ? max_positions : uint64_t(1) << 20;
        *out = gapkit::k_locally_satisfiable(s->rep, k, to_encoding(enc), cap) ? 1 : 0;
    });
}

gk_status gk_cnf_k_locally_satisfiable(const gk_cnf* s, int k, gk_encoding enc,
                                       uint64_t max_positions, int* out) {
    if (!s || !out) return fail_null("gk_cnf_k_locally_satisfiable");
    return wrap([&] {
        uint64_t cap = max_positions ? max_positions : uint64_t(1) << 20;
        *out = gapkit::k_locally_satisfiable(s->rep, k, to_encoding(enc), cap) ? 1 : 0;
    });
}

gk_status gk_color_refinement(const gk_graph* g, char** out) {
    if (!g || !out) return fail_null("gk_color_refinement");
    return wrap([&] {
        gapkit::RefinementResult res = gapkit::color_refinement(g->rep);
        json j = {{"classes", res.classes}, {"delta", res.delta}};
        *out = dup_string(j.dump());
    });
}

gk_status gk_c2_equivalent(const gk_graph* g, const gk_graph* h, int* out) {
    if (!g || !h || !out) return fail_null("gk_c2_equivalent");
    return wrap([&] { *out = gapkit::c2_equivalent(g->rep, h->rep) ? 1 : 0; });
}

gk_status gk_wl_equivalent(const gk_graph* g, const gk_graph* h, int k, uint64_t max_tuples,
                           int* out) {
    if (!g || !h || !out) return fail_null("gk_wl_equivalent");
    return wrap([&] {
        uint64_t cap = max_tuples ? max_tuples : uint64_t(1) << 20;
        *out = gapkit::wl_equivalent(g->rep, h->rep, k, cap) ? 1 : 0;
    });
}

/* ---- exact oracles ------------------------------------------------------ */

gk_status gk_max_xor(const gk_xor* s, int cap, int jobs, uint64_t* value, uint64_t* total,
                     char** witness) {
    if (!s || !value || !total) return fail_null("gk_max_xor");
    return wrap([&] {
        gapkit::OptResult res = gapkit::max_xor(s->rep, cap ? cap : 24, jobs > 0 ? jobs : 1);
        *value = res.value;
        *total = res.total;
        put_string(witness, witness_bits(res.assignment));
    });
}

gk_status gk_max_cnf(const gk_cnf* s, int cap, int jobs, uint64_t* value, uint64_t* total,
                     char** witness) {
    if (!s || !value || !total) return fail_null("gk_max_cnf");
    return wrap([&] {
        gapkit::OptResult res = gapkit::max_cnf(s->rep, cap ? cap : 24, jobs > 0 ? jobs : 1);
        *value = res.value;
        *total = res.total;
        put_string(witness, witness_bits(res.assignment));
    });
}

gk_status gk_xor_satisfiable(const gk_xor* s, int* out) {
    if (!s || !out) return fail_null("gk_xor_satisfiable");
    return wrap([&] { *out = gapkit::xor_satisfiable(s->rep) ? 1 : 0; });
}

gk_status gk_labelcover_opt(const gk_lc* lc, uint64_t cap, int64_t* num, int64_t* den,
                            char** witness) {
    if (!lc || !num || !den) return fail_null("gk_labelcover_opt");
    return wrap([&] {
        gapkit::LcOpt res = gapkit::labelcover_opt(lc->rep, cap ? cap : uint64_t(1) << 22);
        *num = res.value.num();
        *den = res.value.den();
        if (witness) {
            json j = {{"f", res.f}, {"g", res.g}};
            *witness = dup_string(j.dump());
        }
    });
}

static gk_status vertex_oracle(gapkit::OptResult (*solve)(const gapkit::Graph&, int),
                               const char* what, const gk_graph* g, int cap, uint64_t* value,
                               uint64_t* total, char** witness) {
    if (!g || !value) return fail_null(what);
    return wrap([&] {
        gapkit::OptResult res = solve(g->rep, cap ? cap : 32);
        *value = res.value;
        if (total) *total = res.total;
        if (witness) {
            json j = res.vertices;
            *witness = dup_string(j.dump());
        }
    });
}

static gapkit::OptResult call_min_vc(const gapkit::Graph& g, int cap) {
    return gapkit::min_vc(g, cap);
}
static gapkit::OptResult call_max_is(const gapkit::Graph& g, int cap) {
    return gapkit::max_is(g, cap);
}

gk_status gk_min_vc(const gk_graph* g, int cap, uint64_t* value, uint64_t* total,
                    char** witness) {
    return vertex_oracle(call_min_vc, "gk_min_vc", g, cap, value, total, witness);
}

gk_status gk_max_is(const gk_graph* g, int cap, uint64_t* value, uint64_t* total,
                    char** witness) {
    return vertex_oracle(call_max_is, "gk_max_is", g, cap, value, total, witness);
}

gk_status gk_max_hclique_free(const gk_graph* g, int h, int cap, uint64_t* value,
                              uint64_t* total, char** witness) {
    if (!g || !value) return fail_null("gk_max_hclique_free");
    return wrap([&] {
        gapkit::OptResult res = gapkit::max_hclique_free(g->rep, h, cap ? cap : 24);
        *value = res.value;
        if (total) *total = res.total;
        if (witness) {
            json j = res.vertices;
            *witness = dup_string(j.dump());
        }
    });
}

/* ---- refinement-based vertex cover approximation ------------------------ */

gk_status gk_v_invariant(const gk_graph* g, int cap, uint64_t* v, uint64_t* p, uint64_t* q,
                         char** report) {
    if (!g || !v) return fail_null("gk_v_invariant");
    return wrap([&] {
        gapkit::VGReport res = gapkit::v_invariant(g->rep, cap ? cap : 32);
        *v = res.v;
        if (p) *p = res.p;
        if (q) *q = res.q;
        if (report) {
            json j = {{"classes", res.refinement.classes},
                      {"delta", res.refinement.delta},
                      {"x", res.x},
                      {"y", res.y},
                      {"p_witness", res.p_witness},
                      {"p", res.p},
                      {"q", res.q},
                      {"v", res.v}};
            *report = dup_string(j.dump());
        }
    });
}

gk_status gk_c2_gap_witness(int m, uint64_t seed, int max_attempts, gk_graph** g, gk_graph** h,
                            uint64_t* vc_g, uint64_t* vc_h) {
    return wrap([&] {
        gapkit::GapWitness w = gapkit::c2_gap_witness(m, seed, max_attempts ? max_attempts : 256);
        if (vc_g) *vc_g = w.vc_g;
        if (vc_h) *vc_h = w.vc_h;
        if (g) *g = new gk_graph{std::move(w.g)};
        if (h) *h = new gk_graph{std::move(w.h)};
    });
}

/* ---- verification recipes ----------------------------------------------- */

gk_status gk_recipe_names(char** out) {
    if (!out) return fail_null("gk_recipe_names");
    return wrap([&] {
        std::string text;
        for (const std::string& name : gapkit::recipe_names()) {
            text += name;
            text += '\n';
        }
        *out = dup_string(text);
    });
}

gk_status gk_run_recipe(const char* name, uint64_t seed, int jobs, int* pass, char** report) {
    if (!name || !pass) return fail_null("gk_run_recipe");
    return wrap([&] {
        gapkit::VerifyOptions opts;
        opts.seed = seed;
        opts.jobs = jobs > 0 ? jobs : 1;
        gapkit::Report rep = gapkit::run_recipe(name, opts);
        *pass = rep.pass ? 1 : 0;
        put_string(report, rep.text());
    });
}

} /* extern "C" */
