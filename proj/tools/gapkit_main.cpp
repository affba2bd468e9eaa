// gapkit command line front end. Everything goes through the C API in
// gapkit/gapkit.h; instance files use the library's native text formats.
// Exit codes: 0 success (all checks pass for verify), 1 failed verification,
// 2 usage/input error, 3 budget refusal.

#include <gapkit/gapkit.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

struct Fail {
    int code;
};

void ok(gk_status st) {
    if (st == GK_OK) return;
    std::cerr << "error: " << gk_last_error() << "\n";
    throw Fail{st == GK_EBUDGET ? 3 : 2};
}

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    throw Fail{2};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) usage_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) usage_error("cannot open " + path + " for writing");
    out << data;
    if (!out) usage_error("write failed: " + path);
}

template <typename T>
struct Owned {
    T* p = nullptr;
    void (*del)(T*) = nullptr;
    explicit Owned(void (*d)(T*)) : del(d) {}
    ~Owned() {
        if (p) del(p);
    }
    Owned(const Owned&) = delete;
    Owned& operator=(const Owned&) = delete;
    Owned(Owned&& o) : p(o.p), del(o.del) { o.p = nullptr; }
    T** slot() { return &p; }
    operator T*() const { return p; }
};

struct Str {
    char* p = nullptr;
    ~Str() { gk_string_free(p); }
    Str() = default;
    Str(const Str&) = delete;
    Str& operator=(const Str&) = delete;
    char** slot() { return &p; }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

std::pair<int64_t, int64_t> parse_ratio(const std::string& s) {
    try {
        size_t slash = s.find('/');
        if (slash == std::string::npos) return {std::stoll(s), 1};
        return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (...) {
        usage_error("expected a rational like 3/4, got '" + s + "'");
    }
}

std::string fraction(uint64_t value, uint64_t total) {
    if (total == 0) return "1/1";
    uint64_t g = std::gcd(value, total);
    return std::to_string(value / g) + "/" + std::to_string(total / g);
}

struct GlobalOpts {
    uint64_t seed = 1;
    int cap = 0;  // 0 picks each operation's default
    int jobs = 1;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void emit_kv(const GlobalOpts& g, const std::vector<std::pair<std::string, std::string>>& kvs) {
    if (g.json()) {
        nlohmann::json j;
        for (const auto& [k, v] : kvs) j[k] = v;
        std::cout << j.dump() << "\n";
        return;
    }
    bool first = true;
    for (const auto& [k, v] : kvs) {
        std::cout << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    std::cout << "\n";
}

/* ---- instance loading ---------------------------------------------------- */

Owned<gk_xor> load_xor(const std::string& path) {
    Owned<gk_xor> h(gk_xor_free);
    ok(gk_xor_parse(read_input(path).c_str(), h.slot()));
    return h;
}

Owned<gk_cnf> load_cnf(const std::string& path) {
    Owned<gk_cnf> h(gk_cnf_free);
    ok(gk_cnf_parse(read_input(path).c_str(), h.slot()));
    return h;
}

Owned<gk_graph> load_graph(const std::string& path) {
    Owned<gk_graph> h(gk_graph_free);
    ok(gk_graph_parse(read_input(path).c_str(), h.slot()));
    return h;
}

Owned<gk_lc> load_lc(const std::string& path) {
    Owned<gk_lc> h(gk_lc_free);
    ok(gk_lc_parse(read_input(path).c_str(), h.slot()));
    return h;
}

// Format sniffing for game inputs: "lang:3xor" / "lang:3sat" are built-in
// language structures; files are classified by their header line ("p xor",
// "p cnf", "p edge").
std::string sniff(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok != "p") return "";
        ls >> tok;
        return tok;
    }
    return "";
}

Owned<gk_struct> load_structure(const std::string& spec, gk_encoding enc) {
    Owned<gk_struct> h(gk_struct_free);
    if (spec == "lang:3xor") {
        ok(gk_language_structure(GK_LANG_XOR3, enc, h.slot()));
        return h;
    }
    if (spec == "lang:3sat") {
        ok(gk_language_structure(GK_LANG_SAT3, enc, h.slot()));
        return h;
    }
    std::string text = read_input(spec);
    std::string kind = sniff(text);
    if (kind == "xor") {
        Owned<gk_xor> sys(gk_xor_free);
        ok(gk_xor_parse(text.c_str(), sys.slot()));
        ok(gk_xor_encode(sys, enc, h.slot()));
    } else if (kind == "cnf") {
        Owned<gk_cnf> sys(gk_cnf_free);
        ok(gk_cnf_parse(text.c_str(), sys.slot()));
        ok(gk_cnf_encode(sys, enc, h.slot()));
    } else if (kind == "edge") {
        Owned<gk_graph> gr(gk_graph_free);
        ok(gk_graph_parse(text.c_str(), gr.slot()));
        ok(gk_graph_structure(gr, h.slot()));
    } else {
        usage_error(spec + ": unrecognized instance format (expected p xor / p cnf / p edge)");
    }
    return h;
}

gk_encoding parse_encoding(const std::string& s) {
    if (s == "first") return GK_ENCODING_FIRST;
    if (s == "second") return GK_ENCODING_SECOND;
    usage_error("encoding must be 'first' or 'second', got '" + s + "'");
}

/* ---- command bodies ------------------------------------------------------ */

void cmd_gen_xor(const GlobalOpts& g, int n, int r, const std::string& out) {
    Owned<gk_xor> sys(gk_xor_free);
    ok(gk_gen_xor(n, r, g.seed, sys.slot()));
    Str text;
    ok(gk_xor_write(sys, text.slot()));
    write_output(out, text.str());
}

void cmd_gen_gap_pair(const GlobalOpts& g, int n, int r, const std::string& epsilon,
                      int k_check, const std::string& out_seed, const std::string& out_easy,
                      const std::string& out_hard) {
    auto [en, ed] = parse_ratio(epsilon);
    Owned<gk_xor> seed_sys(gk_xor_free), easy(gk_xor_free), hard(gk_xor_free);
    Str report;
    ok(gk_gen_gap_pair(n, r, en, ed, k_check, g.seed, g.cap, seed_sys.slot(), easy.slot(),
                       hard.slot(), report.slot()));
    auto put = [](gk_xor* sys, const std::string& path) {
        if (path.empty()) return;
        Str text;
        ok(gk_xor_write(sys, text.slot()));
        write_output(path, text.str());
    };
    put(seed_sys, out_seed);
    put(easy, out_easy);
    put(hard, out_hard);
    std::cout << report.str() << "\n";
}

void cmd_gen_regular(const GlobalOpts& g, int n, int d, bool bipartite, const std::string& out) {
    Owned<gk_graph> gr(gk_graph_free);
    ok(bipartite ? gk_gen_regular_bipartite(n, d, g.seed, gr.slot())
                 : gk_gen_regular(n, d, g.seed, gr.slot()));
    Str text;
    ok(gk_graph_write(gr, text.slot()));
    write_output(out, text.str());
}

void cmd_gadget(const std::string& in, bool zero_rhs, const std::string& out) {
    Owned<gk_xor> sys = load_xor(in);
    Owned<gk_xor> base(gk_xor_free);
    if (zero_rhs) ok(gk_homogeneous(sys, base.slot()));
    Owned<gk_xor> lifted(gk_xor_free);
    ok(gk_gadget(zero_rhs ? base.p : sys.p, lifted.slot()));
    Str text;
    ok(gk_xor_write(lifted, text.slot()));
    write_output(out, text.str());
}

void put_stats(const std::string& path, const Str& stats) {
    if (!path.empty()) write_output(path, stats.str() + "\n");
}

void cmd_reduce_xor2sat(const std::string& in, const std::string& out) {
    Owned<gk_xor> sys = load_xor(in);
    Owned<gk_cnf> cnf(gk_cnf_free);
    ok(gk_xor_to_cnf(sys, cnf.slot()));
    Str text;
    ok(gk_cnf_write(cnf, text.slot()));
    write_output(out, text.str());
}

void cmd_reduce_bipartite(const std::string& in, const std::string& out) {
    Owned<gk_xor> sys = load_xor(in);
    Owned<gk_lc> lc(gk_lc_free);
    ok(gk_bipartite_reduction(sys, lc.slot()));
    Str text;
    ok(gk_lc_write(lc, text.slot()));
    write_output(out, text.str());
}

void cmd_reduce_repeat(const std::string& in, int t, const std::string& out) {
    Owned<gk_lc> lc = load_lc(in);
    Owned<gk_lc> rep(gk_lc_free);
    ok(gk_parallel_repetition(lc, t, 0, 0, 0, rep.slot()));
    Str text;
    ok(gk_lc_write(rep, text.slot()));
    write_output(out, text.str());
}

void put_names(const std::string& path, gk_lc* lc) {
    if (path.empty()) return;
    Str names;
    ok(gk_longcode_names(lc, names.slot()));
    write_output(path, names.str());
}

void cmd_reduce_lc_xor(const std::string& in, const std::string& epsilon, const std::string& out,
                       const std::string& names, const std::string& stats_path) {
    auto [en, ed] = parse_ratio(epsilon);
    Owned<gk_lc> lc = load_lc(in);
    Owned<gk_xor> sys(gk_xor_free);
    Str stats;
    ok(gk_longcode_xor(lc, en, ed, 0, 0, sys.slot(), stats.slot()));
    put_names(names, lc);
    put_stats(stats_path, stats);
    Str text;
    ok(gk_xor_write(sys, text.slot()));
    write_output(out, text.str());
}

void cmd_reduce_lc_sat(const std::string& in, const std::string& epsilon,
                       const std::string& delta, const std::string& out,
                       const std::string& names, const std::string& stats_path) {
    if (epsilon.empty() == delta.empty())
        usage_error("lc-sat takes exactly one of --epsilon (single layer) or --delta (schedule)");
    Owned<gk_lc> lc = load_lc(in);
    Owned<gk_cnf> sys(gk_cnf_free);
    Str stats;
    if (!epsilon.empty()) {
        auto [en, ed] = parse_ratio(epsilon);
        ok(gk_longcode_sat_single(lc, en, ed, 0, 0, sys.slot(), stats.slot()));
    } else {
        auto [dn, dd] = parse_ratio(delta);
        ok(gk_longcode_sat(lc, dn, dd, 0, 0, sys.slot(), stats.slot()));
    }
    put_names(names, lc);
    put_stats(stats_path, stats);
    Str text;
    ok(gk_cnf_write(sys, text.slot()));
    write_output(out, text.str());
}

void cmd_reduce_fglss(const GlobalOpts& g, const std::string& in, const std::string& out) {
    Owned<gk_xor> sys = load_xor(in);
    Owned<gk_graph> gr(gk_graph_free);
    ok(gk_fglss(sys, g.cap > 0 ? uint64_t(g.cap) : 0, gr.slot()));
    Str text;
    ok(gk_graph_write(gr, text.slot()));
    write_output(out, text.str());
}

void cmd_reduce_lc_graph(const GlobalOpts& g, const std::string& in, const std::string& out) {
    Owned<gk_lc> lc = load_lc(in);
    Owned<gk_graph> gr(gk_graph_free);
    ok(gk_labelcover_to_graph(lc, g.cap > 0 ? uint64_t(g.cap) : 0, gr.slot()));
    Str text;
    ok(gk_graph_write(gr, text.slot()));
    write_output(out, text.str());
}

void cmd_reduce_dinur_safra(const std::string& in, const std::string& bias, int l1,
                            const std::string& out) {
    auto [bn, bd] = parse_ratio(bias);
    Owned<gk_graph> g = load_graph(in);
    Owned<gk_graph> blocks(gk_graph_free);
    ok(gk_dinur_safra(g, bn, bd, l1, 0, 0, blocks.slot()));
    Str text;
    ok(gk_graph_write(blocks, text.slot()));
    write_output(out, text.str());
}

void cmd_reduce_unweight(const std::string& in, const std::string& out) {
    Owned<gk_graph> g = load_graph(in);
    Owned<gk_graph> unit(gk_graph_free);
    ok(gk_unweight(g, 0, 0, unit.slot()));
    Str text;
    ok(gk_graph_write(unit, text.slot()));
    write_output(out, text.str());
}

void put_lc(const std::string& path, gk_lc* lc) {
    if (path.empty()) return;
    Str text;
    ok(gk_lc_write(lc, text.slot()));
    write_output(path, text.str());
}

void put_graph(const std::string& path, gk_graph* g) {
    if (path.empty()) return;
    Str text;
    ok(gk_graph_write(g, text.slot()));
    write_output(path, text.str());
}

void cmd_pipeline_xor(const std::string& in, int t, const std::string& epsilon,
                      const std::string& out, const std::string& out_bip,
                      const std::string& out_rep, const std::string& stats_path) {
    auto [en, ed] = parse_ratio(epsilon);
    Owned<gk_xor> sys = load_xor(in);
    Owned<gk_lc> bip(gk_lc_free), rep(gk_lc_free);
    Owned<gk_xor> result(gk_xor_free);
    Str stats;
    ok(gk_pipeline_xor(sys, t, en, ed, bip.slot(), rep.slot(), result.slot(), stats.slot()));
    put_lc(out_bip, bip);
    put_lc(out_rep, rep);
    put_stats(stats_path, stats);
    Str text;
    ok(gk_xor_write(result, text.slot()));
    write_output(out, text.str());
}

void cmd_pipeline_sat(const std::string& in, int t, const std::string& epsilon,
                      const std::string& delta, const std::string& out,
                      const std::string& out_bip, const std::string& out_rep,
                      const std::string& stats_path) {
    if (epsilon.empty() == delta.empty())
        usage_error(
            "pipeline-sat takes exactly one of --epsilon (single layer) or --delta (schedule)");
    Owned<gk_xor> sys = load_xor(in);
    Owned<gk_lc> bip(gk_lc_free), rep(gk_lc_free);
    Owned<gk_cnf> result(gk_cnf_free);
    Str stats;
    if (!epsilon.empty()) {
        auto [en, ed] = parse_ratio(epsilon);
        ok(gk_pipeline_sat_single(sys, t, en, ed, bip.slot(), rep.slot(), result.slot(),
                                  stats.slot()));
    } else {
        auto [dn, dd] = parse_ratio(delta);
        ok(gk_pipeline_sat(sys, t, dn, dd, bip.slot(), rep.slot(), result.slot(), stats.slot()));
    }
    put_lc(out_bip, bip);
    put_lc(out_rep, rep);
    put_stats(stats_path, stats);
    Str text;
    ok(gk_cnf_write(result, text.slot()));
    write_output(out, text.str());
}

void cmd_pipeline_vc(const std::string& in, int t, const std::string& bias, int l1,
                     const std::string& out, const std::string& out_bip,
                     const std::string& out_rep, const std::string& out_conflict,
                     const std::string& out_blocks) {
    auto [bn, bd] = parse_ratio(bias);
    Owned<gk_xor> sys = load_xor(in);
    Owned<gk_lc> bip(gk_lc_free), rep(gk_lc_free);
    Owned<gk_graph> conflict(gk_graph_free), blocks(gk_graph_free), unit(gk_graph_free);
    ok(gk_pipeline_vc(sys, t, bn, bd, l1, bip.slot(), rep.slot(), conflict.slot(), blocks.slot(),
                      unit.slot()));
    put_lc(out_bip, bip);
    put_lc(out_rep, rep);
    put_graph(out_conflict, conflict);
    put_graph(out_blocks, blocks);
    Str text;
    ok(gk_graph_write(unit, text.slot()));
    write_output(out, text.str());
}

void cmd_game(const GlobalOpts& g, bool bijective, int k, const std::string& a_spec,
              const std::string& b_spec, const std::string& encoding,
              const std::string& cert_path) {
    gk_encoding enc = parse_encoding(encoding);
    Owned<gk_struct> a = load_structure(a_spec, enc);
    Owned<gk_struct> b = load_structure(b_spec, enc);
    uint64_t max_positions = g.cap > 0 ? uint64_t(g.cap) : 0;
    if (!cert_path.empty()) {
        Str cert;
        ok(gk_game_certificate(a, b, k, bijective ? 1 : 0, max_positions, cert.slot()));
        write_output(cert_path, cert.str() + "\n");
        auto j = nlohmann::json::parse(cert.str());
        emit_kv(g, {{"winner", j["winner"].get<std::string>()},
                    {"live", std::to_string(j["live"].get<uint64_t>())},
                    {"total", std::to_string(j["total"].get<uint64_t>())},
                    {"certificate", cert_path}});
        return;
    }
    int winner = 0;
    uint64_t live = 0, total = 0;
    ok(bijective ? gk_bijective_game(a, b, k, max_positions, &winner, &live, &total)
                 : gk_existential_game(a, b, k, max_positions, &winner, &live, &total));
    emit_kv(g, {{"winner", winner == GK_DUPLICATOR ? "Duplicator" : "Spoiler"},
                {"live", std::to_string(live)},
                {"total", std::to_string(total)}});
}

void cmd_refine(const GlobalOpts& g, const std::string& in) {
    Owned<gk_graph> gr = load_graph(in);
    Str text;
    ok(gk_color_refinement(gr, text.slot()));
    if (g.json()) {
        std::cout << text.str() << "\n";
        return;
    }
    auto j = nlohmann::json::parse(text.str());
    size_t i = 0;
    for (const auto& cls : j["classes"]) {
        std::cout << "class " << i++ << ":";
        for (const auto& v : cls) std::cout << " " << v.get<int>();
        std::cout << "\n";
    }
    i = 0;
    for (const auto& row : j["delta"]) {
        std::cout << "delta " << i++ << ":";
        for (const auto& d : row) std::cout << " " << d.get<int>();
        std::cout << "\n";
    }
}

void cmd_c2eq(const GlobalOpts& g, const std::string& a, const std::string& b) {
    Owned<gk_graph> ga = load_graph(a);
    Owned<gk_graph> gb = load_graph(b);
    int eq = 0;
    ok(gk_c2_equivalent(ga, gb, &eq));
    emit_kv(g, {{"equivalent", eq ? "true" : "false"}});
}

void cmd_oracle_maxsat(const GlobalOpts& g, bool xors, const std::string& in) {
    uint64_t value = 0, total = 0;
    Str witness;
    if (xors) {
        Owned<gk_xor> sys = load_xor(in);
        ok(gk_max_xor(sys, g.cap, g.jobs, &value, &total, witness.slot()));
    } else {
        Owned<gk_cnf> sys = load_cnf(in);
        ok(gk_max_cnf(sys, g.cap, g.jobs, &value, &total, witness.slot()));
    }
    emit_kv(g, {{"value", std::to_string(value)},
                {"total", std::to_string(total)},
                {"fraction", fraction(value, total)},
                {"witness", witness.str()}});
}

void cmd_oracle_lcopt(const GlobalOpts& g, const std::string& in) {
    Owned<gk_lc> lc = load_lc(in);
    int64_t num = 0, den = 1;
    Str witness;
    ok(gk_labelcover_opt(lc, g.cap > 0 ? uint64_t(g.cap) : 0, &num, &den, witness.slot()));
    emit_kv(g, {{"value", std::to_string(num) + "/" + std::to_string(den)},
                {"witness", witness.str()}});
}

void cmd_oracle_vertex(const GlobalOpts& g, const std::string& which, const std::string& in,
                       int h) {
    Owned<gk_graph> gr = load_graph(in);
    uint64_t value = 0, total = 0;
    Str witness;
    if (which == "vc")
        ok(gk_min_vc(gr, g.cap, &value, &total, witness.slot()));
    else if (which == "is")
        ok(gk_max_is(gr, g.cap, &value, &total, witness.slot()));
    else
        ok(gk_max_hclique_free(gr, h, g.cap, &value, &total, witness.slot()));
    emit_kv(g, {{"value", std::to_string(value)},
                {"total", std::to_string(total)},
                {"vertices", witness.str()}});
}

void cmd_vcapprox(const GlobalOpts& g, const std::string& in) {
    Owned<gk_graph> gr = load_graph(in);
    uint64_t v = 0, p = 0, q = 0;
    Str report;
    ok(gk_v_invariant(gr, g.cap, &v, &p, &q, report.slot()));
    auto j = nlohmann::json::parse(report.str());
    int n = gk_graph_n(gr);
    int cap = g.cap > 0 ? g.cap : 32;
    nlohmann::json exact;
    if (n <= cap) {
        uint64_t vc = 0, total = 0;
        ok(gk_min_vc(gr, cap, &vc, &total, nullptr));
        exact = {{"vc", vc}, {"ratio", vc ? fraction(v, vc) : fraction(v + 1, 1)}};
        if (vc == 0 && v == 0) exact["ratio"] = "1/1";
    }
    if (g.json()) {
        j["n"] = n;
        if (!exact.is_null()) j["exact"] = exact;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "v=" << v << " p=" << p << " q=" << q << "\n";
    size_t i = 0;
    for (const auto& cls : j["classes"]) {
        std::cout << "class " << i++ << ":";
        for (const auto& vert : cls) std::cout << " " << vert.get<int>();
        std::cout << "\n";
    }
    auto list = [&](const char* name, const nlohmann::json& xs) {
        std::cout << name << ":";
        for (const auto& x : xs) std::cout << " " << x.get<int>();
        std::cout << "\n";
    };
    list("quotient classes (x)", j["x"]);
    list("clique classes (y)", j["y"]);
    list("cover witness", j["p_witness"]);
    if (!exact.is_null())
        std::cout << "vc=" << exact["vc"].get<uint64_t>()
                  << " ratio=" << exact["ratio"].get<std::string>() << "\n";
}

int cmd_verify(const GlobalOpts& g, const std::string& recipe, bool list,
               const std::string& out) {
    if (list) {
        Str names;
        ok(gk_recipe_names(names.slot()));
        std::cout << names.str();
        return 0;
    }
    if (recipe.empty()) usage_error("verify needs a recipe name (or --list)");
    int pass = 0;
    Str report;
    ok(gk_run_recipe(recipe.c_str(), g.seed, g.jobs, &pass, report.slot()));
    std::string text = report.str();
    if (g.json()) {
        size_t at = text.rfind("json=");
        std::cout << (at == std::string::npos ? text : text.substr(at + 5));
    } else {
        std::cout << text;
    }
    if (!out.empty() && out != "-") write_output(out, text);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gap instance construction and verification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_help_all_flag("--help-all", "print help for every subcommand");

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed for randomized constructions");
    app.add_option("--cap", g.cap, "search/size cap override (0 = operation default)");
    app.add_option("--jobs", g.jobs, "worker threads where supported");
    app.add_option("--format", g.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int exit_code = 0;
    auto run = [&](auto body) {
        return [&, body]() {
            try {
                body();
            } catch (const Fail& f) {
                exit_code = f.code;
            }
        };
    };

    // gen
    auto* gen = app.add_subcommand("gen", "generate random instances");
    gen->require_subcommand(1);
    {
        auto* c = gen->add_subcommand("xor", "random 3-occurrence parity system");
        auto n = std::make_shared<int>(8);
        auto r = std::make_shared<int>(2);
        auto out = std::make_shared<std::string>("-");
        c->add_option("--n", *n, "variables")->required();
        c->add_option("--r", *r, "equations per variable (m = r*n)");
        c->add_option("--out", *out, "output file (- for stdout)");
        c->callback(run([&g, n, r, out] { cmd_gen_xor(g, *n, *r, *out); }));
    }
    {
        auto* c = gen->add_subcommand("gap-pair", "seed system with easy/hard gadget pair");
        auto n = std::make_shared<int>(4);
        auto r = std::make_shared<int>(2);
        auto eps = std::make_shared<std::string>("1/4");
        auto kc = std::make_shared<int>(0);
        auto os = std::make_shared<std::string>();
        auto oe = std::make_shared<std::string>();
        auto oh = std::make_shared<std::string>();
        c->add_option("--n", *n, "variables")->required();
        c->add_option("--r", *r, "equations per variable");
        c->add_option("--epsilon", *eps, "recorded gap target");
        c->add_option("--k-check", *kc, "certify k-local satisfiability when > 0");
        c->add_option("--out-seed", *os, "write the seed system here");
        c->add_option("--out-easy", *oe, "write G(S^0) here");
        c->add_option("--out-hard", *oh, "write G(S) here");
        c->callback(run([&g, n, r, eps, kc, os, oe, oh] {
            cmd_gen_gap_pair(g, *n, *r, *eps, *kc, *os, *oe, *oh);
        }));
    }
    {
        auto* c = gen->add_subcommand("regular", "random simple d-regular graph");
        auto n = std::make_shared<int>(8);
        auto d = std::make_shared<int>(3);
        auto out = std::make_shared<std::string>("-");
        c->add_option("--n", *n, "vertices")->required();
        c->add_option("--d", *d, "degree")->required();
        c->add_option("--out", *out, "output file");
        c->callback(run([&g, n, d, out] { cmd_gen_regular(g, *n, *d, false, *out); }));
    }
    {
        auto* c = gen->add_subcommand("regular-bipartite", "random d-regular bipartite graph");
        auto m = std::make_shared<int>(4);
        auto d = std::make_shared<int>(3);
        auto out = std::make_shared<std::string>("-");
        c->add_option("--m", *m, "vertices per side")->required();
        c->add_option("--d", *d, "degree")->required();
        c->add_option("--out", *out, "output file");
        c->callback(run([&g, m, d, out] { cmd_gen_regular(g, *m, *d, true, *out); }));
    }

    // gadget
    {
        auto* c = app.add_subcommand("gadget", "CFI-style doubling G(I) of a parity system");
        auto in = std::make_shared<std::string>();
        auto zero = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>("-");
        c->add_option("input", *in, "parity system file")->required();
        c->add_flag("--zero-rhs", *zero, "zero the right-hand sides first (G(I^0))");
        c->add_option("--out", *out, "output file");
        c->callback(run([in, zero, out] { cmd_gadget(*in, *zero, *out); }));
    }

    // reduce
    auto* reduce = app.add_subcommand("reduce", "instance transformations");
    reduce->require_subcommand(1);
    {
        auto* c = reduce->add_subcommand("xor2sat", "four clauses per parity equation");
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        c->add_option("input", *in, "parity system file")->required();
        c->add_option("--out", *out, "output file");
        c->callback(run([in, out] { cmd_reduce_xor2sat(*in, *out); }));
    }
    {
        auto* c = reduce->add_subcommand("bipartite", "equations vs variables projection game");
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        c->add_option("input", *in, "parity system file")->required();
        c->add_option("--out", *out, "output file");
        c->callback(run([in, out] { cmd_reduce_bipartite(*in, *out); }));
    }
    {
        auto* c = reduce->add_subcommand("repeat", "t-fold parallel repetition");
        auto in = std::make_shared<std::string>();
        auto t = std::make_shared<int>(2);
        auto out = std::make_shared<std::string>("-");
        c->add_option("input", *in, "label cover JSON file")->required();
        c->add_option("--t", *t, "repetitions")->required();
        c->add_option("--out", *out, "output file");
        c->callback(run([in, t, out] { cmd_reduce_repeat(*in, *t, *out); }));
    }
    {
        auto* c = reduce->add_subcommand("lc-xor", "long-code parity test of a projection game");
        auto in = std::make_shared<std::string>();
        auto eps = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        auto names = std::make_shared<std::string>();
        auto stats = std::make_shared<std::string>();
        c->add_option("input", *in, "label cover JSON file")->required();
        c->add_option("--epsilon", *eps, "test bias, rational in (0,1)")->required();
        c->add_option("--out", *out, "output file");
        c->add_option("--names", *names, "variable-name sidecar file");
        c->add_option("--stats", *stats, "emitted/dropped statistics JSON file");
        c->callback(
            run([in, eps, out, names, stats] { cmd_reduce_lc_xor(*in, *eps, *out, *names, *stats); }));
    }
    {
        auto* c = reduce->add_subcommand("lc-sat", "long-code clause test of a projection game");
        auto in = std::make_shared<std::string>();
        auto eps = std::make_shared<std::string>();
        auto delta = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        auto names = std::make_shared<std::string>();
        auto stats = std::make_shared<std::string>();
        c->add_option("input", *in, "label cover JSON file")->required();
        c->add_option("--epsilon", *eps, "single layer at this bias");
        c->add_option("--delta", *delta, "layered epsilon schedule for this delta");
        c->add_option("--out", *out, "output file");
        c->add_option("--names", *names, "variable-name sidecar file");
        c->add_option("--stats", *stats, "statistics JSON file");
        c->callback(run([in, eps, delta, out, names, stats] {
            cmd_reduce_lc_sat(*in, *eps, *delta, *out, *names, *stats);
        }));
    }
    {
        auto* c = reduce->add_subcommand("fglss", "FGLSS conflict graph of a parity system");
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        c->add_option("input", *in, "parity system file")->required();
        c->add_option("--out", *out, "output file");
        c->callback(run([&g, in, out] { cmd_reduce_fglss(g, *in, *out); }));
    }
    {
        auto* c = reduce->add_subcommand("lc-graph", "conflict graph of a projection game");
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        c->add_option("input", *in, "label cover JSON file")->required();
        c->add_option("--out", *out, "output file");
        c->callback(run([&g, in, out] { cmd_reduce_lc_graph(g, *in, *out); }));
    }
    {
        auto* c = reduce->add_subcommand("dinur-safra", "block test over a co-partite graph");
        auto in = std::make_shared<std::string>();
        auto bias = std::make_shared<std::string>();
        auto l1 = std::make_shared<int>(1);
        auto out = std::make_shared<std::string>("-");
        c->add_option("input", *in, "co-partite graph file")->required();
        c->add_option("--bias", *bias, "family bias, rational in (0,1)")->required();
        c->add_option("--l1", *l1, "subset size threshold")->required();
        c->add_option("--out", *out, "output file");
        c->callback(run([in, bias, l1, out] { cmd_reduce_dinur_safra(*in, *bias, *l1, *out); }));
    }
    {
        auto* c = reduce->add_subcommand("unweight", "expand vertex weights into unit copies");
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        c->add_option("input", *in, "graph file")->required();
        c->add_option("--out", *out, "output file");
        c->callback(run([in, out] { cmd_reduce_unweight(*in, *out); }));
    }
    {
        auto* c = reduce->add_subcommand("pipeline-xor",
                                         "bipartite + repeat + parity long code, composed");
        auto in = std::make_shared<std::string>();
        auto t = std::make_shared<int>(1);
        auto eps = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        auto ob = std::make_shared<std::string>();
        auto orp = std::make_shared<std::string>();
        auto stats = std::make_shared<std::string>();
        c->add_option("input", *in, "parity system file")->required();
        c->add_option("--t", *t, "repetitions")->required();
        c->add_option("--epsilon", *eps, "test bias")->required();
        c->add_option("--out", *out, "final system output");
        c->add_option("--out-bipartite", *ob, "write the bipartite game here");
        c->add_option("--out-repeated", *orp, "write the repeated game here");
        c->add_option("--stats", *stats, "statistics JSON file");
        c->callback(run([in, t, eps, out, ob, orp, stats] {
            cmd_pipeline_xor(*in, *t, *eps, *out, *ob, *orp, *stats);
        }));
    }
    {
        auto* c = reduce->add_subcommand("pipeline-sat",
                                         "bipartite + repeat + clause long code, composed");
        auto in = std::make_shared<std::string>();
        auto t = std::make_shared<int>(1);
        auto eps = std::make_shared<std::string>();
        auto delta = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        auto ob = std::make_shared<std::string>();
        auto orp = std::make_shared<std::string>();
        auto stats = std::make_shared<std::string>();
        c->add_option("input", *in, "parity system file")->required();
        c->add_option("--t", *t, "repetitions")->required();
        c->add_option("--epsilon", *eps, "single layer at this bias");
        c->add_option("--delta", *delta, "layered schedule for this delta");
        c->add_option("--out", *out, "final system output");
        c->add_option("--out-bipartite", *ob, "write the bipartite game here");
        c->add_option("--out-repeated", *orp, "write the repeated game here");
        c->add_option("--stats", *stats, "statistics JSON file");
        c->callback(run([in, t, eps, delta, out, ob, orp, stats] {
            cmd_pipeline_sat(*in, *t, *eps, *delta, *out, *ob, *orp, *stats);
        }));
    }
    {
        auto* c = reduce->add_subcommand(
            "pipeline-vc", "bipartite + repeat + conflict + block test + unweight, composed");
        auto in = std::make_shared<std::string>();
        auto t = std::make_shared<int>(1);
        auto bias = std::make_shared<std::string>();
        auto l1 = std::make_shared<int>(1);
        auto out = std::make_shared<std::string>("-");
        auto ob = std::make_shared<std::string>();
        auto orp = std::make_shared<std::string>();
        auto oc = std::make_shared<std::string>();
        auto obl = std::make_shared<std::string>();
        c->add_option("input", *in, "parity system file")->required();
        c->add_option("--t", *t, "repetitions")->required();
        c->add_option("--bias", *bias, "family bias")->required();
        c->add_option("--l1", *l1, "subset size threshold")->required();
        c->add_option("--out", *out, "final unweighted graph output");
        c->add_option("--out-bipartite", *ob, "write the bipartite game here");
        c->add_option("--out-repeated", *orp, "write the repeated game here");
        c->add_option("--out-conflict", *oc, "write the conflict graph here");
        c->add_option("--out-blocks", *obl, "write the block-test graph here");
        c->callback(run([in, t, bias, l1, out, ob, orp, oc, obl] {
            cmd_pipeline_vc(*in, *t, *bias, *l1, *out, *ob, *orp, *oc, *obl);
        }));
    }

    // game
    auto* game = app.add_subcommand("game", "pebble game solvers");
    game->require_subcommand(1);
    for (bool bij : {false, true}) {
        auto* c = game->add_subcommand(bij ? "bij" : "exist",
                                       bij ? "bijective k-pebble game (counting logic)"
                                           : "existential k-pebble game");
        auto k = std::make_shared<int>(2);
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto enc = std::make_shared<std::string>("second");
        auto cert = std::make_shared<std::string>();
        c->add_option("--k", *k, "pebbles")->required();
        c->add_option("A", *a, "instance file or lang:3xor / lang:3sat")->required();
        c->add_option("B", *b, "instance file or lang:3xor / lang:3sat")->required();
        c->add_option("--encoding", *enc, "constraint encoding: first or second");
        c->add_option("--certificate", *cert, "write the audited deletion records here");
        c->callback(run([&g, bij, k, a, b, enc, cert] {
            cmd_game(g, bij, *k, *a, *b, *enc, *cert);
        }));
    }

    // refine / c2eq
    {
        auto* c = app.add_subcommand("refine", "stable color refinement of a graph");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in, "graph file")->required();
        c->callback(run([&g, in] { cmd_refine(g, *in); }));
    }
    {
        auto* c = app.add_subcommand("c2eq", "two-variable counting equivalence of two graphs");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("A", *a, "graph file")->required();
        c->add_option("B", *b, "graph file")->required();
        c->callback(run([&g, a, b] { cmd_c2eq(g, *a, *b); }));
    }

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact optimization oracles");
    oracle->require_subcommand(1);
    {
        auto* c = oracle->add_subcommand("maxxor", "exhaustive maximum satisfied parity weight");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in, "parity system file")->required();
        c->callback(run([&g, in] { cmd_oracle_maxsat(g, true, *in); }));
    }
    {
        auto* c = oracle->add_subcommand("maxcnf", "exhaustive maximum satisfied clause weight");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in, "clause system file")->required();
        c->callback(run([&g, in] { cmd_oracle_maxsat(g, false, *in); }));
    }
    {
        auto* c = oracle->add_subcommand("lcopt", "exact label cover optimum");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in, "label cover JSON file")->required();
        c->callback(run([&g, in] { cmd_oracle_lcopt(g, *in); }));
    }
    {
        auto* c = oracle->add_subcommand("vc", "exact minimum weighted vertex cover");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in, "graph file")->required();
        c->callback(run([&g, in] { cmd_oracle_vertex(g, "vc", *in, 0); }));
    }
    {
        auto* c = oracle->add_subcommand("is", "exact maximum weighted independent set");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in, "graph file")->required();
        c->callback(run([&g, in] { cmd_oracle_vertex(g, "is", *in, 0); }));
    }
    {
        auto* c = oracle->add_subcommand("hisfree", "largest set with no induced h-clique");
        auto in = std::make_shared<std::string>();
        auto h = std::make_shared<int>(3);
        c->add_option("input", *in, "graph file")->required();
        c->add_option("--clique", *h, "forbidden clique size h")->required();
        c->callback(run([&g, in, h] { cmd_oracle_vertex(g, "hisfree", *in, *h); }));
    }

    // vcapprox
    {
        auto* c = app.add_subcommand("vcapprox", "refinement-based vertex cover approximation");
        auto in = std::make_shared<std::string>();
        c->add_option("input", *in, "graph file")->required();
        c->callback(run([&g, in] { cmd_vcapprox(g, *in); }));
    }

    // verify
    {
        auto* c = app.add_subcommand("verify", "run a verification recipe");
        auto recipe = std::make_shared<std::string>();
        auto list = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        c->add_option("recipe", *recipe, "recipe name (see --list)");
        c->add_flag("--list", *list, "print the known recipe names");
        c->add_option("--out", *out, "also write the report to this file");
        c->callback(run([&g, &exit_code, recipe, list, out] {
            exit_code = cmd_verify(g, *recipe, *list, *out);
        }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    return exit_code;
}
