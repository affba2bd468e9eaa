#include "xor_system.hpp"

#include <algorithm>
#include <sstream>

namespace gapkit {

XorSystem::XorSystem(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw InvalidArgument("negative variable count");
}

void XorSystem::add(int a, int b, int c, int rhs, uint64_t mult) {
    std::array<int, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    if (v[0] < 0 || v[2] >= nvars_)
        throw InvalidArgument("constraint variable out of range");
    if (v[0] == v[1] || v[1] == v[2])
        throw InvalidArgument("constraint with repeated variable");
    if (rhs != 0 && rhs != 1) throw InvalidArgument("rhs must be 0 or 1");
    if (mult == 0) throw InvalidArgument("zero multiplicity");
    auto key = [](const XorConstraint& x) { return std::tuple(x.v, x.rhs); };
    XorConstraint nc{v, uint8_t(rhs), mult};
    auto it = std::lower_bound(cons_.begin(), cons_.end(), nc,
                               [&](const XorConstraint& l, const XorConstraint& r) {
                                   return key(l) < key(r);
                               });
    if (it != cons_.end() && key(*it) == key(nc))
        it->mult = add_u64(it->mult, mult, "constraint multiplicity");
    else
        cons_.insert(it, nc);
}

uint64_t XorSystem::total_weight() const {
    uint64_t t = 0;
    for (const auto& c : cons_) t = add_u64(t, c.mult, "total weight");
    return t;
}

CnfSystem::CnfSystem(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw InvalidArgument("negative variable count");
}

void CnfSystem::add(Literal a, Literal b, Literal c, uint64_t mult) {
    std::array<Literal, 3> ls{a, b, c};
    std::sort(ls.begin(), ls.end(), [](Literal l, Literal r) { return l.var < r.var; });
    CnfClause nc{{ls[0].var, ls[1].var, ls[2].var}, {ls[0].s, ls[1].s, ls[2].s}, mult};
    if (nc.v[0] < 0 || nc.v[2] >= nvars_) throw InvalidArgument("clause variable out of range");
    if (nc.v[0] == nc.v[1] || nc.v[1] == nc.v[2])
        throw InvalidArgument("clause with repeated variable");
    for (auto s : nc.s)
        if (s != 0 && s != 1) throw InvalidArgument("literal sign must be 0 or 1");
    if (mult == 0) throw InvalidArgument("zero multiplicity");
    auto key = [](const CnfClause& x) { return std::tuple(x.v, x.s); };
    auto it = std::lower_bound(cls_.begin(), cls_.end(), nc,
                               [&](const CnfClause& l, const CnfClause& r) {
                                   return key(l) < key(r);
                               });
    if (it != cls_.end() && key(*it) == key(nc))
        it->mult = add_u64(it->mult, mult, "clause multiplicity");
    else
        cls_.insert(it, nc);
}

uint64_t CnfSystem::total_weight() const {
    uint64_t t = 0;
    for (const auto& c : cls_) t = add_u64(t, c.mult, "total weight");
    return t;
}

static void check_assignment(int nvars, const std::vector<uint8_t>& x) {
    if (int(x.size()) != nvars) throw InvalidArgument("assignment length mismatch");
    for (auto v : x)
        if (v > 1) throw InvalidArgument("assignment values must be 0 or 1");
}

uint64_t sat_weight(const XorSystem& sys, const std::vector<uint8_t>& x) {
    check_assignment(sys.nvars(), x);
    uint64_t t = 0;
    for (const auto& c : sys.constraints())
        if (((x[c.v[0]] ^ x[c.v[1]] ^ x[c.v[2]]) & 1) == c.rhs)
            t = add_u64(t, c.mult, "satisfied weight");
    return t;
}

uint64_t sat_weight(const CnfSystem& sys, const std::vector<uint8_t>& x) {
    check_assignment(sys.nvars(), x);
    uint64_t t = 0;
    for (const auto& c : sys.clauses())
        if (x[c.v[0]] == c.s[0] || x[c.v[1]] == c.s[1] || x[c.v[2]] == c.s[2])
            t = add_u64(t, c.mult, "satisfied weight");
    return t;
}

Rational sat_fraction(const XorSystem& sys, const std::vector<uint8_t>& x) {
    uint64_t total = sys.total_weight();
    if (total == 0) return Rational(1);
    return Rational(int64_t(sat_weight(sys, x)), int64_t(total));
}

Rational sat_fraction(const CnfSystem& sys, const std::vector<uint8_t>& x) {
    uint64_t total = sys.total_weight();
    if (total == 0) return Rational(1);
    return Rational(int64_t(sat_weight(sys, x)), int64_t(total));
}

CnfSystem xor_to_cnf(const XorSystem& sys) {
    CnfSystem out(sys.nvars());
    for (const auto& c : sys.constraints())
        for (int s0 = 0; s0 < 2; ++s0)
            for (int s1 = 0; s1 < 2; ++s1) {
                int s2 = c.rhs ^ s0 ^ s1;
                out.add({c.v[0], uint8_t(s0)}, {c.v[1], uint8_t(s1)}, {c.v[2], uint8_t(s2)},
                        c.mult);
            }
    return out;
}

namespace {

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    explicit LineReader(const std::string& text) : in(text) {}
    // Returns false at end of input; skips blank and comment lines.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            tokens.clear();
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens[0] == "c") continue;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    }
};

int64_t parse_int(const std::string& tok, LineReader& r) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(tok, &pos);
        if (pos != tok.size()) r.fail("bad integer '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        r.fail("bad integer '" + tok + "'");
    }
}

}  // namespace

XorSystem parse_xor(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> t;
    if (!r.next(t)) throw ParseError("empty input");
    if (t.size() != 4 || t[0] != "p" || t[1] != "xor") r.fail("expected 'p xor <n> <m>'");
    int64_t n = parse_int(t[2], r), m = parse_int(t[3], r);
    if (n < 0 || m < 0) r.fail("negative header counts");
    XorSystem sys(n);
    int64_t seen = 0;
    while (r.next(t)) {
        if (t.size() != 5) r.fail("expected '<i> <j> <k> <b> <mult>'");
        int64_t i = parse_int(t[0], r), j = parse_int(t[1], r), k = parse_int(t[2], r);
        int64_t b = parse_int(t[3], r), mult = parse_int(t[4], r);
        if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
            r.fail("variable index out of range");
        if (i == j || j == k || i == k) r.fail("repeated variable in constraint");
        if (b != 0 && b != 1) r.fail("rhs must be 0 or 1");
        if (mult < 1) r.fail("multiplicity must be positive");
        sys.add(int(i), int(j), int(k), int(b), uint64_t(mult));
        ++seen;
    }
    if (seen != m) throw ParseError("header announced " + std::to_string(m) +
                                    " constraints, found " + std::to_string(seen));
    return sys;
}

std::string write_xor(const XorSystem& sys) {
    std::ostringstream out;
    out << "p xor " << sys.nvars() << " " << sys.size() << "\n";
    for (const auto& c : sys.constraints())
        out << c.v[0] << " " << c.v[1] << " " << c.v[2] << " " << int(c.rhs) << " " << c.mult
            << "\n";
    return out.str();
}

CnfSystem parse_cnf(const std::string& text) {
    LineReader r(text);
    std::vector<std::string> t;
    if (!r.next(t)) throw ParseError("empty input");
    if (t.size() != 4 || t[0] != "p" || t[1] != "cnf") r.fail("expected 'p cnf <n> <m>'");
    int64_t n = parse_int(t[2], r), m = parse_int(t[3], r);
    if (n < 0 || m < 0) r.fail("negative header counts");
    CnfSystem sys(n);
    int64_t seen = 0;
    while (r.next(t)) {
        if (t.size() != 4 || t[3] != "0") r.fail("expected three literals terminated by 0");
        Literal ls[3];
        for (int a = 0; a < 3; ++a) {
            int64_t lit = parse_int(t[a], r);
            if (lit == 0) r.fail("unexpected 0 literal");
            int64_t var = (lit > 0 ? lit : -lit) - 1;
            if (var >= n) r.fail("variable index out of range");
            ls[a] = {int(var), uint8_t(lit > 0 ? 1 : 0)};
        }
        if (ls[0].var == ls[1].var || ls[0].var == ls[2].var || ls[1].var == ls[2].var)
            r.fail("repeated variable in clause");
        sys.add(ls[0], ls[1], ls[2], 1);
        ++seen;
    }
    if (seen != m) throw ParseError("header announced " + std::to_string(m) +
                                    " clauses, found " + std::to_string(seen));
    return sys;
}

std::string write_cnf(const CnfSystem& sys) {
    uint64_t lines = sys.total_weight();
    if (lines > 4000000)
        throw BudgetError("cnf writer: " + std::to_string(lines) +
                          " clause repetitions exceed the 4000000-line format budget");
    std::ostringstream out;
    out << "p cnf " << sys.nvars() << " " << lines << "\n";
    for (const auto& c : sys.clauses()) {
        std::ostringstream line;
        for (int a = 0; a < 3; ++a) line << (c.s[a] ? c.v[a] + 1 : -(c.v[a] + 1)) << " ";
        line << "0\n";
        for (uint64_t i = 0; i < c.mult; ++i) out << line.str();
    }
    return out.str();
}

}  // namespace gapkit
