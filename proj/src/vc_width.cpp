#include "vc_width.hpp"

#include <utility>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"

namespace gapkit {

VGReport v_invariant(const Graph& g, int cap) {
    VGReport rep;
    rep.refinement = color_refinement(g);
    const auto& cls = rep.refinement.classes;
    const auto& delta = rep.refinement.delta;
    for (int i = 0; i < int(cls.size()); ++i)
        (delta[size_t(i)][size_t(i)] == 0 ? rep.x : rep.y).push_back(i);

    std::vector<std::pair<int, int>> qedges;
    for (size_t a = 0; a < rep.x.size(); ++a)
        for (size_t b = a + 1; b < rep.x.size(); ++b)
            if (delta[size_t(rep.x[a])][size_t(rep.x[b])] > 0) qedges.push_back({int(a), int(b)});
    rep.quotient = Graph(int(rep.x.size()), std::move(qedges));
    if (!rep.x.empty()) {
        std::vector<uint64_t> w;
        for (int i : rep.x) w.push_back(uint64_t(cls[size_t(i)].size()));
        rep.quotient.set_weights(std::move(w));
    }

    OptResult pc = min_vc(rep.quotient, cap);
    rep.p = pc.value;
    for (int qi : pc.vertices) rep.p_witness.push_back(rep.x[size_t(qi)]);
    for (int i : rep.y) rep.q += uint64_t(cls[size_t(i)].size());
    rep.v = add_u64(rep.p, rep.q, "v invariant");
    return rep;
}

GapWitness c2_gap_witness(int m, uint64_t seed, int max_attempts) {
    if (m < 2) throw InvalidArgument("c2_gap_witness: m must be at least 2");
    if (m > 16) throw BudgetError("c2_gap_witness: exact cover oracle capped at 32 vertices");
    GapWitness out;
    Rng rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        Graph g = random_regular_graph(2 * m, 3, rng.next());
        OptResult vc = min_vc(g);
        if (vc.value > uint64_t(m)) {
            out.g = std::move(g);
            out.vc_g = vc.value;
            out.attempts = attempt;
            break;
        }
    }
    if (out.attempts == 0) throw BudgetError("c2_gap_witness: resample budget exhausted");
    out.h = random_regular_bipartite(m, 3, rng.next());
    out.vc_h = min_vc(out.h).value;
    out.report_g = v_invariant(out.g);
    out.report_h = v_invariant(out.h);
    out.equivalent = c2_equivalent(out.g, out.h);
    return out;
}

}  // namespace gapkit
