#pragma once

#include "common.hpp"
#include "graph.hpp"
#include "xor_system.hpp"

// Shared helpers for the unit tests. Random instances mirror the shapes the
// library itself generates: three distinct variables per equation, fair rhs.

inline gapkit::XorSystem random_xor_system(int n, int m, gapkit::Rng& rng) {
    gapkit::XorSystem sys(n);
    for (int i = 0; i < m; ++i) {
        int a = int(rng.below(uint64_t(n)));
        int b = a, c = a;
        while (b == a) b = int(rng.below(uint64_t(n)));
        while (c == a || c == b) c = int(rng.below(uint64_t(n)));
        sys.add(a, b, c, int(rng.bit()), 1);
    }
    return sys;
}

inline gapkit::Graph random_graph(int n, gapkit::Rng& rng) {
    gapkit::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bit()) g.add_edge(u, v);
    return g;
}

inline gapkit::Graph path_graph(int n) {
    gapkit::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline gapkit::Graph cycle_graph(int n) {
    gapkit::Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline gapkit::Graph complete_graph(int n) {
    gapkit::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline gapkit::Graph complete_bipartite(int a, int b) {
    gapkit::Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

inline gapkit::Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }
