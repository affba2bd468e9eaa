#include "graph.hpp"

#include <algorithm>
#include <sstream>

namespace gapkit {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InvalidArgument("negative vertex count");
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : Graph(n) {
    for (auto& [u, v] : edges) std::tie(u, v) = norm_edge(u, v, n);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

std::pair<int, int> Graph::norm_edge(int u, int v, int n) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop");
    return {std::min(u, v), std::max(u, v)};
}

void Graph::add_edge(int u, int v) {
    auto e = norm_edge(u, v, n_);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    auto e = std::pair(std::min(u, v), std::max(u, v));
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

uint64_t Graph::total_weight() const {
    if (weights_.empty()) return uint64_t(n_);
    uint64_t t = 0;
    for (auto w : weights_) t = add_u64(t, w, "total vertex weight");
    return t;
}

void Graph::set_weights(std::vector<uint64_t> w) {
    if (int(w.size()) != n_) throw InvalidArgument("weight vector length mismatch");
    for (auto x : w)
        if (x == 0) throw InvalidArgument("vertex weights must be positive");
    weights_ = std::move(w);
}

void Graph::set_labels(std::vector<std::string> ls) {
    if (int(ls.size()) != n_) throw InvalidArgument("label vector length mismatch");
    labels_ = std::move(ls);
}

void Graph::set_copartite(CoPartite cp) {
    if (cp.parts <= 0 || cp.psize <= 0 || cp.parts * cp.psize != n_)
        throw InvalidArgument("co-partite shape does not cover the vertex set");
    copartite_ = cp;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    int n = -1;
    int64_t m = -1, edges_seen = 0;
    Graph g;
    std::vector<uint64_t> weights;
    std::vector<std::string> labels;
    bool any_weight = false, any_label = false;
    std::optional<CoPartite> cp;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") {
            std::string sub;
            if (!(ls >> sub)) continue;
            if (sub == "copartite") {
                int parts, psize;
                if (!(ls >> parts >> psize)) fail("expected 'c copartite <parts> <psize>'");
                cp = CoPartite{parts, psize};
            } else if (sub == "label") {
                int v;
                if (!(ls >> v)) fail("expected 'c label <v> <text>'");
                std::string rest;
                std::getline(ls, rest);
                if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
                if (n < 0) fail("label before header");
                if (v < 1 || v > n) fail("label vertex out of range");
                labels[v - 1] = rest;
                any_label = true;
            }
            continue;
        }
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge") fail("expected 'p edge <n> <m>'");
            if (n < 0 || m < 0) fail("negative header counts");
            g = Graph(n);
            weights.assign(n, 1);
            labels.assign(n, "");
            continue;
        }
        if (n < 0) fail("edge data before header");
        if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n) fail("edge endpoint out of range");
            if (u == v) fail("self-loop");
            g.add_edge(u - 1, v - 1);
            ++edges_seen;
            continue;
        }
        if (tag == "w") {
            int v;
            uint64_t w;
            if (!(ls >> v >> w)) fail("expected 'w <v> <weight>'");
            if (v < 1 || v > n) fail("weight vertex out of range");
            if (w == 0) fail("vertex weights must be positive");
            weights[v - 1] = w;
            any_weight = true;
            continue;
        }
        fail("unrecognized line tag '" + tag + "'");
    }
    if (n < 0) throw ParseError("missing 'p edge' header");
    if (edges_seen != m)
        throw ParseError("header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(edges_seen));
    if (any_weight) g.set_weights(std::move(weights));
    if (any_label) g.set_labels(std::move(labels));
    if (cp) g.set_copartite(*cp);
    return g;
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    if (g.copartite())
        out << "c copartite " << g.copartite()->parts << " " << g.copartite()->psize << "\n";
    out << "p edge " << g.n() << " " << g.edges().size() << "\n";
    for (size_t v = 0; v < g.labels().size(); ++v)
        if (!g.labels()[v].empty()) out << "c label " << v + 1 << " " << g.labels()[v] << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    if (g.weighted())
        for (int v = 0; v < g.n(); ++v) out << "w " << v + 1 << " " << g.weight(v) << "\n";
    return out.str();
}

}  // namespace gapkit
