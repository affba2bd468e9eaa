#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace gapkit {

// Certified layout: vertex v belongs to part v / psize, every part is a clique.
struct CoPartite {
    int parts;
    int psize;
    friend bool operator==(const CoPartite&, const CoPartite&) = default;
};

// Simple undirected graph; optional positive vertex weights (empty means all 1),
// optional provenance labels, optional co-partite certificate.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edges);

    void add_edge(int u, int v);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;

    bool weighted() const { return !weights_.empty(); }
    uint64_t weight(int v) const { return weights_.empty() ? 1 : weights_[v]; }
    uint64_t total_weight() const;
    void set_weights(std::vector<uint64_t> w);

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> ls);

    const std::optional<CoPartite>& copartite() const { return copartite_; }
    void set_copartite(CoPartite cp);

    std::vector<std::vector<int>> adjacency() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // (u, v) with u < v, sorted, unique
    std::vector<uint64_t> weights_;
    std::vector<std::string> labels_;
    std::optional<CoPartite> copartite_;

    static std::pair<int, int> norm_edge(int u, int v, int n);
};

Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

}  // namespace gapkit
