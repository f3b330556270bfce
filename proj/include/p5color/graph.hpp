#ifndef P5COLOR_GRAPH_HPP
#define P5COLOR_GRAPH_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "p5color/vertex_set.hpp"

namespace p5c {

// Undirected simple graph over internal ids 0..n-1. Immutable after
// construction; adjacency is held as packed neighbor sets so membership and
// intersection run word-parallel.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    // External labels (original 1-indexed DIMACS ids, or whatever the source
    // used). Defaults to the identity.
    int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    void set_labels(std::vector<int> labels);
    const std::vector<int>& labels() const { return labels_; }

    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> labels_;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

std::vector<VertexSet> connected_components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent; // new id -> parent id
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& verts);

// First induced path on 5 vertices in deterministic order, or absent iff the
// graph is P5-free. The witness (a,b,c,d,e) carries exactly the four path
// edges among its ten pairs.
std::optional<std::array<int, 5>> find_induced_p5(const Graph& g);

// A clique on k+1 vertices if one exists.
std::optional<VertexSet> find_clique_exceeding(const Graph& g, int k);

struct DominatingStructure {
    enum class Kind { Clique, PathP3 };
    VertexSet vertices;
    Kind kind = Kind::Clique;
};

// Smallest dominating clique or dominating P3 of a connected graph, searched
// by increasing size (cliques before P3s at size 3, ties by lexicographically
// smallest vertex set). size_cap bounds candidate clique size; existence is
// guaranteed on connected P5-free inputs whose cliques fit under the cap.
DominatingStructure find_dominating_structure(const Graph& g,
                                              std::optional<int> size_cap = std::nullopt);

// Validation helpers for the structure contract.
bool dominates(const Graph& g, const VertexSet& s);
bool induces_clique(const Graph& g, const VertexSet& s);
bool induces_p3(const Graph& g, const VertexSet& s);

} // namespace p5c

#endif
