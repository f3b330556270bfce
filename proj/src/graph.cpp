#include "p5color/graph.hpp"

#include <algorithm>
#include <string>

#include "p5color/errors.hpp"

namespace p5c {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }
    for (int v = 0; v < n; ++v) edge_count_ += static_cast<std::size_t>(degree(v));
    edge_count_ /= 2;
    labels_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels_[static_cast<std::size_t>(v)] = v;
}

void Graph::set_labels(std::vector<int> labels) {
    if (static_cast<int>(labels.size()) != n_)
        throw InputError("label vector size does not match vertex count");
    labels_ = std::move(labels);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen.contains(v)) continue;
        VertexSet comp = VertexSet::single(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int u : frontier) next |= g.neighbors(u);
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        seen |= comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& verts) {
    InducedSubgraph out;
    out.to_parent = verts.ids();
    std::vector<int> to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        to_new[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        const int u = out.to_parent[i];
        VertexSet in_both = g.neighbors(u) & verts;
        for (int v : in_both)
            if (u < v) edges.emplace_back(static_cast<int>(i), to_new[static_cast<std::size_t>(v)]);
    }
    out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
    std::vector<int> labels;
    labels.reserve(out.to_parent.size());
    for (int p : out.to_parent) labels.push_back(g.label(p));
    out.graph.set_labels(std::move(labels));
    return out;
}

namespace {

// DFS path extension: grow an induced path, allowing as next vertex only
// neighbors of the tail that avoid the closed neighborhoods of all earlier
// path vertices.
bool extend_induced_path(const Graph& g, std::array<int, 5>& path, int len,
                         const VertexSet& blocked) {
    if (len == 5) return true;
    const int tail = path[static_cast<std::size_t>(len - 1)];
    VertexSet cand = g.neighbors(tail) - blocked;
    if (cand.empty()) return false;
    VertexSet blocked2 = blocked | g.neighbors(tail);
    blocked2.add(tail);
    for (int w : cand) {
        path[static_cast<std::size_t>(len)] = w;
        if (extend_induced_path(g, path, len + 1, blocked2)) return true;
    }
    return false;
}

} // namespace

std::optional<std::array<int, 5>> find_induced_p5(const Graph& g) {
    std::array<int, 5> path{};
    for (int a = 0; a < g.vertex_count(); ++a) {
        path[0] = a;
        if (extend_induced_path(g, path, 1, VertexSet::single(a))) return path;
    }
    return std::nullopt;
}

namespace {

bool extend_clique(const Graph& g, VertexSet& clique, int size, int target,
                   const VertexSet& candidates) {
    if (size == target) return true;
    if (size + candidates.count() < target) return false;
    for (int v : candidates) {
        clique.add(v);
        VertexSet rest = candidates & g.neighbors(v);
        // keep enumeration lexicographic: only ids above v remain candidates
        VertexSet above;
        for (int w = rest.next_after(v); w != -1; w = rest.next_after(w)) above.add(w);
        if (extend_clique(g, clique, size + 1, target, above)) return true;
        clique.remove(v);
    }
    return false;
}

} // namespace

std::optional<VertexSet> find_clique_exceeding(const Graph& g, int k) {
    if (k < 0) throw InputError("k must be non-negative");
    const int target = k + 1;
    if (target > g.vertex_count()) return std::nullopt;
    VertexSet clique;
    if (extend_clique(g, clique, 0, target, VertexSet::all(g.vertex_count()))) return clique;
    return std::nullopt;
}

bool dominates(const Graph& g, const VertexSet& s) {
    VertexSet covered = s;
    for (int v : s) covered |= g.neighbors(v);
    return covered.contains_all(VertexSet::all(g.vertex_count()));
}

bool induces_clique(const Graph& g, const VertexSet& s) {
    for (int u : s)
        for (int v = s.next_after(u); v != -1; v = s.next_after(v))
            if (!g.adjacent(u, v)) return false;
    return true;
}

bool induces_p3(const Graph& g, const VertexSet& s) {
    if (s.count() != 3) return false;
    auto v = s.ids();
    int edges = static_cast<int>(g.adjacent(v[0], v[1])) + static_cast<int>(g.adjacent(v[0], v[2])) +
                static_cast<int>(g.adjacent(v[1], v[2]));
    return edges == 2;
}

namespace {

// Enumerate cliques of exactly `target` vertices in lexicographic tuple
// order, stopping at the first one that dominates. Coverage of closed
// neighborhoods is carried incrementally.
bool find_dominating_clique(const Graph& g, int target, VertexSet& clique, int size,
                            const VertexSet& candidates, const VertexSet& covered,
                            const VertexSet& everyone) {
    if (size == target) return covered.contains_all(everyone);
    if (size + candidates.count() < target) return false;
    for (int v : candidates) {
        clique.add(v);
        VertexSet covered2 = covered | g.neighbors(v);
        covered2.add(v);
        VertexSet rest = candidates & g.neighbors(v);
        VertexSet above;
        for (int w = rest.next_after(v); w != -1; w = rest.next_after(w)) above.add(w);
        if (find_dominating_clique(g, target, clique, size + 1, above, covered2, everyone))
            return true;
        clique.remove(v);
    }
    return false;
}

std::optional<VertexSet> find_dominating_p3(const Graph& g, const VertexSet& everyone) {
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            for (int z = y + 1; z < n; ++z) {
                const int e = static_cast<int>(g.adjacent(x, y)) + static_cast<int>(g.adjacent(x, z)) +
                              static_cast<int>(g.adjacent(y, z));
                if (e != 2) continue;
                VertexSet s = VertexSet::of({x, y, z});
                VertexSet covered = s;
                covered |= g.neighbors(x);
                covered |= g.neighbors(y);
                covered |= g.neighbors(z);
                if (covered.contains_all(everyone)) return s;
            }
        }
    }
    return std::nullopt;
}

} // namespace

DominatingStructure find_dominating_structure(const Graph& g, std::optional<int> size_cap) {
    const int n = g.vertex_count();
    if (n == 0) throw PreconditionError("dominating structure of an empty graph");
    const VertexSet everyone = VertexSet::all(n);
    int cap = size_cap.value_or(n);
    cap = std::max(cap, 3);
    cap = std::min(cap, n);
    for (int s = 1; s <= cap; ++s) {
        VertexSet clique;
        if (find_dominating_clique(g, s, clique, 0, everyone, VertexSet{}, everyone))
            return DominatingStructure{clique, DominatingStructure::Kind::Clique};
        if (s == 3) {
            if (auto p3 = find_dominating_p3(g, everyone))
                return DominatingStructure{*p3, DominatingStructure::Kind::PathP3};
        }
    }
    throw PreconditionError(
        "no dominating clique or P3 within size cap; input is not a connected P5-free graph "
        "with cliques under the cap");
}

} // namespace p5c
