#ifndef P5COLOR_TESTS_HELPERS_HPP
#define P5COLOR_TESTS_HELPERS_HPP

#include <memory>
#include <vector>

#include "p5color/instance.hpp"

namespace p5c::tests {

inline std::shared_ptr<const Graph> make_graph(int n,
                                               const std::vector<std::pair<int, int>>& edges) {
    return std::make_shared<Graph>(n, edges);
}

inline std::shared_ptr<const Graph> path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, edges);
}

inline std::shared_ptr<const Graph> cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, edges);
}

inline std::shared_ptr<const Graph> complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_graph(n, edges);
}

// Wheel W5: cycle 0..4 plus hub 5 adjacent to everything.
inline std::shared_ptr<const Graph> wheel5() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, 5);
    }
    return make_graph(6, edges);
}

// Instance with explicit color lists, e.g. lists {{1},{1,2}} on an edge.
inline ListInstance make_instance(std::shared_ptr<const Graph> g, int k,
                                  const std::vector<std::vector<int>>& lists,
                                  VertexSet dominating = {}) {
    std::vector<Palette> palettes;
    palettes.reserve(lists.size());
    for (const auto& colors : lists) palettes.push_back(Palette::from_colors(colors, k));
    return ListInstance(std::move(g), k, std::move(palettes), std::move(dominating));
}

inline ListInstance full_instance(std::shared_ptr<const Graph> g, int k) {
    return ListInstance(std::move(g), k);
}

} // namespace p5c::tests

#endif
