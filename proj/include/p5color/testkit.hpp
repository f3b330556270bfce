#ifndef P5COLOR_TESTKIT_HPP
#define P5COLOR_TESTKIT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "p5color/branching.hpp"
#include "p5color/instance.hpp"

namespace p5c::testkit {

// Exact verdict by backtracking over palette choices with forward pruning.
// Deliberately independent of the solver: it never touches simplify, 2-SAT
// or the branching machinery. Guard: refuses instances with n > 14 whose
// palette-size product exceeds 1e8.
Verdict brute_force_solve(const ListInstance& inst);

struct GenSpec {
    enum class Family { SplitGraph, CompleteMultipartite, RejectionSampled };
    Family family = Family::SplitGraph;
    int n = 0;
    double edge_probability = 0.5;
    std::vector<int> parts;  // multipartite only; must sum to n
    std::uint64_t seed = 0;
    double list_density = 1.0;
};

// P5-free by construction (split graphs contain no induced 2K2, complete
// multipartite graphs are P4-free) or by rejection; every output is
// re-checked against the detector before being returned.
Graph generate(const GenSpec& spec);

// Uniformly random nonempty subsets of [k], each color kept with probability
// `density`. Pure function of the seed.
std::vector<Palette> generate_lists(const Graph& g, int k, double density, std::uint64_t seed);

// Random connected P5-free graph with random lists and a dominating
// structure attached; absent when the seed yields nothing usable.
std::optional<ListInstance> make_rooted_instance(std::uint64_t seed, int n_max, int k);

// Everything a branching-procedure test needs: an instance whose D is fully
// colored and simplified, two distinct nonempty bag keys, and independent
// sets S, T inside those bags. Seeds that cannot produce two bags (or whose
// D-coloring collapses) yield nullopt; callers iterate seeds.
struct BranchFixture {
    ListInstance instance;
    VertexSet bag_i;
    VertexSet bag_j;
    BranchContext ctx;
};
std::optional<BranchFixture> make_branch_fixture(std::uint64_t seed, int n_max, int k);

// Oracle-checked compatibility: parent SAT iff some child SAT.
bool compatible_by_oracle(const ListInstance& parent, const InstanceSet& children);

// Vertexwise palette containment of every child in the parent.
bool monotone_children(const ListInstance& parent, const InstanceSet& children);

} // namespace p5c::testkit

#endif
