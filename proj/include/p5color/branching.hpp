#ifndef P5COLOR_BRANCHING_HPP
#define P5COLOR_BRANCHING_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>

#include "p5color/instance.hpp"

namespace p5c {

struct BranchStats {
    std::atomic<std::uint64_t> instances_created{0};
    std::atomic<std::uint64_t> instances_pruned{0};
    std::atomic<std::uint64_t> recursion_depth{0}; // high-water mark
    std::atomic<std::uint64_t> wall_time_ms{0};

    void note_depth(std::uint64_t d) {
        std::uint64_t cur = recursion_depth.load(std::memory_order_relaxed);
        while (cur < d && !recursion_depth.compare_exchange_weak(cur, d)) {
        }
    }
};

struct BranchStatsSnapshot {
    std::uint64_t instances_created = 0;
    std::uint64_t instances_pruned = 0;
    std::uint64_t recursion_depth = 0;
    std::uint64_t wall_time_ms = 0;
};
BranchStatsSnapshot snapshot(const BranchStats& s);

// One line per branch event when level > 0.
struct TraceSink {
    int level = 0;
    std::ostream* out = nullptr;
    bool on(int lvl) const { return out != nullptr && level >= lvl; }
    void line(int lvl, const std::string& msg) const;
};

// Threading context for branching: counters, tracing, wall-clock budget and
// the current branching depth.
struct BranchEnv {
    BranchStats* stats = nullptr;
    TraceSink trace{};
    std::optional<std::chrono::steady_clock::time_point> deadline{};
    int depth = 0;

    void tick() const; // throws TimeoutError past the deadline
    BranchEnv deeper() const;
    void count_created() const;
    void count_pruned() const;
};

// Two independent sets living in two distinct bags. The essential
// cross-neighborhoods S' and T' are recomputed against each instance's
// current palettes.
struct BranchContext {
    VertexSet s;
    VertexSet t;
};

VertexSet essential_part_of_s(const ListInstance& inst, const BranchContext& ctx); // S'
VertexSet essential_part_of_t(const ListInstance& inst, const BranchContext& ctx); // T'

// Throws ContractError unless S, T are independent, disjoint from D, and lie
// in two different bags.
void validate_branch_context(const ListInstance& inst, const BranchContext& ctx);

// The vertex of S' adjacent to all of T' (max cross-degree, ties by smallest
// id). Throws PreconditionError if the chosen vertex fails to dominate T',
// which cannot happen on P5-free inputs with a valid context.
int dominating_vertex(const ListInstance& inst, const BranchContext& ctx);

struct ChromaticResult {
    Coloring coloring; // 1-based colors
    int chi = 0;
};
// Chromatic coloring provider: smallest proper coloring of a graph, absent
// when the chromatic number exceeds the cap.
using ChromaticOracle = std::function<std::optional<ChromaticResult>(const Graph&, int cap)>;

// One branching round on (S, T): fix the dominating vertex to each color it
// shares with L(T'), plus a truncated branch handled recursively. Children
// are simplified eagerly; infeasible ones are dropped.
InstanceSet procedure_pi(const ListInstance& inst, const BranchContext& ctx,
                         const BranchEnv& env = {});

// Fixpoint of procedure_pi: every output instance has S' empty.
InstanceSet pi_prime(const ListInstance& inst, const BranchContext& ctx,
                     const BranchEnv& env = {});

// One round on a bag pair: eliminate one color class of a chromatic coloring
// of G[U_I^J] against every class of G[U_J^I]. Returns the empty set when
// either side needs at least `universe` colors (such a branch cannot be
// completed once D is colored).
InstanceSet procedure_theta(const ListInstance& inst, const VertexSet& I, const VertexSet& J,
                            const ChromaticOracle& chromatic, const BranchEnv& env = {});

// Fixpoint of procedure_theta: every output instance has U_I^J empty.
InstanceSet theta_prime(const ListInstance& inst, const VertexSet& I, const VertexSet& J,
                        const ChromaticOracle& chromatic, const BranchEnv& env = {});

// Full branching pass: for every proper palette coloring of D, fix it,
// simplify, and run theta_prime over every pair of nonempty bags. Every
// output instance has D fully colored and all bags separated.
InstanceSet algorithm_lambda(const ListInstance& inst, const ChromaticOracle& chromatic,
                             const BranchEnv& env = {});

// Streaming form of algorithm_lambda used by the solver: children arrive
// grouped per D-coloring, in lexicographic coloring order. The callback
// returns true to stop early.
void lambda_for_each_coloring(const ListInstance& inst, const ChromaticOracle& chromatic,
                              const std::function<bool(const InstanceSet&)>& visit,
                              const BranchEnv& env = {});

// One D-coloring as (vertex, color) pairs, D ascending.
using DColoring = std::vector<std::pair<int, int>>;

// Proper palette-respecting colorings of D, lexicographic over D sorted by
// id with colors ascending.
std::vector<DColoring> proper_d_colorings(const ListInstance& inst);

// The separated children of a single D-coloring (one iteration of lambda's
// outer loop). Input validity is the caller's responsibility.
InstanceSet lambda_children_for_coloring(const ListInstance& inst, const DColoring& coloring,
                                         const ChromaticOracle& chromatic,
                                         const BranchEnv& env = {});

} // namespace p5c

#endif
