#ifndef P5COLOR_INSTANCE_HPP
#define P5COLOR_INSTANCE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "p5color/graph.hpp"
#include "p5color/vertex_set.hpp"

namespace p5c {

// Subset of the color universe [k], colors 1..k as bits 0..k-1. The universe
// is capped at 64 colors so a palette is one machine word.
constexpr int kMaxUniverse = 64;

class Palette {
public:
    Palette() = default;

    static Palette full(int k);
    static Palette single(int c);
    static Palette from_colors(const std::vector<int>& colors, int k);

    bool contains(int c) const { return c >= 1 && c <= kMaxUniverse && (bits_ >> (c - 1)) & 1ULL; }
    void add(int c) { bits_ |= 1ULL << (c - 1); }
    void remove(int c) { bits_ &= ~(1ULL << (c - 1)); }

    int size() const;
    bool empty() const { return bits_ == 0; }
    int lowest() const; // smallest color, 0 if empty
    int only() const;   // the color of a singleton palette

    Palette& operator&=(const Palette& o) { bits_ &= o.bits_; return *this; }
    Palette& operator|=(const Palette& o) { bits_ |= o.bits_; return *this; }
    Palette& operator-=(const Palette& o) { bits_ &= ~o.bits_; return *this; }
    friend Palette operator&(Palette a, const Palette& b) { return a &= b; }
    friend Palette operator|(Palette a, const Palette& b) { return a |= b; }
    friend Palette operator-(Palette a, const Palette& b) { return a -= b; }
    bool intersects(const Palette& o) const { return (bits_ & o.bits_) != 0; }
    bool subset_of(const Palette& o) const { return (bits_ & ~o.bits_) == 0; }
    bool operator==(const Palette& o) const { return bits_ == o.bits_; }
    bool operator!=(const Palette& o) const { return bits_ != o.bits_; }

    std::uint64_t bits() const { return bits_; }
    std::vector<int> colors() const;

private:
    std::uint64_t bits_ = 0;
};

// Total color assignment, one 1-based color per internal vertex id.
using Coloring = std::vector<int>;

struct Verdict {
    std::optional<Coloring> certificate;   // present iff SAT
    std::optional<VertexSet> clique_witness; // may accompany UNSAT from the clique pre-check

    bool sat() const { return certificate.has_value(); }
    static Verdict sat_with(Coloring c) { return Verdict{std::move(c), std::nullopt}; }
    static Verdict unsat() { return Verdict{}; }
};

// The extended list-coloring instance: graph + per-vertex palettes + a
// dominating set + the color universe. Value semantics; the graph is shared
// immutably so copies cost one palette vector.
class ListInstance {
public:
    ListInstance() = default;
    ListInstance(std::shared_ptr<const Graph> g, int universe);
    ListInstance(std::shared_ptr<const Graph> g, int universe, std::vector<Palette> palettes,
                 VertexSet dominating = {});

    const Graph& graph() const { return *graph_; }
    const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
    int universe() const { return universe_; }
    int vertex_count() const { return graph_->vertex_count(); }

    const Palette& palette(int v) const { return palettes_[static_cast<std::size_t>(v)]; }
    const std::vector<Palette>& palettes() const { return palettes_; }
    void set_palette(int v, Palette p) { palettes_[static_cast<std::size_t>(v)] = p; }

    const VertexSet& dominating() const { return dominating_; }
    void set_dominating(VertexSet d) { dominating_ = std::move(d); }

    // Union of the palettes over a vertex set.
    Palette palette_union(const VertexSet& w) const;

    // True when the root invariant holds: D dominates every connected
    // component it intersects.
    bool dominating_set_valid() const;

    // Vertexwise palette containment, the monotonicity relation of branching.
    bool palettes_within(const ListInstance& parent) const;

    bool operator==(const ListInstance& o) const;

private:
    std::shared_ptr<const Graph> graph_;
    int universe_ = 0;
    std::vector<Palette> palettes_;
    VertexSet dominating_;
};

// Ordered collection of instances with set semantics: members are
// deduplicated by palette fingerprint and kept in a canonical order.
class InstanceSet {
public:
    // Returns false when an equal member was already present.
    bool add(ListInstance inst);
    void add_all(const InstanceSet& o);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const ListInstance& operator[](std::size_t i) const { return members_[i]; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    // Sort members by palette fingerprint so output order is independent of
    // construction order.
    void canonicalize();

private:
    std::vector<ListInstance> members_;
    std::unordered_multimap<std::size_t, std::size_t> index_; // fingerprint hash -> member slot
};

// Fixpoint of the rule: a singleton palette deletes its color from every
// adjacent palette that still carries it. Returns nullopt iff some palette
// empties (the instance is infeasible). Idempotent.
std::optional<ListInstance> simplify(const ListInstance& inst);

// {w in N(v) : L(v) and L(w) share a color}.
VertexSet essential_neighbors(const ListInstance& inst, int v);

// Members of `from` having an essential neighbor in `to`.
VertexSet essential_between(const ListInstance& inst, const VertexSet& from, const VertexSet& to);

// Bags U_I = {v outside D : N(v) cap D = I}, keyed by I in ascending
// id-tuple order. Only nonempty bags appear. A vertex outside D with no
// neighbor in D violates the domination precondition.
using BagMap = std::map<VertexSet, VertexSet, VertexSet::TupleLess>;
BagMap compute_bags(const ListInstance& inst);

// The bag U_I for one key: vertices outside D whose neighborhood in D is
// exactly I.
VertexSet bag_vertices(const ListInstance& inst, const VertexSet& I);

// U_I^J: vertices of bag U_I with an essential neighbor in bag U_J.
VertexSet cross_essential_set(const ListInstance& inst, const VertexSet& I, const VertexSet& J);

// True iff every essential neighbor of every vertex of U_I lies in U_I
// itself; neighbors inside D are ignored (they are non-essential once D is
// colored and the instance is simplified).
bool is_separated(const ListInstance& inst, const VertexSet& I);

// Induced instance on a separated bag with its universe compacted to the
// colors not used on I. Carries the maps needed to glue a bag certificate
// back into the parent.
struct BagRestriction {
    ListInstance instance;
    std::vector<int> to_parent;       // restricted id -> parent id
    std::vector<int> color_to_new;    // old color -> new color (0 = dropped), index 1..k
    std::vector<int> color_to_old;    // new color -> old color, index 1..k'
};
BagRestriction restrict_bag_instance(const ListInstance& inst, const VertexSet& I);

} // namespace p5c

#endif
