#include "p5color/instance.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "p5color/errors.hpp"

namespace p5c {

Palette Palette::full(int k) {
    if (k < 0 || k > kMaxUniverse)
        throw InputError("color universe must be within [0," + std::to_string(kMaxUniverse) + "]");
    Palette p;
    if (k > 0) p.bits_ = (k == kMaxUniverse) ? ~0ULL : ((1ULL << k) - 1);
    return p;
}

Palette Palette::single(int c) {
    if (c < 1 || c > kMaxUniverse) throw InputError("color out of range: " + std::to_string(c));
    Palette p;
    p.bits_ = 1ULL << (c - 1);
    return p;
}

Palette Palette::from_colors(const std::vector<int>& colors, int k) {
    Palette p;
    for (int c : colors) {
        if (c < 1 || c > k)
            throw InputError("color " + std::to_string(c) + " outside universe [" +
                             std::to_string(k) + "]");
        p.add(c);
    }
    return p;
}

int Palette::size() const { return std::popcount(bits_); }

int Palette::lowest() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

int Palette::only() const {
    if (size() != 1) throw ContractError("only() on a non-singleton palette");
    return lowest();
}

std::vector<int> Palette::colors() const {
    std::vector<int> out;
    std::uint64_t b = bits_;
    while (b) {
        out.push_back(std::countr_zero(b) + 1);
        b &= b - 1;
    }
    return out;
}

ListInstance::ListInstance(std::shared_ptr<const Graph> g, int universe)
    : ListInstance(std::move(g), universe, {}, {}) {
    palettes_.assign(static_cast<std::size_t>(graph_->vertex_count()), Palette::full(universe_));
}

ListInstance::ListInstance(std::shared_ptr<const Graph> g, int universe,
                           std::vector<Palette> palettes, VertexSet dominating)
    : graph_(std::move(g)), universe_(universe), palettes_(std::move(palettes)),
      dominating_(std::move(dominating)) {
    if (!graph_) throw ContractError("instance requires a graph");
    if (universe_ < 0 || universe_ > kMaxUniverse)
        throw InputError("universe must be within [0," + std::to_string(kMaxUniverse) + "]");
    if (!palettes_.empty() && static_cast<int>(palettes_.size()) != graph_->vertex_count())
        throw ContractError("palette vector size does not match graph");
    const Palette uni = Palette::full(universe_);
    for (const Palette& p : palettes_)
        if (!p.subset_of(uni)) throw InputError("palette outside the color universe");
}

Palette ListInstance::palette_union(const VertexSet& w) const {
    Palette out;
    for (int v : w) out |= palette(v);
    return out;
}

bool ListInstance::dominating_set_valid() const {
    if (dominating_.empty()) return true;
    for (const VertexSet& comp : connected_components(*graph_)) {
        if (!comp.intersects(dominating_)) continue;
        const VertexSet inside = dominating_ & comp;
        VertexSet covered = inside;
        for (int v : inside) covered |= graph_->neighbors(v);
        if (!covered.contains_all(comp)) return false;
    }
    return true;
}

bool ListInstance::palettes_within(const ListInstance& parent) const {
    if (graph_ != parent.graph_ || palettes_.size() != parent.palettes_.size()) return false;
    for (std::size_t v = 0; v < palettes_.size(); ++v)
        if (!palettes_[v].subset_of(parent.palettes_[v])) return false;
    return true;
}

bool ListInstance::operator==(const ListInstance& o) const {
    return graph_ == o.graph_ && universe_ == o.universe_ && palettes_ == o.palettes_ &&
           dominating_ == o.dominating_;
}

namespace {

bool fingerprint_less(const ListInstance& a, const ListInstance& b) {
    if (a.universe() != b.universe()) return a.universe() < b.universe();
    const auto& pa = a.palettes();
    const auto& pb = b.palettes();
    for (std::size_t i = 0; i < std::min(pa.size(), pb.size()); ++i)
        if (pa[i].bits() != pb[i].bits()) return pa[i].bits() < pb[i].bits();
    return pa.size() < pb.size();
}

bool fingerprint_equal(const ListInstance& a, const ListInstance& b) {
    return a.universe() == b.universe() && a.graph_ptr() == b.graph_ptr() &&
           a.palettes() == b.palettes();
}

std::size_t fingerprint_hash(const ListInstance& inst) {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(inst.universe());
    for (const Palette& p : inst.palettes()) h = (h ^ p.bits()) * 0x100000001b3ULL;
    return h;
}

} // namespace

bool InstanceSet::add(ListInstance inst) {
    const std::size_t h = fingerprint_hash(inst);
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it)
        if (fingerprint_equal(members_[it->second], inst)) return false;
    index_.emplace(h, members_.size());
    members_.push_back(std::move(inst));
    return true;
}

void InstanceSet::add_all(const InstanceSet& o) {
    for (const auto& m : o.members_) add(m);
}

void InstanceSet::canonicalize() {
    std::stable_sort(members_.begin(), members_.end(), fingerprint_less);
    index_.clear();
    for (std::size_t i = 0; i < members_.size(); ++i)
        index_.emplace(fingerprint_hash(members_[i]), i);
}

std::optional<ListInstance> simplify(const ListInstance& inst) {
    ListInstance out = inst;
    std::deque<int> work;
    for (int v = 0; v < out.vertex_count(); ++v) {
        if (out.palette(v).empty()) return std::nullopt;
        if (out.palette(v).size() == 1) work.push_back(v);
    }
    while (!work.empty()) {
        const int v = work.front();
        work.pop_front();
        const int c = out.palette(v).only();
        for (int w : out.graph().neighbors(v)) {
            Palette pw = out.palette(w);
            if (!pw.contains(c)) continue;
            if (pw.size() == 1) return std::nullopt; // adjacent singletons on the same color
            pw.remove(c);
            out.set_palette(w, pw);
            if (pw.size() == 1) work.push_back(w);
        }
    }
    return out;
}

VertexSet essential_neighbors(const ListInstance& inst, int v) {
    VertexSet out;
    const Palette& pv = inst.palette(v);
    for (int w : inst.graph().neighbors(v))
        if (pv.intersects(inst.palette(w))) out.add(w);
    return out;
}

VertexSet essential_between(const ListInstance& inst, const VertexSet& from, const VertexSet& to) {
    VertexSet out;
    for (int v : from) {
        const Palette& pv = inst.palette(v);
        VertexSet nb = inst.graph().neighbors(v) & to;
        for (int w : nb) {
            if (pv.intersects(inst.palette(w))) {
                out.add(v);
                break;
            }
        }
    }
    return out;
}

BagMap compute_bags(const ListInstance& inst) {
    BagMap bags;
    const VertexSet& d = inst.dominating();
    for (int v = 0; v < inst.vertex_count(); ++v) {
        if (d.contains(v)) continue;
        VertexSet key = inst.graph().neighbors(v) & d;
        if (key.empty())
            throw PreconditionError("vertex " + std::to_string(v) +
                                    " has no neighbor in D: D does not dominate");
        bags[key].add(v);
    }
    return bags;
}

VertexSet bag_vertices(const ListInstance& inst, const VertexSet& I) {
    VertexSet bag;
    const VertexSet& d = inst.dominating();
    for (int v = 0; v < inst.vertex_count(); ++v) {
        if (d.contains(v)) continue;
        if ((inst.graph().neighbors(v) & d) == I) bag.add(v);
    }
    return bag;
}

VertexSet cross_essential_set(const ListInstance& inst, const VertexSet& I, const VertexSet& J) {
    if (I.empty() || J.empty()) throw InputError("bag keys must be nonempty");
    if (I == J) throw InputError("bag keys must differ");
    return essential_between(inst, bag_vertices(inst, I), bag_vertices(inst, J));
}

bool is_separated(const ListInstance& inst, const VertexSet& I) {
    const VertexSet bag = bag_vertices(inst, I);
    for (int v : bag) {
        VertexSet ess = essential_neighbors(inst, v);
        ess -= inst.dominating();
        if (!bag.contains_all(ess)) return false;
    }
    return true;
}

BagRestriction restrict_bag_instance(const ListInstance& inst, const VertexSet& I) {
    if (I.empty()) throw ContractError("restrict_bag_instance: empty I");
    Palette used;
    for (int v : inst.dominating()) {
        if (inst.palette(v).size() != 1)
            throw ContractError("restrict_bag_instance: D is not fully colored");
        if (I.contains(v)) used.add(inst.palette(v).only());
    }
    if (!inst.dominating().contains_all(I))
        throw ContractError("restrict_bag_instance: I is not a subset of D");
    if (!is_separated(inst, I)) throw ContractError("restrict_bag_instance: bag is not separated");

    const VertexSet bag = bag_vertices(inst, I);
    auto sub = induced_subgraph(inst.graph(), bag);

    const int k = inst.universe();
    BagRestriction out;
    out.color_to_new.assign(static_cast<std::size_t>(k) + 1, 0);
    out.color_to_old.assign(1, 0);
    for (int c = 1; c <= k; ++c) {
        if (used.contains(c)) continue;
        out.color_to_old.push_back(c);
        out.color_to_new[static_cast<std::size_t>(c)] =
            static_cast<int>(out.color_to_old.size()) - 1;
    }
    const int new_k = static_cast<int>(out.color_to_old.size()) - 1;

    std::vector<Palette> palettes;
    palettes.reserve(sub.to_parent.size());
    for (int parent : sub.to_parent) {
        const Palette& old = inst.palette(parent);
        if (old.intersects(used))
            throw ContractError("restrict_bag_instance: bag palette still carries a color of I; "
                                "instance is not simplified");
        Palette renamed;
        for (int c : old.colors()) renamed.add(out.color_to_new[static_cast<std::size_t>(c)]);
        palettes.push_back(renamed);
    }
    out.instance = ListInstance(std::make_shared<Graph>(std::move(sub.graph)), new_k,
                                std::move(palettes));
    out.to_parent = std::move(sub.to_parent);
    return out;
}

} // namespace p5c
