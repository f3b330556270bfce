#include "p5color/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace p5c {

namespace {
constexpr int kWordBits = 64;
}

VertexSet VertexSet::of(std::initializer_list<int> ids) {
    VertexSet s;
    for (int v : ids) s.add(v);
    return s;
}

VertexSet VertexSet::single(int v) {
    VertexSet s;
    s.add(v);
    return s;
}

VertexSet VertexSet::all(int n) {
    VertexSet s;
    if (n <= 0) return s;
    s.words_.assign(static_cast<std::size_t>((n + kWordBits - 1) / kWordBits), ~0ULL);
    const int rem = n % kWordBits;
    if (rem != 0) s.words_.back() = (1ULL << rem) - 1;
    return s;
}

void VertexSet::add(int v) {
    assert(v >= 0);
    const std::size_t w = static_cast<std::size_t>(v / kWordBits);
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= 1ULL << (v % kWordBits);
}

void VertexSet::remove(int v) {
    const std::size_t w = static_cast<std::size_t>(v / kWordBits);
    if (w >= words_.size()) return;
    words_[w] &= ~(1ULL << (v % kWordBits));
    trim();
}

bool VertexSet::contains(int v) const {
    if (v < 0) return false;
    const std::size_t w = static_cast<std::size_t>(v / kWordBits);
    if (w >= words_.size()) return false;
    return (words_[w] >> (v % kWordBits)) & 1ULL;
}

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
    return -1;
}

int VertexSet::next_after(int v) const {
    if (v < -1) v = -1;
    int start = v + 1;
    std::size_t w = static_cast<std::size_t>(start / kWordBits);
    if (w >= words_.size()) return -1;
    std::uint64_t cur = words_[w] & (~0ULL << (start % kWordBits));
    while (true) {
        if (cur) return static_cast<int>(w) * kWordBits + std::countr_zero(cur);
        if (++w >= words_.size()) return -1;
        cur = words_[w];
    }
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    trim();
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    const std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
    trim();
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    const std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool VertexSet::contains_all(const VertexSet& o) const {
    for (std::size_t i = 0; i < o.words_.size(); ++i) {
        const std::uint64_t mine = i < words_.size() ? words_[i] : 0;
        if (o.words_[i] & ~mine) return false;
    }
    return true;
}

std::vector<int> VertexSet::ids() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
}

std::size_t VertexSet::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
}

bool VertexSet::tuple_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first(), y = b.first();
    while (x != -1 && y != -1) {
        if (x != y) return x < y;
        x = a.next_after(x);
        y = b.next_after(y);
    }
    return x == -1 && y != -1;
}

void VertexSet::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

} // namespace p5c
