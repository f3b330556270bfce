#ifndef P5COLOR_VERTEX_SET_HPP
#define P5COLOR_VERTEX_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace p5c {

// Packed bit-mask over internal vertex ids. Word-parallel intersection and
// containment are the workhorses of every kernel in this library.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet of(std::initializer_list<int> ids);
    static VertexSet single(int v);
    static VertexSet all(int n); // {0, 1, ..., n-1}

    void add(int v);
    void remove(int v);
    bool contains(int v) const;

    bool empty() const;
    int count() const;

    int first() const;           // smallest id, -1 if empty
    int next_after(int v) const; // smallest id > v, -1 if none

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const;
    bool contains_all(const VertexSet& o) const; // superset-or-equal

    bool operator==(const VertexSet& o) const { return words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    std::vector<int> ids() const;
    std::size_t hash() const;

    // Lexicographic order on the ascending id tuple: {0,2} < {1}, {0} < {0,2}.
    // Used to canonicalize bag keys.
    static bool tuple_less(const VertexSet& a, const VertexSet& b);
    struct TupleLess {
        bool operator()(const VertexSet& a, const VertexSet& b) const {
            return tuple_less(a, b);
        }
    };

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = set_->next_after(v_);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* set_;
        int v_;
    };
    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

private:
    std::vector<std::uint64_t> words_;
    void trim();
};

} // namespace p5c

#endif
