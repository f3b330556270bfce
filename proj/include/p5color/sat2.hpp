#ifndef P5COLOR_SAT2_HPP
#define P5COLOR_SAT2_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p5color/instance.hpp"

namespace p5c {

struct Lit {
    int var = 0; // 0-based variable id
    bool positive = true;
    Lit negated() const { return Lit{var, !positive}; }
};

// Every clause has exactly two literals; units are encoded as (l v l).
struct Cnf2 {
    int variable_count = 0;
    std::vector<std::pair<Lit, Lit>> clauses;

    void add_clause(Lit a, Lit b) { clauses.emplace_back(a, b); }
    void add_unit(Lit a) { clauses.emplace_back(a, a); }
};

// Satisfying assignment iff the formula is satisfiable; deterministic for a
// fixed input. Implication graph + SCC condensation: a variable is true iff
// its positive literal's component comes later in topological order than the
// negative one's.
std::optional<std::vector<bool>> solve_2sat(const Cnf2& f);

std::string to_dimacs(const Cnf2& f);

// Encoding of a list instance whose palettes all have size 1 or 2. One
// variable per two-color vertex (false = lower color, true = higher); for
// each edge and each shared color, one clause forbids both endpoints taking
// it. Conflicts against fixed (singleton) vertices become unit clauses.
class TwoListEncoding {
public:
    explicit TwoListEncoding(const ListInstance& inst);

    const Cnf2& formula() const { return formula_; }
    Coloring decode(const std::vector<bool>& assignment) const;

private:
    Cnf2 formula_;
    struct VertexSlot {
        int var = -1;      // -1 for fixed vertices
        int color_false = 0;
        int color_true = 0; // equals color_false for fixed vertices
    };
    std::vector<VertexSlot> slots_;
};

TwoListEncoding encode_two_list(const ListInstance& inst);

} // namespace p5c

#endif
