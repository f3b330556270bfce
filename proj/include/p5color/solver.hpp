#ifndef P5COLOR_SOLVER_HPP
#define P5COLOR_SOLVER_HPP

#include <optional>

#include "p5color/branching.hpp"
#include "p5color/instance.hpp"

namespace p5c {

struct SolveConfig {
    int max_universe = kMaxUniverse;
    bool enable_parallel = false;
    int trace = 0;
    std::optional<double> deadline_seconds{};
};

// Exact k-list-coloring of a P5-free instance. Sat verdicts always carry a
// verified certificate. Throws NotP5FreeError when the input graph contains
// an induced P5 and TimeoutError past the configured deadline.
Verdict solve(const ListInstance& inst, const SolveConfig& cfg = {}, BranchStats* stats = nullptr);

// Instance with D fully colored and every bag separated: each bag is an
// independent (k-1)-instance; bag solutions are glued with D's colors.
Verdict solve_separated(const ListInstance& inst, const SolveConfig& cfg = {},
                        BranchStats* stats = nullptr);

// Plain k-colorability: full palettes, preceded by a (k+1)-clique check whose
// witness is attached to an immediate Unsat.
Verdict k_colorability(const Graph& g, int k, const SolveConfig& cfg = {},
                       BranchStats* stats = nullptr);

// Smallest c <= cap admitting a proper c-coloring, with a witness; absent
// when the chromatic number exceeds the cap.
std::optional<ChromaticResult> chromatic_coloring(const Graph& g, int cap,
                                                  const SolveConfig& cfg = {},
                                                  BranchStats* stats = nullptr);

// True iff the certificate is palette-respecting and proper. A partial
// certificate (wrong length or non-positive entries) is a contract error.
bool verify(const Coloring& certificate, const ListInstance& inst);

// The chromatic oracle handed to procedure_theta, backed by this solver on
// strictly smaller universes.
ChromaticOracle make_chromatic_oracle(const SolveConfig& cfg = {}, BranchStats* stats = nullptr);

} // namespace p5c

#endif
