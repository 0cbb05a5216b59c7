#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "chromlab/graph.hpp"

namespace chromlab {

/// Proper vertex coloring.  Colors are 0-based and canonicalized by first
/// appearance in vertex order; color_count is the number of distinct colors.
struct Coloring {
    std::vector<int> assignment;
    int color_count = 0;
};

/// True when c covers every vertex, adjacent vertices differ, and
/// color_count matches the number of distinct colors.
bool is_proper(const Graph& g, const Coloring& c);

/// Writes a `vertex,color` CSV (header line plus one row per vertex).
void write_coloring_csv(std::ostream& os, const Coloring& c);

/// Size limits above which the exact solvers refuse (guard_error) instead
/// of silently degrading.
struct SolverGuards {
    int chi_exact_max_n = 45;
    int independent_set_exact_max_n = 45;
    int colorable_subset_max_n = 20;
    int rewiring_check_max_n = 12;
};

inline constexpr SolverGuards kDefaultGuards{};

/// Hard ceiling on any guard override: the exact solvers use single-word
/// bitmasks.
inline constexpr int kSolverWordLimit = 64;

/// Exact chromatic number together with an optimal proper coloring.
/// Branch-and-bound between a maximum-clique lower bound and a DSATUR upper
/// bound.
std::pair<int, Coloring> chromatic_number_exact(
    const Graph& g, const SolverGuards& guards = kDefaultGuards);

/// Exact maximum independent set.  Among all maximum sets returns the one
/// whose sorted vertex sequence is lexicographically smallest.
VertexSet max_independent_set(const Graph& g,
                              const SolverGuards& guards = kDefaultGuards);

/// Heuristic independent set: repeatedly take the vertex of minimum degree
/// in the remaining graph (ties: lowest index) and delete its closed
/// neighborhood.
VertexSet greedy_independent_set(const Graph& g);

/// Selects between an exact solver and its heuristic fallback.
enum class SetMode { exact, heuristic };

/// Colors g by repeatedly extracting an independent set from the remaining
/// vertices (maximum in exact mode, greedy in heuristic mode), giving each
/// extracted set a fresh color, until at most residue_threshold vertices
/// remain; every residual vertex then receives its own fresh color.
Coloring peel_coloring(const Graph& g, int residue_threshold,
                       SetMode mode = SetMode::exact,
                       const SolverGuards& guards = kDefaultGuards);

/// Size of the largest vertex set whose induced subgraph is colorable with
/// `budget` colors.
int max_colorable_subset_size(const Graph& g, int budget,
                              const SolverGuards& guards = kDefaultGuards);

/// The lexicographically smallest vertex set realizing
/// max_colorable_subset_size.
VertexSet max_colorable_subset(const Graph& g, int budget,
                               const SolverGuards& guards = kDefaultGuards);

/// Upper-bound certificate chi(G) <= chi(G[W]) + chi(G[U]): w and u
/// partition the vertices, base_colors colors suffice on w (at most the
/// budget), extra_colors come from peel-coloring u, and total is the size
/// of a proper coloring of the whole graph.
struct TwoPhaseResult {
    VertexSet w;
    VertexSet u;
    int base_colors = 0;
    int extra_colors = 0;
    int total = 0;
    bool exact_w = false;
};

/// Splits V into W (a maximum budget-colorable set in exact mode, a
/// DSATUR-kept set in heuristic mode) and U = V \ W, then peel-colors U
/// with residue threshold ceil(n^(1/3)) where n is the order of g.
TwoPhaseResult two_phase_upper_bound(const Graph& g, int budget,
                                     SetMode mode = SetMode::exact,
                                     const SolverGuards& guards = kDefaultGuards);

}  // namespace chromlab
