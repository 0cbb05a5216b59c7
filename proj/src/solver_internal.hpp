#pragma once

// Single-word bitmask solvers backing the exact operations.  Everything
// here assumes the caller already enforced n <= 64.

#include <cstdint>
#include <vector>

#include "chromlab/graph.hpp"

namespace chromlab::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

inline Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

std::vector<Mask> mask_rows(const Graph& g);

VertexSet mask_to_set(Mask m);

/// Adjacency of the complement restricted to vertices 0..n-1.
std::vector<Mask> complement_rows(const std::vector<Mask>& adj, int n);

/// Size of a maximum clique of the subgraph induced by `universe`.
int max_clique_size(const std::vector<Mask>& adj, Mask universe);

/// Some maximum clique of the subgraph induced by `universe`
/// (deterministic for a fixed adjacency).
Mask max_clique_mask(const std::vector<Mask>& adj, Mask universe);

/// Lexicographically smallest maximum independent set within `universe`;
/// cadj must be complement_rows of the graph's adjacency.
Mask lex_min_max_independent(const std::vector<Mask>& cadj, Mask universe);

/// Decides whether the subgraph induced by `members` is h-colorable; on
/// success and when witness != nullptr, fills a proper assignment indexed
/// by original vertex (-1 outside members).
bool mask_h_colorable(const std::vector<Mask>& adj, int n, Mask members,
                      int h, std::vector<int>* witness);

/// DSATUR pass over vertices 0..n-1 that keeps only vertices fitting in
/// colors 0..budget-1; rejected vertices stay at -1.
struct MaskDsatur {
    std::vector<int> assignment;
    int colors_used = 0;
    Mask kept = 0;
};
MaskDsatur dsatur_within_masks(const std::vector<Mask>& adj, int n, int budget);

/// Largest budget-colorable vertex set, as (size, lexicographically
/// smallest maximizer).
struct SubsetResult {
    int size = 0;
    Mask members = 0;
};
SubsetResult max_colorable_subset_masks(const std::vector<Mask>& adj, int n,
                                        int budget);

}  // namespace chromlab::detail
