#pragma once

#include <cstdint>
#include <optional>

#include "chromlab/graph.hpp"

namespace chromlab {

/// A binomial lower-tail question: X ~ B(r,p), deviation t >= 0.
struct TailParams {
    std::int64_t r = 0;
    double p = 0.5;
    double t = 0.0;
};

/// Chernoff lower-tail bound P(X < rp - t) <= exp(-t^2 / (2rp)).
/// Requires r > 0.
double chernoff_lower_tail(const TailParams& tp);

/// Union bound on the probability that some u-subset of a G(n,p) sample
/// spans fewer than p*u^2/4 edges: (e*n/u * exp(-p*u/30))^u.  Evaluated in
/// log space so that large u underflows to 0 instead of overflowing.
double sparse_subset_bound(std::int64_t n, std::int64_t u, double p);

/// The constant c(p) = -1/(12 ln(p/2)) governing the guaranteed greedy
/// clique size c(p) * ln n.  Strictly positive on (0,1); natural logarithm.
double greedy_clique_constant(double p);

/// Greedy clique extraction inside w: repeatedly pick the vertex whose
/// neighborhood intersects the current candidate set in the most vertices
/// (ties: lowest index), then descend into that intersection, halting as
/// soon as it is empty.  The picked vertices always form a clique contained
/// in w; returned sorted.  w must be non-empty.
VertexSet greedy_clique(const Graph& g, const VertexSet& w);

/// Maximum number of u-subsets find_sparse_subset is willing to enumerate.
inline constexpr double kSparseScanBudget = 1e7;

/// Scans every u-subset of g in lexicographic order and returns the first
/// one spanning fewer than p*u^2/4 edges, or nullopt when every subset has
/// at least that many.  Throws guard_error when C(n,u) exceeds
/// kSparseScanBudget.
std::optional<VertexSet> find_sparse_subset(const Graph& g, int u, double p);

}  // namespace chromlab
