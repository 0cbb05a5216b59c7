#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace chromlab {

/// Sorted, duplicate-free list of vertex indices of some graph.
using VertexSet = std::vector<int>;

/// Undirected simple graph on vertices 0..n-1, stored as a packed adjacency
/// matrix (one bit row per vertex).  Graphs are treated as immutable once
/// built: add_edge is for construction only, and a const Graph is safe to
/// share across threads.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::size_t num_edges() const;

    bool adjacent(int u, int v) const {
        return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// Adds the edge {u,v}; requires u != v and both in range.
    void add_edge(int u, int v);

    /// Word-level row access for bit-parallel algorithms.
    std::size_t words_per_row() const { return words_; }
    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    bool operator==(const Graph&) const = default;

  private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Sampling specification for G(n,p): each of the C(n,2) unordered pairs is
/// an edge independently with probability p.  p must lie strictly inside
/// (0,1); the 64-bit seed makes the sample reproducible.
struct GnpParams {
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

/// SplitMix64 mix of (master_seed, trial_index).  Experiment runners derive
/// all per-trial seeds through this, so every trial is independent and
/// individually replayable from the master seed alone.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Samples G(n,p).  The pair stream is consumed in lexicographic order of
/// (i,j), i < j, with exactly one draw per pair from a std::mt19937_64
/// seeded with params.seed; each draw is mapped to [0,1) using its top 53
/// bits.  The result is a pure function of (n,p,seed), bit-identical across
/// platforms.
Graph sample_gnp(const GnpParams& params);

/// Graph with edge {u,v} exactly when g has none, u != v.
Graph complement(const Graph& g);

/// Induced subgraph on w: vertex w[i] becomes vertex i.  w must be sorted
/// and duplicate-free.
Graph induced_subgraph(const Graph& g, const VertexSet& w);

/// Number of edges of g with both endpoints in u.
std::size_t edge_count(const Graph& g, const VertexSet& u);

/// Throws std::invalid_argument unless w is a strictly increasing list of
/// valid vertex indices of g.
void validate_vertex_set(const Graph& g, const VertexSet& w);

}  // namespace chromlab
