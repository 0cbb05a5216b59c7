#include "chromlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "chromlab/errors.hpp"

namespace chromlab {

namespace {

// 1 GiB of packed adjacency; beyond this the representation is refused.
constexpr std::size_t kMaxAdjacencyBytes = std::size_t{1} << 30;

std::size_t row_words(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex index " + std::to_string(v) +
                                    " out of range for graph of order " +
                                    std::to_string(n));
}

}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    const std::size_t words = row_words(n);
    const std::size_t bytes = static_cast<std::size_t>(n) * words * sizeof(std::uint64_t);
    if (bytes > kMaxAdjacencyBytes)
        throw guard_error("adjacency matrix for n=" + std::to_string(n) +
                          " exceeds the 1 GiB allocation limit");
    n_ = n;
    words_ = words;
    bits_.assign(static_cast<std::size_t>(n) * words, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] |=
        std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (static_cast<std::size_t>(u) >> 6)] |=
        std::uint64_t{1} << (u & 63);
}

std::size_t Graph::num_edges() const {
    std::size_t twice = 0;
    for (std::uint64_t w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

int Graph::degree(int v) const {
    check_vertex(v, n_);
    const std::uint64_t* r = row(v);
    int d = 0;
    for (std::size_t k = 0; k < words_; ++k) d += std::popcount(r[k]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v, n_);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (std::size_t k = 0; k < words_; ++k) {
        std::uint64_t w = r[k];
        while (w) {
            out.push_back(static_cast<int>(k * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    // SplitMix64 output for state master_seed at stream position trial_index.
    std::uint64_t z = master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Graph sample_gnp(const GnpParams& params) {
    if (!(params.p > 0.0 && params.p < 1.0))
        throw std::invalid_argument("edge probability must lie strictly in (0,1)");
    Graph g(params.n);  // allocation guard lives in the constructor
    std::mt19937_64 engine(params.seed);
    for (int i = 0; i < params.n; ++i) {
        for (int j = i + 1; j < params.n; ++j) {
            const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            if (u < params.p) g.add_edge(i, j);
        }
    }
    return g;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j)) out.add_edge(i, j);
    return out;
}

void validate_vertex_set(const Graph& g, const VertexSet& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        check_vertex(w[i], g.order());
        if (i > 0 && w[i] <= w[i - 1])
            throw std::invalid_argument("vertex set must be strictly increasing");
    }
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
    validate_vertex_set(g, w);
    Graph out(static_cast<int>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (g.adjacent(w[i], w[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::size_t edge_count(const Graph& g, const VertexSet& u) {
    validate_vertex_set(g, u);
    std::vector<std::uint64_t> mask(g.words_per_row(), 0);
    for (int v : u) mask[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    std::size_t twice = 0;
    for (int v : u) {
        const std::uint64_t* r = g.row(v);
        for (std::size_t k = 0; k < mask.size(); ++k)
            twice += static_cast<std::size_t>(std::popcount(r[k] & mask[k]));
    }
    return twice / 2;
}

}  // namespace chromlab
