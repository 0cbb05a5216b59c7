#include "chromlab/clique.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chromlab/errors.hpp"

namespace chromlab {

namespace {

void check_probability(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("probability must lie strictly in (0,1)");
}

}  // namespace

double chernoff_lower_tail(const TailParams& tp) {
    if (tp.r <= 0) throw std::invalid_argument("trial count r must be positive");
    check_probability(tp.p);
    if (!(tp.t >= 0.0)) throw std::invalid_argument("deviation t must be non-negative");
    return std::exp(-(tp.t * tp.t) / (2.0 * static_cast<double>(tp.r) * tp.p));
}

double sparse_subset_bound(std::int64_t n, std::int64_t u, double p) {
    if (u < 1 || u > n) throw std::invalid_argument("subset size requires 1 <= u <= n");
    check_probability(p);
    const double du = static_cast<double>(u);
    const double log_base =
        1.0 + std::log(static_cast<double>(n) / du) - p * du / 30.0;
    return std::exp(du * log_base);
}

double greedy_clique_constant(double p) {
    check_probability(p);
    return -1.0 / (12.0 * std::log(p / 2.0));
}

VertexSet greedy_clique(const Graph& g, const VertexSet& w) {
    validate_vertex_set(g, w);
    if (w.empty())
        throw std::invalid_argument("greedy_clique requires a non-empty candidate set");

    const std::size_t words = g.words_per_row();
    std::vector<std::uint64_t> cur(words, 0);
    for (int v : w) cur[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);

    VertexSet clique;
    while (true) {
        int best = -1;
        std::size_t best_common = 0;
        for (std::size_t k = 0; k < words; ++k) {
            std::uint64_t m = cur[k];
            while (m) {
                const int v = static_cast<int>(k * 64) + std::countr_zero(m);
                m &= m - 1;
                const std::uint64_t* r = g.row(v);
                std::size_t common = 0;
                for (std::size_t j = 0; j < words; ++j)
                    common += static_cast<std::size_t>(std::popcount(r[j] & cur[j]));
                if (best < 0 || common > best_common) {
                    best = v;
                    best_common = common;
                }
            }
        }
        if (best < 0) break;  // candidate set exhausted
        clique.push_back(best);
        const std::uint64_t* r = g.row(best);
        for (std::size_t j = 0; j < words; ++j) cur[j] &= r[j];
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

std::optional<VertexSet> find_sparse_subset(const Graph& g, int u, double p) {
    const int n = g.order();
    if (u < 1 || u > n) throw std::invalid_argument("subset size requires 1 <= u <= n");
    check_probability(p);

    double combos = 1.0;
    for (int i = 1; i <= u; ++i) {
        combos *= static_cast<double>(n - u + i) / static_cast<double>(i);
        if (combos > kSparseScanBudget)
            throw guard_error("C(" + std::to_string(n) + "," + std::to_string(u) +
                              ") exceeds the subset enumeration budget");
    }

    const double required = p * static_cast<double>(u) * static_cast<double>(u) / 4.0;
    VertexSet sub(static_cast<std::size_t>(u));
    std::iota(sub.begin(), sub.end(), 0);
    while (true) {
        if (static_cast<double>(edge_count(g, sub)) < required) return sub;
        // next u-combination in lexicographic order
        int i = u - 1;
        while (i >= 0 && sub[static_cast<std::size_t>(i)] == n - u + i) --i;
        if (i < 0) break;
        ++sub[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < u; ++j)
            sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

}  // namespace chromlab
