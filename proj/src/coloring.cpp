#include "chromlab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "chromlab/errors.hpp"
#include "solver_internal.hpp"

namespace chromlab {

namespace {

using detail::Mask;

void check_guard(int n, int guard, const char* what) {
    const int effective = std::min(guard, kSolverWordLimit);
    if (n > effective)
        throw guard_error(std::string(what) + " refused: n=" + std::to_string(n) +
                          " exceeds the exact-solver guard " + std::to_string(effective));
}

// Colors renamed by first appearance in vertex order; every vertex must be
// assigned.
Coloring canonicalize(const std::vector<int>& raw) {
    Coloring out;
    out.assignment.assign(raw.size(), -1);
    std::vector<int> remap(raw.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < raw.size(); ++v) {
        const int c = raw[v];
        if (c < 0 || static_cast<std::size_t>(c) >= raw.size())
            throw std::logic_error("canonicalize: incomplete coloring");
        if (remap[static_cast<std::size_t>(c)] < 0) remap[static_cast<std::size_t>(c)] = next++;
        out.assignment[v] = remap[static_cast<std::size_t>(c)];
    }
    out.color_count = next;
    return out;
}

// DSATUR sweep over a Graph of any order, keeping only vertices that fit in
// colors 0..budget-1.  Selection: saturation desc, degree desc, index asc.
struct GraphDsatur {
    std::vector<int> assignment;
    int colors_used = 0;
    VertexSet kept;
};

GraphDsatur dsatur_within_graph(const Graph& g, int budget) {
    const int n = g.order();
    GraphDsatur out;
    out.assignment.assign(static_cast<std::size_t>(n), -1);
    const int cap = std::max(0, std::min(budget, n));
    const std::size_t cwords = (static_cast<std::size_t>(cap) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> forb(
        static_cast<std::size_t>(n), std::vector<std::uint64_t>(std::max<std::size_t>(cwords, 1), 0));
    std::vector<int> sat(static_cast<std::size_t>(n), 0);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            if (sat[static_cast<std::size_t>(v)] > pick_sat ||
                (sat[static_cast<std::size_t>(v)] == pick_sat &&
                 deg[static_cast<std::size_t>(v)] > pick_deg)) {
                pick = v;
                pick_sat = sat[static_cast<std::size_t>(v)];
                pick_deg = deg[static_cast<std::size_t>(v)];
            }
        }
        done[static_cast<std::size_t>(pick)] = 1;
        if (cap == 0) continue;
        int c = -1;
        const auto& fb = forb[static_cast<std::size_t>(pick)];
        for (std::size_t k = 0; k < cwords && c < 0; ++k) {
            std::uint64_t free = ~fb[k];
            if (k == cwords - 1 && (cap & 63) != 0)
                free &= (std::uint64_t{1} << (cap & 63)) - 1;
            if (free) c = static_cast<int>(k * 64) + std::countr_zero(free);
        }
        if (c < 0) continue;  // rejected: needs a color beyond the budget
        out.assignment[static_cast<std::size_t>(pick)] = c;
        out.colors_used = std::max(out.colors_used, c + 1);
        for (int u : g.neighbors(pick)) {
            if (done[static_cast<std::size_t>(u)]) continue;
            auto& fu = forb[static_cast<std::size_t>(u)];
            const std::uint64_t bitc = std::uint64_t{1} << (c & 63);
            if (!(fu[static_cast<std::size_t>(c) >> 6] & bitc)) {
                fu[static_cast<std::size_t>(c) >> 6] |= bitc;
                ++sat[static_cast<std::size_t>(u)];
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (out.assignment[static_cast<std::size_t>(v)] >= 0) out.kept.push_back(v);
    return out;
}

// Greedy independent set restricted to `alive` (min degree inside alive,
// ties lowest index, delete closed neighborhood).
VertexSet greedy_independent_within(const Graph& g, const std::vector<char>& alive,
                                    int alive_count) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        for (int u : g.neighbors(v))
            if (alive[static_cast<std::size_t>(u)]) ++deg[static_cast<std::size_t>(v)];
    }
    std::vector<char> local = alive;
    VertexSet out;
    int remaining = alive_count;
    while (remaining > 0) {
        int pick = -1, pick_deg = 0;
        for (int v = 0; v < n; ++v) {
            if (!local[static_cast<std::size_t>(v)]) continue;
            if (pick < 0 || deg[static_cast<std::size_t>(v)] < pick_deg) {
                pick = v;
                pick_deg = deg[static_cast<std::size_t>(v)];
            }
        }
        out.push_back(pick);
        std::vector<int> removed{pick};
        local[static_cast<std::size_t>(pick)] = 0;
        for (int u : g.neighbors(pick)) {
            if (local[static_cast<std::size_t>(u)]) {
                local[static_cast<std::size_t>(u)] = 0;
                removed.push_back(u);
            }
        }
        remaining -= static_cast<int>(removed.size());
        for (int r : removed)
            for (int t : g.neighbors(r))
                if (local[static_cast<std::size_t>(t)]) --deg[static_cast<std::size_t>(t)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cube_root_ceil(int n) {
    if (n <= 0) return 0;
    int t = static_cast<int>(std::cbrt(static_cast<double>(n)));
    while (t > 0 && static_cast<long long>(t) * t * t >= n) --t;
    while (static_cast<long long>(t + 1) * (t + 1) * (t + 1) < n) ++t;
    return t + 1;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    const int n = g.order();
    if (c.assignment.size() != static_cast<std::size_t>(n)) return false;
    std::vector<char> seen(static_cast<std::size_t>(std::max(n, c.color_count)), 0);
    int distinct = 0;
    for (int v = 0; v < n; ++v) {
        const int col = c.assignment[static_cast<std::size_t>(v)];
        if (col < 0 || col >= n) return false;
        if (!seen[static_cast<std::size_t>(col)]) {
            seen[static_cast<std::size_t>(col)] = 1;
            ++distinct;
        }
    }
    if (distinct != c.color_count) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) &&
                c.assignment[static_cast<std::size_t>(u)] == c.assignment[static_cast<std::size_t>(v)])
                return false;
    return true;
}

void write_coloring_csv(std::ostream& os, const Coloring& c) {
    os << "vertex,color\n";
    for (std::size_t v = 0; v < c.assignment.size(); ++v)
        os << v << ',' << c.assignment[v] << '\n';
}

std::pair<int, Coloring> chromatic_number_exact(const Graph& g,
                                                const SolverGuards& guards) {
    const int n = g.order();
    check_guard(n, guards.chi_exact_max_n, "chromatic_number_exact");
    if (n == 0) return {0, Coloring{}};

    const auto adj = detail::mask_rows(g);
    const Mask full = detail::full_mask(n);
    const Mask clique = detail::max_clique_mask(adj, full);
    const int lower = std::popcount(clique);

    const GraphDsatur greedy = dsatur_within_graph(g, n);
    int chi = greedy.colors_used;
    std::vector<int> raw = greedy.assignment;

    for (int k = lower; k < chi; ++k) {
        std::vector<int> witness;
        if (detail::mask_h_colorable(adj, n, full, k, &witness)) {
            chi = k;
            raw = witness;
            break;
        }
    }
    return {chi, canonicalize(raw)};
}

VertexSet max_independent_set(const Graph& g, const SolverGuards& guards) {
    const int n = g.order();
    check_guard(n, guards.independent_set_exact_max_n, "max_independent_set");
    if (n == 0) return {};
    const auto adj = detail::mask_rows(g);
    const auto cadj = detail::complement_rows(adj, n);
    return detail::mask_to_set(detail::lex_min_max_independent(cadj, detail::full_mask(n)));
}

VertexSet greedy_independent_set(const Graph& g) {
    std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
    return greedy_independent_within(g, alive, g.order());
}

Coloring peel_coloring(const Graph& g, int residue_threshold, SetMode mode,
                       const SolverGuards& guards) {
    if (residue_threshold < 0)
        throw std::invalid_argument("residue threshold must be non-negative");
    const int n = g.order();
    if (mode == SetMode::exact)
        check_guard(n, guards.independent_set_exact_max_n, "peel_coloring[exact]");
    if (n == 0) return Coloring{};

    std::vector<int> raw(static_cast<std::size_t>(n), -1);
    int next_color = 0;

    if (mode == SetMode::exact) {
        const auto adj = detail::mask_rows(g);
        const auto cadj = detail::complement_rows(adj, n);
        Mask alive = detail::full_mask(n);
        while (std::popcount(alive) > residue_threshold) {
            const Mask set = detail::lex_min_max_independent(cadj, alive);
            for (int v : detail::mask_to_set(set)) raw[static_cast<std::size_t>(v)] = next_color;
            ++next_color;
            alive &= ~set;
        }
        for (int v : detail::mask_to_set(alive)) raw[static_cast<std::size_t>(v)] = next_color++;
    } else {
        std::vector<char> alive(static_cast<std::size_t>(n), 1);
        int alive_count = n;
        while (alive_count > residue_threshold) {
            const VertexSet set = greedy_independent_within(g, alive, alive_count);
            for (int v : set) {
                raw[static_cast<std::size_t>(v)] = next_color;
                alive[static_cast<std::size_t>(v)] = 0;
            }
            ++next_color;
            alive_count -= static_cast<int>(set.size());
        }
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)]) raw[static_cast<std::size_t>(v)] = next_color++;
    }
    return canonicalize(raw);
}

int max_colorable_subset_size(const Graph& g, int budget, const SolverGuards& guards) {
    if (budget < 0) throw std::invalid_argument("color budget must be non-negative");
    check_guard(g.order(), guards.colorable_subset_max_n, "max_colorable_subset_size");
    return detail::max_colorable_subset_masks(detail::mask_rows(g), g.order(), budget).size;
}

VertexSet max_colorable_subset(const Graph& g, int budget, const SolverGuards& guards) {
    if (budget < 0) throw std::invalid_argument("color budget must be non-negative");
    check_guard(g.order(), guards.colorable_subset_max_n, "max_colorable_subset");
    return detail::mask_to_set(
        detail::max_colorable_subset_masks(detail::mask_rows(g), g.order(), budget).members);
}

TwoPhaseResult two_phase_upper_bound(const Graph& g, int budget, SetMode mode,
                                     const SolverGuards& guards) {
    if (budget < 0) throw std::invalid_argument("color budget must be non-negative");
    const int n = g.order();
    TwoPhaseResult result;
    result.exact_w = (mode == SetMode::exact);

    if (mode == SetMode::exact) {
        check_guard(n, guards.colorable_subset_max_n, "two_phase_upper_bound[exact]");
        result.w = max_colorable_subset(g, budget, guards);
        result.base_colors = chromatic_number_exact(induced_subgraph(g, result.w), guards).first;
    } else {
        const GraphDsatur kept = dsatur_within_graph(g, budget);
        result.w = kept.kept;
        result.base_colors = kept.colors_used;
    }

    std::vector<char> in_w(static_cast<std::size_t>(n), 0);
    for (int v : result.w) in_w[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v)
        if (!in_w[static_cast<std::size_t>(v)]) result.u.push_back(v);

    const Graph residue = induced_subgraph(g, result.u);
    result.extra_colors =
        peel_coloring(residue, cube_root_ceil(n), mode, guards).color_count;
    result.total = result.base_colors + result.extra_colors;
    return result;
}

}  // namespace chromlab
