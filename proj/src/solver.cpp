#include "solver_internal.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace chromlab::detail {

namespace {

int popcount(Mask m) { return std::popcount(m); }

// Branch-and-bound maximum clique with a greedy-coloring bound.
struct CliqueSolver {
    const std::vector<Mask>& adj;
    int best = 0;
    Mask best_mask = 0;

    void expand(Mask cand, Mask cur, int size) {
        // Greedy-color the candidates; the class index bounds the clique
        // extension reachable through each vertex.
        std::array<int, 64> order;
        std::array<int, 64> bound;
        int cnt = 0;
        Mask uncolored = cand;
        int color = 0;
        while (uncolored) {
            ++color;
            Mask avail = uncolored;
            while (avail) {
                const int v = std::countr_zero(avail);
                avail &= ~(bit(v) | adj[static_cast<std::size_t>(v)]);
                uncolored &= ~bit(v);
                order[static_cast<std::size_t>(cnt)] = v;
                bound[static_cast<std::size_t>(cnt)] = color;
                ++cnt;
            }
        }
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + bound[static_cast<std::size_t>(i)] <= best) return;
            const int v = order[static_cast<std::size_t>(i)];
            const Mask next = cand & adj[static_cast<std::size_t>(v)];
            if (next == 0) {
                if (size + 1 > best) {
                    best = size + 1;
                    best_mask = cur | bit(v);
                }
            } else {
                expand(next, cur | bit(v), size + 1);
            }
            cand &= ~bit(v);
        }
    }
};

// Ascending-index greedy clique; primes the branch-and-bound.
Mask greedy_clique_mask(const std::vector<Mask>& adj, Mask universe) {
    Mask cur = universe, out = 0;
    while (cur) {
        const int v = std::countr_zero(cur);
        out |= bit(v);
        cur &= adj[static_cast<std::size_t>(v)];
    }
    return out;
}

// Exact h-colorability with a preassigned clique and DSATUR-style dynamic
// vertex selection.
struct ColorSolver {
    const std::vector<Mask>& adj;
    int n;
    int h;
    std::vector<int> color;
    std::vector<Mask> forbidden;                     // colors on neighbors
    std::vector<std::array<std::uint8_t, 64>> cnt;  // per-color neighbor count
    std::vector<int> degree;

    ColorSolver(const std::vector<Mask>& a, int n_, int h_)
        : adj(a), n(n_), h(h_), color(static_cast<std::size_t>(n_), -1),
          forbidden(static_cast<std::size_t>(n_), 0),
          cnt(static_cast<std::size_t>(n_)), degree(static_cast<std::size_t>(n_), 0) {
        for (auto& c : cnt) c.fill(0);
        for (int v = 0; v < n; ++v)
            degree[static_cast<std::size_t>(v)] = popcount(adj[static_cast<std::size_t>(v)]);
    }

    void assign(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        Mask nb = adj[static_cast<std::size_t>(v)];
        while (nb) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (++cnt[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 1)
                forbidden[static_cast<std::size_t>(u)] |= bit(c);
        }
    }

    void unassign(int v, int c) {
        color[static_cast<std::size_t>(v)] = -1;
        Mask nb = adj[static_cast<std::size_t>(v)];
        while (nb) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (--cnt[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0)
                forbidden[static_cast<std::size_t>(u)] &= ~bit(c);
        }
    }

    bool dfs(int colored, int used) {
        if (colored == n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0) continue;
            const int sat = popcount(forbidden[static_cast<std::size_t>(v)]);
            if (sat >= h) return false;  // dead vertex
            const int deg = degree[static_cast<std::size_t>(v)];
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const int limit = std::min(used + 1, h);  // one fresh color at most
        Mask allowed = ~forbidden[static_cast<std::size_t>(pick)] & full_mask(limit);
        while (allowed) {
            const int c = std::countr_zero(allowed);
            allowed &= allowed - 1;
            assign(pick, c);
            if (dfs(colored + 1, std::max(used, c + 1))) return true;
            unassign(pick, c);
        }
        return false;
    }
};

}  // namespace

std::vector<Mask> mask_rows(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.row(v)[0];
    return adj;
}

VertexSet mask_to_set(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

std::vector<Mask> complement_rows(const std::vector<Mask>& adj, int n) {
    const Mask full = full_mask(n);
    std::vector<Mask> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        out[static_cast<std::size_t>(v)] = ~adj[static_cast<std::size_t>(v)] & full & ~bit(v);
    return out;
}

Mask max_clique_mask(const std::vector<Mask>& adj, Mask universe) {
    if (universe == 0) return 0;
    std::vector<Mask> restricted(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) restricted[v] = adj[v] & universe;
    const Mask primed = greedy_clique_mask(restricted, universe);
    CliqueSolver solver{restricted};
    solver.best = popcount(primed) - 1;
    solver.best_mask = 0;
    solver.expand(universe, 0, 0);
    return solver.best_mask != 0 ? solver.best_mask : primed;
}

int max_clique_size(const std::vector<Mask>& adj, Mask universe) {
    return popcount(max_clique_mask(adj, universe));
}

Mask lex_min_max_independent(const std::vector<Mask>& cadj, Mask universe) {
    const int target = max_clique_size(cadj, universe);
    Mask chosen = 0, cand = universe;
    int have = 0;
    while (cand && have < target) {
        const int v = std::countr_zero(cand);
        const Mask incl = cand & cadj[static_cast<std::size_t>(v)];
        if (have + 1 + max_clique_size(cadj, incl) == target) {
            chosen |= bit(v);
            ++have;
            cand = incl;
        } else {
            cand &= ~bit(v);
        }
    }
    return chosen;
}

bool mask_h_colorable(const std::vector<Mask>& adj, int n, Mask members,
                      int h, std::vector<int>* witness) {
    const int mn = popcount(members);
    if (mn == 0) {
        if (witness) witness->assign(static_cast<std::size_t>(n), -1);
        return true;
    }
    if (h <= 0) return false;
    if (h >= mn) h = mn;

    // Compact the member subgraph to vertices 0..mn-1.
    std::array<int, 64> to_orig;
    std::array<int, 64> to_compact;
    int idx = 0;
    Mask mm = members;
    while (mm) {
        const int v = std::countr_zero(mm);
        mm &= mm - 1;
        to_orig[static_cast<std::size_t>(idx)] = v;
        to_compact[static_cast<std::size_t>(v)] = idx;
        ++idx;
    }
    std::vector<Mask> cadj(static_cast<std::size_t>(mn), 0);
    for (int i = 0; i < mn; ++i) {
        Mask nb = adj[static_cast<std::size_t>(to_orig[static_cast<std::size_t>(i)])] & members;
        while (nb) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            cadj[static_cast<std::size_t>(i)] |= bit(to_compact[static_cast<std::size_t>(u)]);
        }
    }

    const Mask clique = max_clique_mask(cadj, full_mask(mn));
    if (popcount(clique) > h) return false;

    ColorSolver solver(cadj, mn, h);
    int used = 0;
    Mask cm = clique;
    while (cm) {
        const int v = std::countr_zero(cm);
        cm &= cm - 1;
        solver.assign(v, used++);
    }
    if (!solver.dfs(used, used)) return false;
    if (witness) {
        witness->assign(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < mn; ++i)
            (*witness)[static_cast<std::size_t>(to_orig[static_cast<std::size_t>(i)])] =
                solver.color[static_cast<std::size_t>(i)];
    }
    return true;
}

MaskDsatur dsatur_within_masks(const std::vector<Mask>& adj, int n, int budget) {
    MaskDsatur out;
    out.assignment.assign(static_cast<std::size_t>(n), -1);
    const int cap = std::min(budget, n);
    std::vector<Mask> forb(static_cast<std::size_t>(n), 0);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = popcount(adj[static_cast<std::size_t>(v)]);
    Mask pending = full_mask(n);
    while (pending) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        Mask scan = pending;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const int sat = popcount(forb[static_cast<std::size_t>(v)]);
            const int d = deg[static_cast<std::size_t>(v)];
            if (sat > pick_sat || (sat == pick_sat && d > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = d;
            }
        }
        pending &= ~bit(pick);
        if (cap <= 0) continue;
        const Mask allowed = ~forb[static_cast<std::size_t>(pick)] & full_mask(cap);
        if (allowed == 0) continue;  // rejected: does not fit in the budget
        const int c = std::countr_zero(allowed);
        out.assignment[static_cast<std::size_t>(pick)] = c;
        out.kept |= bit(pick);
        out.colors_used = std::max(out.colors_used, c + 1);
        Mask nb = adj[static_cast<std::size_t>(pick)] & pending;
        while (nb) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            forb[static_cast<std::size_t>(u)] |= bit(c);
        }
    }
    return out;
}

namespace {

// Depth-first search over the subset lattice, include-first in ascending
// vertex order.  Only h-colorable prefixes are entered, so reaching depth n
// always yields a feasible set; because strictly larger sets are required
// for an update, the first recorded set of the final size is the
// lexicographically smallest maximizer.
struct SubsetSearch {
    const std::vector<Mask>& adj;
    int n;
    int h;
    int best;
    Mask best_mask = 0;
    std::array<Mask, 64> classes{};  // greedy color classes on the current path

    SubsetSearch(const std::vector<Mask>& a, int n_, int h_, int primed_best)
        : adj(a), n(n_), h(h_), best(primed_best) {}

    void dfs(int idx, Mask members, int size) {
        if (size + (n - idx) <= best) return;
        if (idx == n) {
            best = size;
            best_mask = members;
            return;
        }
        // include idx when the extended set stays h-colorable
        const Mask ext = members | bit(idx);
        bool feasible = false;
        std::array<Mask, 64> saved;
        std::copy_n(classes.begin(), h, saved.begin());
        for (int c = 0; c < h; ++c) {
            if ((classes[static_cast<std::size_t>(c)] & adj[static_cast<std::size_t>(idx)]) == 0) {
                classes[static_cast<std::size_t>(c)] |= bit(idx);
                feasible = true;
                break;
            }
        }
        if (!feasible) {
            // the greedy classes painted themselves in; ask the exact solver
            std::vector<int> witness;
            if (mask_h_colorable(adj, n, ext, h, &witness)) {
                std::fill_n(classes.begin(), h, Mask{0});
                for (int v = 0; v < n; ++v)
                    if (witness[static_cast<std::size_t>(v)] >= 0)
                        classes[static_cast<std::size_t>(witness[static_cast<std::size_t>(v)])] |= bit(v);
                feasible = true;
            }
        }
        if (feasible) dfs(idx + 1, ext, size + 1);
        std::copy_n(saved.begin(), h, classes.begin());
        dfs(idx + 1, members, size);
    }
};

}  // namespace

SubsetResult max_colorable_subset_masks(const std::vector<Mask>& adj, int n,
                                        int budget) {
    if (n == 0 || budget <= 0) return {0, 0};
    const MaskDsatur greedy = dsatur_within_masks(adj, n, budget);
    const int kept = popcount(greedy.kept);
    if (kept == n) return {n, full_mask(n)};
    const int h = std::min(budget, n);
    SubsetSearch search(adj, n, h, kept - 1);
    search.dfs(0, 0, 0);
    return {search.best, search.best_mask};
}

}  // namespace chromlab::detail
