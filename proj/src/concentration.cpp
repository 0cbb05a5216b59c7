#include "chromlab/concentration.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "chromlab/clique.hpp"
#include "chromlab/errors.hpp"
#include "solver_internal.hpp"

namespace chromlab {

namespace {

using detail::Mask;

std::string format6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

OmegaSpec OmegaSpec::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("constant omega must be a positive finite number");
    return {Kind::constant, c};
}

OmegaSpec OmegaSpec::loglog() { return {Kind::loglog, 1.0}; }

OmegaSpec OmegaSpec::log() { return {Kind::log, 1.0}; }

double OmegaSpec::eval(std::int64_t n) const {
    double raw = 1.0;
    switch (kind) {
        case Kind::constant:
            raw = value;
            break;
        case Kind::loglog:
            raw = n >= 3 ? std::log(std::log(static_cast<double>(n))) : 1.0;
            break;
        case Kind::log:
            raw = n >= 1 ? std::log(static_cast<double>(n)) : 1.0;
            break;
    }
    return std::max(1.0, raw);
}

std::string OmegaSpec::describe() const {
    switch (kind) {
        case Kind::constant:
            return "const:" + format6(value);
        case Kind::loglog:
            return "loglog";
        case Kind::log:
            return "log";
    }
    return "loglog";
}

OmegaSpec OmegaSpec::parse(const std::string& text) {
    if (text == "loglog") return loglog();
    if (text == "log") return log();
    if (text.rfind("const:", 0) == 0) {
        std::size_t used = 0;
        double c = 0.0;
        try {
            c = std::stod(text.substr(6), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse omega constant in '" + text + "'");
        }
        if (used != text.size() - 6)
            throw std::invalid_argument("trailing characters in omega spec '" + text + "'");
        return constant(c);
    }
    throw std::invalid_argument("omega spec must be const:<c>, loglog, or log (got '" +
                                text + "')");
}

int estimate_h_hat(const std::vector<TrialRecord>& records, const OmegaSpec& omega,
                   std::int64_t n) {
    if (records.empty())
        throw std::invalid_argument("estimate_h_hat requires at least one record");
    std::map<int, std::int64_t> counts;
    for (const auto& r : records) {
        if (!r.chi.has_value())
            throw std::invalid_argument("estimate_h_hat requires exact chi in every record");
        ++counts[*r.chi];
    }
    const double threshold = 1.0 / omega.eval(n);
    const auto total = static_cast<double>(records.size());
    std::int64_t cum = 0;
    for (const auto& [chi, count] : counts) {
        cum += count;
        if (static_cast<double>(cum) / total > threshold) return chi;
    }
    // threshold == 1: no quantile strictly exceeds it, fall back to the max
    return counts.rbegin()->first;
}

double azuma_tail(double t, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("azuma_tail requires n >= 1");
    if (!(t > 0.0)) throw std::invalid_argument("azuma_tail requires t > 0");
    return 2.0 * std::exp(-(t * t) / static_cast<double>(n));
}

double target_interval_width(std::int64_t n, const OmegaSpec& omega) {
    if (n < 2) throw std::invalid_argument("width target requires n >= 2");
    return omega.eval(n) * std::sqrt(static_cast<double>(n)) /
           std::log(static_cast<double>(n));
}

int lipschitz_deviation(const Graph& g, int budget, int v, const SolverGuards& guards) {
    const int n = g.order();
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    if (budget < 0) throw std::invalid_argument("color budget must be non-negative");
    const int effective = std::min(guards.rewiring_check_max_n, kSolverWordLimit);
    if (n > effective)
        throw guard_error("lipschitz_deviation refused: n=" + std::to_string(n) +
                          " exceeds the exhaustive rewiring guard " +
                          std::to_string(effective));

    const auto adj = detail::mask_rows(g);
    const int base = detail::max_colorable_subset_masks(adj, n, budget).size;

    std::vector<int> others;
    for (int u = 0; u < n; ++u)
        if (u != v) others.push_back(u);

    int max_dev = 0;
    std::vector<Mask> rewired(adj);
    const Mask count = Mask{1} << others.size();
    for (Mask pattern = 0; pattern < count; ++pattern) {
        Mask new_row = 0;
        for (std::size_t i = 0; i < others.size(); ++i)
            if (pattern & (Mask{1} << i)) new_row |= detail::bit(others[i]);
        rewired[static_cast<std::size_t>(v)] = new_row;
        for (int u : others) {
            if (new_row & detail::bit(u))
                rewired[static_cast<std::size_t>(u)] = adj[static_cast<std::size_t>(u)] | detail::bit(v);
            else
                rewired[static_cast<std::size_t>(u)] = adj[static_cast<std::size_t>(u)] & ~detail::bit(v);
        }
        const int s = detail::max_colorable_subset_masks(rewired, n, budget).size;
        max_dev = std::max(max_dev, std::abs(s - base));
    }
    return max_dev;
}

ConcentrationReport run_concentration_experiment(int n, double p, std::int64_t trials,
                                                 std::uint64_t master_seed,
                                                 const OmegaSpec& omega,
                                                 const SolverGuards& guards) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("edge probability must lie strictly in (0,1)");
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    const int effective = std::min(guards.chi_exact_max_n, kSolverWordLimit);
    if (n > effective)
        throw guard_error("run_concentration_experiment refused: n=" + std::to_string(n) +
                          " exceeds the exact-chi guard " + std::to_string(effective));

    ConcentrationReport report;
    report.n = n;
    report.p = p;
    report.trials = trials;
    report.master_seed = master_seed;
    report.omega = omega;

    std::vector<TrialRecord> exact_records;
    exact_records.reserve(static_cast<std::size_t>(trials));
    for (std::int64_t i = 0; i < trials; ++i) {
        TrialRecord tr;
        tr.index = i;
        tr.seed = derive_seed(master_seed, static_cast<std::uint64_t>(i));
        const Graph g = sample_gnp({n, p, tr.seed});
        const auto start = std::chrono::steady_clock::now();
        try {
            const auto [chi, coloring] = chromatic_number_exact(g, guards);
            tr.chi = chi;
            tr.chi_lower = chi;
            tr.chi_upper = chi;
        } catch (const guard_error&) {
            // refusal recorded, not fatal: keep polynomial bounds
            VertexSet all(static_cast<std::size_t>(g.order()));
            for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
            tr.chi_lower = g.order() > 0
                               ? static_cast<int>(greedy_clique(g, all).size())
                               : 0;
            tr.chi_upper = two_phase_upper_bound(g, g.order(), SetMode::heuristic, guards).total;
            ++report.failed_trials;
        }
        tr.solve_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (tr.chi.has_value()) {
            ++report.chi_counts[*tr.chi];
            exact_records.push_back(tr);
        }
    }

    if (exact_records.empty())
        throw guard_error("run_concentration_experiment: no trial produced an exact chi");

    report.h_hat = estimate_h_hat(exact_records, omega, n);

    const auto exact_total = static_cast<std::int64_t>(exact_records.size());
    const double w = omega.eval(n);
    std::int64_t required = static_cast<std::int64_t>(
        std::ceil((1.0 - 1.0 / w) * static_cast<double>(exact_total) - 1e-9));
    required = std::clamp<std::int64_t>(required, 1, exact_total);

    std::vector<std::pair<int, std::int64_t>> values(report.chi_counts.begin(),
                                                     report.chi_counts.end());
    int best_lo = values.front().first, best_hi = values.back().first;
    int best_width = best_hi - best_lo;
    std::size_t hi = 0;
    std::int64_t mass = 0;
    for (std::size_t lo = 0; lo < values.size(); ++lo) {
        if (hi < lo) {
            hi = lo;
            mass = 0;
        }
        while (mass < required && hi < values.size()) mass += values[hi++].second;
        if (mass < required) break;
        const int width = values[hi - 1].first - values[lo].first;
        if (width < best_width) {
            best_width = width;
            best_lo = values[lo].first;
            best_hi = values[hi - 1].first;
        }
        mass -= values[lo].second;
    }
    report.interval_lo = best_lo;
    report.interval_hi = best_hi;
    report.width = best_width;
    report.target_width = n >= 2 ? target_interval_width(n, omega)
                                 : std::numeric_limits<double>::quiet_NaN();

    std::int64_t cum = 0;
    for (const auto& [chi, count] : report.chi_counts) {
        if (chi > report.h_hat) break;
        cum += count;
    }
    const double q = static_cast<double>(cum) / static_cast<double>(exact_total);
    report.h_hat_cdf = q;
    report.h_hat_cdf_se = std::sqrt(q * (1.0 - q) / static_cast<double>(exact_total));
    return report;
}

void write_report_csv(std::ostream& os, const ConcentrationReport& report) {
    os << "chi,count\n";
    for (const auto& [chi, count] : report.chi_counts) os << chi << ',' << count << '\n';
}

void write_report_summary(std::ostream& os, const ConcentrationReport& report) {
    os << "{\n";
    os << "  \"n\": " << report.n << ",\n";
    os << "  \"p\": " << format6(report.p) << ",\n";
    os << "  \"trials\": " << report.trials << ",\n";
    os << "  \"omega\": \"" << report.omega.describe() << "\",\n";
    os << "  \"h_hat\": " << report.h_hat << ",\n";
    os << "  \"interval_lo\": " << report.interval_lo << ",\n";
    os << "  \"interval_hi\": " << report.interval_hi << ",\n";
    os << "  \"width\": " << report.width << ",\n";
    if (std::isnan(report.target_width))
        os << "  \"target_width\": null,\n";
    else
        os << "  \"target_width\": " << format6(report.target_width) << ",\n";
    os << "  \"master_seed\": " << report.master_seed << ",\n";
    os << "  \"h_hat_cdf\": " << format6(report.h_hat_cdf) << ",\n";
    os << "  \"h_hat_cdf_se\": " << format6(report.h_hat_cdf_se) << ",\n";
    os << "  \"failed_trials\": " << report.failed_trials << "\n";
    os << "}\n";
}

}  // namespace chromlab
