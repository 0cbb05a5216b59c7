#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chromlab/coloring.hpp"
#include "chromlab/graph.hpp"

namespace chromlab {

/// A named slow-growing function omega(n), clamped so omega(n) >= 1.
struct OmegaSpec {
    enum class Kind { constant, loglog, log };

    Kind kind = Kind::loglog;
    double value = 1.0;  // only used by Kind::constant

    static OmegaSpec constant(double c);
    static OmegaSpec loglog();
    static OmegaSpec log();

    /// max(1, omega(n)).
    double eval(std::int64_t n) const;

    /// "const:<c>", "loglog", or "log"; the inverse of parse().
    std::string describe() const;

    /// Parses the describe() syntax; throws std::invalid_argument otherwise.
    static OmegaSpec parse(const std::string& text);
};

/// One Monte Carlo sample: the derived seed and the exact chromatic number,
/// or a (lower, upper) bound pair when the exact solve was refused.
/// solve_seconds is informational only and is never serialized.
struct TrialRecord {
    std::int64_t index = 0;
    std::uint64_t seed = 0;
    std::optional<int> chi;
    int chi_lower = 0;
    int chi_upper = 0;
    double solve_seconds = 0.0;
};

/// Aggregated outcome of a concentration experiment.  interval_lo and
/// interval_hi are attained chi values; target_width is NaN when n < 2
/// (serialized as null).
struct ConcentrationReport {
    int n = 0;
    double p = 0.0;
    std::int64_t trials = 0;
    std::uint64_t master_seed = 0;
    OmegaSpec omega;
    std::map<int, std::int64_t> chi_counts;
    std::int64_t failed_trials = 0;
    int h_hat = 0;
    int interval_lo = 0;
    int interval_hi = 0;
    int width = 0;
    double target_width = 0.0;
    double h_hat_cdf = 0.0;     // empirical P(chi <= h_hat)
    double h_hat_cdf_se = 0.0;  // binomial standard error of h_hat_cdf
};

/// Smallest integer r whose empirical fraction of trials with chi <= r
/// strictly exceeds 1/omega(n).  When no r qualifies (omega == 1 makes the
/// threshold 1) returns the largest observed chi, so the estimate always
/// lies between the smallest and largest observed values.  Every record
/// must carry an exact chi.
int estimate_h_hat(const std::vector<TrialRecord>& records,
                   const OmegaSpec& omega, std::int64_t n);

/// Azuma-Hoeffding tail 2*exp(-t^2/n) for a 1-Lipschitz functional under
/// vertex exposure.  Returned uncapped: the value exceeds 1 for small t.
/// Requires t > 0 and n >= 1.
double azuma_tail(double t, std::int64_t n);

/// Concentration interval width omega(n) * sqrt(n) / ln(n).  Requires
/// n >= 2.
double target_interval_width(std::int64_t n, const OmegaSpec& omega);

/// Exhaustively rewires vertex v against every subset of the remaining
/// vertices and returns the largest |s(g') - s(g)| observed, where s is
/// max_colorable_subset_size at the given budget.  The combinatorial fact
/// behind the martingale tail is that this never exceeds 1.
int lipschitz_deviation(const Graph& g, int budget, int v,
                        const SolverGuards& guards = kDefaultGuards);

/// Samples `trials` graphs G(n,p) with seeds derive_seed(master_seed, i),
/// solves chi exactly per trial, and aggregates the empirical distribution,
/// h_hat, and the shortest interval of attained chi values holding mass
/// >= 1 - 1/omega(n) (ties: smallest left endpoint).  Deterministic given
/// (n, p, trials, master_seed, omega).
ConcentrationReport run_concentration_experiment(
    int n, double p, std::int64_t trials, std::uint64_t master_seed,
    const OmegaSpec& omega, const SolverGuards& guards = kDefaultGuards);

/// CSV rows `chi,count` in increasing chi order, with header.
void write_report_csv(std::ostream& os, const ConcentrationReport& report);

/// Deterministic JSON summary; floating-point fields use 6 significant
/// digits.
void write_report_summary(std::ostream& os, const ConcentrationReport& report);

}  // namespace chromlab
