#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chromlab/clique.hpp"
#include "chromlab/coloring.hpp"
#include "chromlab/concentration.hpp"
#include "chromlab/dimacs.hpp"
#include "chromlab/errors.hpp"
#include "chromlab/graph.hpp"

namespace {

// Exit codes: 0 success, 1 usage/validation, 2 guard refusal, 3 I/O.
enum ExitCode { kOk = 0, kUsage = 1, kGuard = 2, kIo = 3 };

std::string format6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw chromlab::io_error("cannot open '" + path + "' for writing");
    f << text;
    f.flush();
    if (!f) throw chromlab::io_error("failed writing '" + path + "'");
}

struct Options {
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    std::string omega = "loglog";
    std::string in_path;
    std::string out_path;
    int guard_n = 0;  // 0: keep defaults
};

chromlab::SolverGuards resolve_guards(const Options& opt) {
    chromlab::SolverGuards guards;
    if (opt.guard_n > 0) guards.chi_exact_max_n = opt.guard_n;
    return guards;
}

int run_gen(const Options& opt) {
    const chromlab::GnpParams params{opt.n, opt.p, opt.seed};
    const chromlab::Graph g = chromlab::sample_gnp(params);
    std::ostringstream buf;
    buf << "c gnp n=" << opt.n << " p=" << format6(opt.p) << " seed=" << opt.seed << "\n";
    chromlab::write_dimacs(buf, g);
    if (opt.out_path.empty())
        std::cout << buf.str();
    else
        write_text_file(opt.out_path, buf.str());
    return kOk;
}

int run_chi(const Options& opt) {
    const chromlab::Graph g = chromlab::read_dimacs_file(opt.in_path);
    const auto [chi, coloring] = chromlab::chromatic_number_exact(g, resolve_guards(opt));
    if (!chromlab::is_proper(g, coloring) || chi != coloring.color_count)
        throw std::runtime_error("internal error: solver emitted an improper coloring");
    std::ostringstream csv;
    chromlab::write_coloring_csv(csv, coloring);
    std::cout << "chi=" << chi << "\n";
    if (opt.out_path.empty())
        std::cout << csv.str();
    else
        write_text_file(opt.out_path, csv.str());
    return kOk;
}

int run_concentrate(const Options& opt) {
    const chromlab::OmegaSpec omega = chromlab::OmegaSpec::parse(opt.omega);
    const chromlab::ConcentrationReport report = chromlab::run_concentration_experiment(
        opt.n, opt.p, opt.trials, opt.seed, omega, resolve_guards(opt));
    std::ostringstream csv, summary;
    chromlab::write_report_csv(csv, report);
    chromlab::write_report_summary(summary, report);
    if (!opt.out_path.empty()) {
        write_text_file(opt.out_path + ".csv", csv.str());
        write_text_file(opt.out_path + ".json", summary.str());
    } else {
        std::cout << csv.str();
    }
    std::cout << summary.str();
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromlab: chromatic-number concentration experiments on G(n,p)"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* gen = app.add_subcommand("gen", "Sample G(n,p) and write a DIMACS edge list");
    gen->add_option("--n", opt.n, "vertex count")->required();
    gen->add_option("--p", opt.p, "edge probability, strictly in (0,1)")->required();
    gen->add_option("--seed", opt.seed, "64-bit sampling seed (default 0)");
    gen->add_option("--out", opt.out_path, "output path (stdout when omitted)");

    CLI::App* chi = app.add_subcommand("chi", "Exact chromatic number of a DIMACS graph");
    chi->add_option("--in", opt.in_path, "input DIMACS file")->required();
    chi->add_option("--out", opt.out_path, "coloring CSV path (stdout when omitted)");
    chi->add_option("--guard-n", opt.guard_n, "override the exact-chi size guard")
        ->check(CLI::Range(1, chromlab::kSolverWordLimit));

    CLI::App* conc = app.add_subcommand(
        "concentrate", "Monte Carlo chi distribution, h_hat, and interval width");
    conc->add_option("--n", opt.n, "vertex count")->required();
    conc->add_option("--p", opt.p, "edge probability, strictly in (0,1)")->required();
    conc->add_option("--trials", opt.trials, "number of samples")->required();
    conc->add_option("--seed", opt.seed, "master seed; trial i uses derive_seed(seed,i)");
    conc->add_option("--omega", opt.omega, "omega spec: const:<c>|loglog|log (default loglog)");
    conc->add_option("--out", opt.out_path, "basename for <out>.csv and <out>.json");
    conc->add_option("--guard-n", opt.guard_n, "override the exact-chi size guard")
        ->check(CLI::Range(1, chromlab::kSolverWordLimit));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        if (gen->parsed()) return run_gen(opt);
        if (chi->parsed()) return run_chi(opt);
        if (conc->parsed()) return run_concentrate(opt);
        std::cerr << "no subcommand selected\n";
        return kUsage;
    } catch (const chromlab::guard_error& e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return kGuard;
    } catch (const chromlab::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kIo;
    } catch (const chromlab::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
