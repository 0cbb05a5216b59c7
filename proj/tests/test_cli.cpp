#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "chromlab/dimacs.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CHROMLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    CmdResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("chromlab_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen is deterministic and self-consistent") {
    TempDir tmp;
    const std::string f1 = tmp.file("a.col"), f2 = tmp.file("b.col");
    CHECK_EQ(run_cli("gen --n 50 --p 0.3 --seed 7 --out " + f1).exit_code, 0);
    CHECK_EQ(run_cli("gen --n 50 --p 0.3 --seed 7 --out " + f2).exit_code, 0);
    const std::string text = slurp(f1);
    CHECK_EQ(text, slurp(f2));
    // seed echoed, header matches edge-line count
    CHECK(text.find("seed=7") != std::string::npos);
    const chromlab::Graph g = chromlab::read_dimacs_file(f1);
    CHECK_EQ(g.order(), 50);
    std::size_t edge_lines = 0;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (line.rfind("e ", 0) == 0) ++edge_lines;
    CHECK_EQ(edge_lines, g.num_edges());
    // stdout mode matches too
    const CmdResult direct = run_cli("gen --n 50 --p 0.3 --seed 7");
    CHECK_EQ(direct.exit_code, 0);
    CHECK_EQ(direct.output, text);
}

TEST_CASE("gen with n=0 writes an empty header") {
    const CmdResult r = run_cli("gen --n 0 --p 0.5 --seed 1");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.find("p edge 0 0\n") != std::string::npos);
}

TEST_CASE("gen rejects invalid probability without leaving output") {
    TempDir tmp;
    const std::string out = tmp.file("never.col");
    const CmdResult r = run_cli("gen --n 5 --p 1.5 --seed 1 --out " + out);
    CHECK_EQ(r.exit_code, 1);
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("gen refuses unstorable sizes with the guard exit code") {
    CHECK_EQ(run_cli("gen --n 200000 --p 0.5 --seed 1").exit_code, 2);
}

TEST_CASE("chi solves the classics from files") {
    TempDir tmp;
    const std::string k6 = tmp.file("k6.col");
    const std::string c5 = tmp.file("c5.col");
    const std::string pet = tmp.file("petersen.col");
    chromlab::write_dimacs_file(k6, testutil::complete_graph(6));
    chromlab::write_dimacs_file(c5, testutil::cycle_graph(5));
    chromlab::write_dimacs_file(pet, testutil::petersen_graph());

    CmdResult r = run_cli("chi --in " + k6);
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.rfind("chi=6\n", 0) == 0);
    r = run_cli("chi --in " + c5);
    CHECK(r.output.rfind("chi=3\n", 0) == 0);
    r = run_cli("chi --in " + pet);
    CHECK(r.output.rfind("chi=3\n", 0) == 0);
    CHECK(r.output.find("vertex,color\n") != std::string::npos);
}

TEST_CASE("chi maps failures to the documented exit codes") {
    TempDir tmp;
    CHECK_EQ(run_cli("chi --in " + tmp.file("missing.col")).exit_code, 3);

    const std::string bad = tmp.file("bad.col");
    std::ofstream(bad) << "p edge 2 1\ne 1 9\n";
    CHECK_EQ(run_cli("chi --in " + bad).exit_code, 1);

    const std::string big = tmp.file("big.col");
    chromlab::write_dimacs_file(big, chromlab::sample_gnp({46, 0.5, 1}));
    CHECK_EQ(run_cli("chi --in " + big).exit_code, 2);
    // a lowered guard refuses small graphs as well
    const std::string small = tmp.file("small.col");
    chromlab::write_dimacs_file(small, chromlab::sample_gnp({12, 0.5, 1}));
    CHECK_EQ(run_cli("chi --in " + small + " --guard-n 10").exit_code, 2);
    CHECK_EQ(run_cli("chi --in " + small + " --guard-n 12").exit_code, 0);
    // overrides beyond the word width are usage errors
    CHECK_EQ(run_cli("chi --in " + small + " --guard-n 65").exit_code, 1);
}

TEST_CASE("concentrate writes deterministic reports") {
    TempDir tmp;
    const std::string base1 = tmp.file("r1"), base2 = tmp.file("r2");
    const std::string flags = "concentrate --n 12 --p 0.5 --trials 40 --seed 5 --omega const:3";
    const CmdResult a = run_cli(flags + " --out " + base1);
    const CmdResult b = run_cli(flags + " --out " + base2);
    CHECK_EQ(a.exit_code, 0);
    CHECK_EQ(a.output, b.output);
    CHECK_EQ(slurp(base1 + ".csv"), slurp(base2 + ".csv"));
    CHECK_EQ(slurp(base1 + ".json"), slurp(base2 + ".json"));
    CHECK(slurp(base1 + ".csv").rfind("chi,count\n", 0) == 0);
    CHECK(a.output.find("\"master_seed\": 5") != std::string::npos);
}

TEST_CASE("concentrate on a single vertex reports width zero") {
    const CmdResult r = run_cli("concentrate --n 1 --p 0.5 --trials 10 --seed 2");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.find("\"width\": 0") != std::string::npos);
}

TEST_CASE("concentrate at n=30 reports the interval width target") {
    // 3 * sqrt(30) / ln(30) = 4.83114...
    const CmdResult r =
        run_cli("concentrate --n 30 --p 0.5 --trials 500 --seed 20260810 --omega const:3");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.find("\"target_width\": 4.83114") != std::string::npos);
}

TEST_CASE("concentrate usage and guard failures") {
    CHECK_EQ(run_cli("concentrate --n 12 --p 0.5 --trials 10 --omega bogus").exit_code, 1);
    CHECK_EQ(run_cli("concentrate --n 12 --p 0.5").exit_code, 1);  // missing --trials
    CHECK_EQ(run_cli("concentrate --n 50 --p 0.5 --trials 10").exit_code, 2);
}

TEST_CASE("unknown subcommands and missing flags are usage errors") {
    CHECK_EQ(run_cli("frobnicate").exit_code, 1);
    CHECK_EQ(run_cli("gen --p 0.5").exit_code, 1);
    CHECK_EQ(run_cli("").exit_code, 1);
}
