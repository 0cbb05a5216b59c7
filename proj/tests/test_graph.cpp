#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "chromlab/errors.hpp"
#include "chromlab/graph.hpp"
#include "oracles.hpp"

using namespace chromlab;

namespace {

// Symmetry and irreflexivity, straight off the adjacency relation.
void check_well_formed(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        for (int v = u + 1; v < g.order(); ++v) CHECK_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
}

VertexSet all_vertices(const Graph& g) {
    VertexSet out(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = v;
    return out;
}

}  // namespace

TEST_CASE("sample_gnp handles the empty graph") {
    const Graph g = sample_gnp({0, 0.5, 1});
    CHECK_EQ(g.order(), 0);
    CHECK_EQ(g.num_edges(), 0);
}

TEST_CASE("sample_gnp is a pure function of (n,p,seed)") {
    const Graph a = sample_gnp({5, 0.5, 123});
    const Graph b = sample_gnp({5, 0.5, 123});
    CHECK(a == b);
    const Graph c = sample_gnp({5, 0.5, 124});
    CHECK_FALSE(a == c);  // overwhelmingly likely for distinct seeds
}

TEST_CASE("sample_gnp rejects p outside the open interval") {
    CHECK_THROWS_AS(sample_gnp({5, 0.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sample_gnp({5, 1.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sample_gnp({5, -0.2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sample_gnp({5, 1.7, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sample_gnp({-1, 0.5, 1}), std::invalid_argument);
}

TEST_CASE("sample_gnp refuses graphs too large to store") {
    CHECK_THROWS_AS(sample_gnp({200000, 0.5, 1}), guard_error);
}

TEST_CASE("sample_gnp edge count stays within 4 sigma of the binomial mean") {
    // n=1000, p=0.3: mean = 0.3 * C(1000,2) = 149850, sigma = sqrt(C*p*(1-p))
    const double pairs = 1000.0 * 999.0 / 2.0;
    const double mean = 0.3 * pairs;
    const double sigma = std::sqrt(pairs * 0.3 * 0.7);
    for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
        const Graph g = sample_gnp({1000, 0.3, seed});
        CHECK(std::abs(static_cast<double>(g.num_edges()) - mean) < 4.0 * sigma);
    }
}

TEST_CASE("pooled edge frequency over many samples matches p to 4 sigma") {
    const int n = 50;
    const int samples = 10000;
    const double pairs_per_graph = n * (n - 1) / 2.0;
    std::size_t edges = 0;
    for (int i = 0; i < samples; ++i)
        edges += sample_gnp({n, 0.4, derive_seed(31337, static_cast<std::uint64_t>(i))}).num_edges();
    const double total_pairs = pairs_per_graph * samples;
    const double freq = static_cast<double>(edges) / total_pairs;
    const double sigma = std::sqrt(0.4 * 0.6 / total_pairs);
    CHECK(std::abs(freq - 0.4) < 4.0 * sigma);
}

TEST_CASE("constructors produce symmetric irreflexive adjacency") {
    check_well_formed(sample_gnp({40, 0.3, 9}));
    check_well_formed(complement(sample_gnp({40, 0.7, 10})));
    check_well_formed(induced_subgraph(sample_gnp({40, 0.5, 11}), {0, 3, 7, 20, 39}));
}

TEST_CASE("complement of the empty graph is complete") {
    const Graph g = complement(Graph(4));
    CHECK_EQ(g.num_edges(), 6);
}

TEST_CASE("complement is an involution") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = sample_gnp({30, 0.4, seed});
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("complement of C5 is isomorphic to C5") {
    // v -> 2v mod 5 maps the complement's edges {i, i+-2} onto a 5-cycle
    const Graph c5 = testutil::cycle_graph(5);
    const Graph cc = complement(c5);
    CHECK_EQ(cc.num_edges(), 5);
    const int relabel[5] = {0, 2, 4, 1, 3};
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            CHECK_EQ(cc.adjacent(relabel[u], relabel[v]), c5.adjacent(u, v));
}

TEST_CASE("induced subgraph on the full vertex set is the identity") {
    const Graph g = sample_gnp({12, 0.5, 5});
    CHECK(induced_subgraph(g, all_vertices(g)) == g);
}

TEST_CASE("induced subgraph of K5 on three vertices is K3") {
    const Graph g = induced_subgraph(testutil::complete_graph(5), {0, 1, 2});
    CHECK_EQ(g.order(), 3);
    CHECK_EQ(g.num_edges(), 3);
}

TEST_CASE("induced subgraph of C6 on alternating vertices is edgeless") {
    const Graph g = induced_subgraph(testutil::cycle_graph(6), {0, 2, 4});
    CHECK_EQ(g.order(), 3);
    CHECK_EQ(g.num_edges(), 0);
}

TEST_CASE("induced subgraph validates its vertex set") {
    const Graph g = testutil::cycle_graph(5);
    CHECK_THROWS_AS(induced_subgraph(g, {0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subgraph(g, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subgraph(g, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subgraph(g, {-1, 1}), std::invalid_argument);
}

TEST_CASE("edge_count on K4, singletons, and the Petersen outer cycle") {
    CHECK_EQ(edge_count(testutil::complete_graph(4), {0, 1, 2, 3}), 6);
    CHECK_EQ(edge_count(sample_gnp({10, 0.5, 3}), {4}), 0);
    CHECK_EQ(edge_count(testutil::petersen_graph(), {0, 1, 2, 3, 4}), 5);
}

TEST_CASE("edge counts of a set and its complement partition all pairs") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = sample_gnp({25, 0.35, seed});
        const Graph cg = complement(g);
        const VertexSet u = {1, 2, 5, 8, 13, 21, 24};
        const std::size_t pairs = u.size() * (u.size() - 1) / 2;
        CHECK_EQ(edge_count(g, u) + edge_count(cg, u), pairs);
    }
}

TEST_CASE("derive_seed separates trials") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(99, i));
    CHECK_EQ(seen.size(), 1000);
    CHECK_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST_CASE("graph accessors agree with the adjacency relation") {
    const Graph g = testutil::petersen_graph();
    CHECK_EQ(g.degree(0), 3);
    CHECK_EQ(g.neighbors(0), std::vector<int>{1, 4, 5});
    CHECK_EQ(g.num_edges(), 15);
    CHECK_THROWS_AS(g.degree(10), std::invalid_argument);
    Graph h(3);
    CHECK_THROWS_AS(h.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(h.add_edge(0, 3), std::invalid_argument);
}
