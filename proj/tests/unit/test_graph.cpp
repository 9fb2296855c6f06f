#include <doctest.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "spikegraph/error.hpp"
#include "spikegraph/graph.hpp"
#include "spikegraph/rng.hpp"
#include "support/dense_oracle.hpp"

using namespace spikegraph;
namespace ts = testsupport;

namespace {

std::vector<Edge> random_edges(std::size_t n, double p, RngStream& rng) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p))
                edges.push_back({i, j});
    return edges;
}

ts::Dense to_dense(const SparseGraph& g) {
    ts::Dense d = ts::dense_zeros(g.n_nodes, g.n_nodes);
    for (std::size_t i = 0; i < g.n_nodes; ++i) {
        auto cols = g.row_cols(i);
        auto vals = g.row_vals(i);
        for (std::size_t e = 0; e < cols.size(); ++e)
            d[i][cols[e]] = vals[e];
    }
    return d;
}

FeatureMatrix random_features(std::size_t n, std::size_t d, RngStream& rng) {
    FeatureMatrix x(n, d);
    for (double& v : x.data)
        v = rng.next_double();
    return x;
}

ts::Dense to_dense(const FeatureMatrix& x) {
    ts::Dense d = ts::dense_zeros(x.n_rows, x.n_cols);
    for (std::size_t i = 0; i < x.n_rows; ++i)
        for (std::size_t j = 0; j < x.n_cols; ++j)
            d[i][j] = x.at(i, j);
    return d;
}

} // namespace

TEST_CASE("normalizing a single undirected edge gives the 0.5 matrix") {
    std::vector<Edge> edges{{0, 1}};
    SparseGraph s = normalize(build_graph(edges, 2));
    REQUIRE(s.nnz() == 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(to_dense(s)[i][j] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("normalized values are bitwise symmetric") {
    RngStream rng(101);
    auto edges = random_edges(40, 0.15, rng);
    SparseGraph s = normalize(build_graph(edges, 40));
    ts::Dense d = to_dense(s);
    for (std::size_t i = 0; i < 40; ++i)
        for (std::size_t j = 0; j < 40; ++j)
            CHECK(d[i][j] == d[j][i]); // exact, not approximate
}

TEST_CASE("normalize adds exactly one self-loop per node") {
    RngStream rng(102);
    auto edges = random_edges(30, 0.1, rng);
    SparseGraph s = normalize(build_graph(edges, 30));
    for (std::size_t i = 0; i < 30; ++i) {
        std::size_t diag = 0;
        for (std::size_t c : s.row_cols(i))
            if (c == i)
                ++diag;
        CHECK(diag == 1);
    }
}

TEST_CASE("an existing self-edge merges into the self-loop") {
    std::vector<Edge> edges{{0, 0}, {0, 1}};
    SparseGraph s = normalize(build_graph(edges, 2));
    // Node 0 degree: self-edge 1 + injected 1 + neighbor 1 = 3.
    ts::Dense d = to_dense(s);
    CHECK(d[0][0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(d[1][1] == doctest::Approx(1.0 / 2.0).epsilon(1e-15));
}

TEST_CASE("duplicate edges collapse to weight one") {
    std::vector<Edge> edges{{0, 1}, {1, 0}, {0, 1}};
    SparseGraph g = build_graph(edges, 2);
    CHECK(g.nnz() == 2);
    CHECK(g.values[0] == 1.0);
    CHECK(g.undirected_edge_count() == 1);
}

TEST_CASE("undirected edge counting") {
    std::vector<Edge> triangle{{0, 1}, {1, 2}, {2, 0}};
    CHECK(build_graph(triangle, 3).undirected_edge_count() == 3);
    std::vector<Edge> with_loop{{0, 0}, {0, 1}};
    CHECK(build_graph(with_loop, 2).undirected_edge_count() == 2);
}

TEST_CASE("isolated nodes survive as pure self-loops") {
    std::vector<Edge> edges{{0, 1}};
    SparseGraph s = normalize(build_graph(edges, 3));
    CHECK(to_dense(s)[2][2] == 1.0);
    FeatureMatrix x(3, 2);
    x.at(2, 0) = 4.0;
    auto h = propagate(s, x, 3);
    CHECK(h.data.at(2, 0) == 4.0);
}

TEST_CASE("out-of-range endpoints are rejected") {
    std::vector<Edge> edges{{0, 5}};
    CHECK_THROWS_AS(build_graph(edges, 3), InputError);
}

TEST_CASE("propagate with k = 0 returns the features unchanged") {
    RngStream rng(103);
    auto edges = random_edges(10, 0.3, rng);
    SparseGraph s = normalize(build_graph(edges, 10));
    FeatureMatrix x = random_features(10, 4, rng);
    auto h = propagate(s, x, 0);
    CHECK(h.k_used == 0);
    CHECK(h.data.data == x.data); // bitwise
}

TEST_CASE("propagate refuses unnormalized graphs and shape mismatches") {
    std::vector<Edge> edges{{0, 1}};
    SparseGraph raw = build_graph(edges, 2);
    FeatureMatrix x(2, 3);
    CHECK_THROWS_AS(propagate(raw, x, 1), InputError);
    SparseGraph s = normalize(raw);
    FeatureMatrix wrong(3, 3);
    CHECK_THROWS_AS(propagate(s, wrong, 1), DimensionError);
}

TEST_CASE("k-hop propagation composes") {
    RngStream rng(104);
    auto edges = random_edges(25, 0.2, rng);
    SparseGraph s = normalize(build_graph(edges, 25));
    FeatureMatrix x = random_features(25, 6, rng);

    auto h5 = propagate(s, x, 5);
    auto h2 = propagate(s, x, 2);
    auto h2then3 = propagate(s, h2.data, 3);
    double diff = ts::max_abs_diff(to_dense(h5.data), to_dense(h2then3.data));
    CHECK(diff <= 1e-12);
}

TEST_CASE("normalize matches the dense definition entrywise") {
    RngStream rng(105);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.next_below(49);
        auto edges = random_edges(n, 0.2, rng);
        ts::Dense want = ts::dense_normalize(ts::dense_adjacency(edges, n));
        ts::Dense got = to_dense(normalize(build_graph(edges, n)));
        CHECK(ts::max_abs_diff(want, got) <= 1e-12);
    }
}

TEST_CASE("multi-hop propagation matches the dense power oracle") {
    RngStream rng(106);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.next_below(49);
        std::size_t k = rng.next_below(4);
        auto edges = random_edges(n, 0.25, rng);
        SparseGraph s = normalize(build_graph(edges, n));
        FeatureMatrix x = random_features(n, 5, rng);

        ts::Dense want = ts::dense_power_apply(
            ts::dense_normalize(ts::dense_adjacency(edges, n)), to_dense(x), k);
        auto got = propagate(s, x, k);
        CHECK(ts::max_abs_diff(want, to_dense(got.data)) <= 1e-10);
    }
}

TEST_CASE("propagate_node reproduces one row of a single hop") {
    RngStream rng(107);
    auto edges = random_edges(15, 0.3, rng);
    SparseGraph s = normalize(build_graph(edges, 15));
    FeatureMatrix x = random_features(15, 4, rng);
    auto h1 = propagate(s, x, 1);
    for (std::size_t i = 0; i < 15; ++i) {
        auto row = propagate_node(s, x, i);
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(row[j] == doctest::Approx(h1.data.at(i, j)).epsilon(1e-14));
    }
}

TEST_CASE("weighted build keeps weights and rejects bad input") {
    std::vector<Edge> edges{{0, 1}, {1, 2}};
    std::vector<double> w{2.0, 0.5};
    SparseGraph g = build_graph(edges, w, 3);
    CHECK(to_dense(g)[0][1] == 2.0);
    CHECK(to_dense(g)[1][0] == 2.0);
    CHECK(to_dense(g)[1][2] == 0.5);

    std::vector<double> bad{-1.0, 0.5};
    CHECK_THROWS_AS(build_graph(edges, bad, 3), InputError);
    std::vector<double> short_w{1.0};
    CHECK_THROWS_AS(build_graph(edges, short_w, 3), DimensionError);
}
