#pragma once

// Small hand-built instances shared by unit and acceptance tests.

#include <cstddef>
#include <string>
#include <vector>

#include "spikegraph/dataset.hpp"
#include "spikegraph/graph.hpp"

namespace testsupport {

// Two disjoint cliques with orthogonal one-hot features: clique 0 nodes are
// (1,0) / label 0, clique 1 nodes are (0,1) / label 1. Inside a clique the
// normalized operator is row-stochastic, so propagation reproduces the
// one-hot rows (up to rounding) and the classes are linearly separable with
// deterministic spike trains.
inline spikegraph::Dataset two_clique_dataset(std::size_t per_clique = 10) {
    spikegraph::Dataset ds;
    const std::size_t n = 2 * per_clique;
    std::vector<spikegraph::Edge> edges;
    for (std::size_t base : {std::size_t{0}, per_clique})
        for (std::size_t i = 0; i < per_clique; ++i)
            for (std::size_t j = i + 1; j < per_clique; ++j)
                edges.push_back({base + i, base + j});
    ds.graph = spikegraph::build_graph(edges, n);
    ds.features = spikegraph::FeatureMatrix(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t cls = i < per_clique ? 0 : 1;
        ds.features.at(i, cls) = 1.0;
        ds.labels.push_back(cls);
        ds.node_ids.push_back("n" + std::to_string(i));
    }
    ds.class_names = {"left", "right"};
    ds.n_classes = 2;
    return ds;
}

// The same instance in the two-file citation text format, for tests that
// exercise the command line end to end.
inline std::string two_clique_content_text(std::size_t per_clique = 10) {
    std::string text;
    for (std::size_t i = 0; i < 2 * per_clique; ++i) {
        const bool left = i < per_clique;
        text += "n" + std::to_string(i) + "\t" + (left ? "1\t0" : "0\t1") +
                "\t" + (left ? "left" : "right") + "\n";
    }
    return text;
}

inline std::string two_clique_cites_text(std::size_t per_clique = 10) {
    std::string text;
    for (std::size_t base : {std::size_t{0}, per_clique})
        for (std::size_t i = 0; i < per_clique; ++i)
            for (std::size_t j = i + 1; j < per_clique; ++j)
                text += "n" + std::to_string(base + i) + "\tn" +
                        std::to_string(base + j) + "\n";
    return text;
}

} // namespace testsupport
