#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace spikegraph {

// Dense row-major real matrix. Used for node features and for the
// propagated feature matrix; rows are nodes.
struct FeatureMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<double> data; // n_rows * n_cols, row-major

    FeatureMatrix() = default;
    FeatureMatrix(std::size_t rows, std::size_t cols)
        : n_rows(rows), n_cols(cols), data(rows * cols, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * n_cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * n_cols + j]; }

    std::span<double> row(std::size_t i) {
        return {data.data() + i * n_cols, n_cols};
    }
    std::span<const double> row(std::size_t i) const {
        return {data.data() + i * n_cols, n_cols};
    }
};

// Undirected weighted graph in compressed sparse row form. Both (i,j) and
// (j,i) are stored, column indices sorted inside each row. `normalized`
// records whether the values are the output of normalize(); propagation
// refuses to run on a graph that is not.
struct SparseGraph {
    std::size_t n_nodes = 0;
    std::vector<std::size_t> row_offsets; // n_nodes + 1
    std::vector<std::size_t> col_indices; // nnz
    std::vector<double> values;           // nnz
    bool normalized = false;

    std::size_t nnz() const { return col_indices.size(); }

    std::span<const std::size_t> row_cols(std::size_t i) const {
        return {col_indices.data() + row_offsets[i],
                row_offsets[i + 1] - row_offsets[i]};
    }
    std::span<const double> row_vals(std::size_t i) const {
        return {values.data() + row_offsets[i],
                row_offsets[i + 1] - row_offsets[i]};
    }

    // Number of undirected edges: one per stored off-diagonal pair, one per
    // self-loop. Matches how citation datasets quote their edge counts.
    std::size_t undirected_edge_count() const;
};

struct PropagatedFeatures {
    FeatureMatrix data;     // n_nodes x feature_dim
    std::size_t k_used = 0; // number of propagation hops applied
};

using Edge = std::pair<std::size_t, std::size_t>;

// Build a symmetric CSR graph from an edge list. Duplicate edges (in either
// orientation) collapse to a single entry of weight 1.0; self-edges are kept
// as one diagonal entry. Endpoints must be < n_nodes.
SparseGraph build_graph(std::span<const Edge> edges, std::size_t n_nodes);

// Weighted variant. The first weight seen for an undirected pair wins;
// weights must be non-negative.
SparseGraph build_graph(std::span<const Edge> edges,
                        std::span<const double> weights, std::size_t n_nodes);

// Symmetric degree normalization with self-loops: adds 1.0 to each diagonal,
// then rescales entry (i,j) to a_ij / sqrt(d_i * d_j) where d_i is the row
// sum after the self-loop. Every row gains exactly one diagonal entry, so
// the degrees are strictly positive and no division can blow up. The input
// must be structurally symmetric with non-negative weights.
SparseGraph normalize(const SparseGraph& g);

// K applications of the normalized operator to a dense feature matrix:
// H = S^k X. k = 0 returns X unchanged. Each output row is accumulated by a
// single thread in index order, so results do not depend on thread count.
PropagatedFeatures propagate(const SparseGraph& s, const FeatureMatrix& x,
                             std::size_t k);

// One application of S restricted to a single output row. Useful for spot
// checks; propagate() does not call it.
std::vector<double> propagate_node(const SparseGraph& s,
                                   const FeatureMatrix& x, std::size_t node);

} // namespace spikegraph
