#include "spikegraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spikegraph/error.hpp"

namespace spikegraph {

namespace {

struct WeightedEdge {
    std::size_t row;
    std::size_t col;
    double value;
};

// Shared CSR assembly: symmetrize, sort, collapse duplicates (first wins).
SparseGraph assemble(std::vector<WeightedEdge>&& entries, std::size_t n_nodes) {
    std::vector<WeightedEdge> sym;
    sym.reserve(entries.size() * 2);
    for (const auto& e : entries) {
        sym.push_back(e);
        if (e.row != e.col)
            sym.push_back({e.col, e.row, e.value});
    }
    std::stable_sort(sym.begin(), sym.end(),
                     [](const WeightedEdge& a, const WeightedEdge& b) {
                         if (a.row != b.row) return a.row < b.row;
                         return a.col < b.col;
                     });

    SparseGraph g;
    g.n_nodes = n_nodes;
    g.row_offsets.assign(n_nodes + 1, 0);
    std::size_t prev_row = n_nodes, prev_col = n_nodes;
    for (const auto& e : sym) {
        if (e.row == prev_row && e.col == prev_col)
            continue; // duplicate, first occurrence wins
        g.col_indices.push_back(e.col);
        g.values.push_back(e.value);
        ++g.row_offsets[e.row + 1];
        prev_row = e.row;
        prev_col = e.col;
    }
    for (std::size_t i = 0; i < n_nodes; ++i)
        g.row_offsets[i + 1] += g.row_offsets[i];
    return g;
}

void check_endpoints(std::span<const Edge> edges, std::size_t n_nodes) {
    for (const auto& [u, v] : edges) {
        if (u >= n_nodes || v >= n_nodes)
            throw InputError("edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") references a node outside 0.." +
                             std::to_string(n_nodes == 0 ? 0 : n_nodes - 1));
    }
}

} // namespace

std::size_t SparseGraph::undirected_edge_count() const {
    std::size_t diag = 0;
    for (std::size_t i = 0; i < n_nodes; ++i)
        for (std::size_t c : row_cols(i))
            if (c == i)
                ++diag;
    return (nnz() - diag) / 2 + diag;
}

SparseGraph build_graph(std::span<const Edge> edges, std::size_t n_nodes) {
    check_endpoints(edges, n_nodes);
    std::vector<WeightedEdge> entries;
    entries.reserve(edges.size());
    for (const auto& [u, v] : edges)
        entries.push_back({u, v, 1.0});
    return assemble(std::move(entries), n_nodes);
}

SparseGraph build_graph(std::span<const Edge> edges,
                        std::span<const double> weights, std::size_t n_nodes) {
    if (edges.size() != weights.size())
        throw DimensionError("edge list and weight list differ in length");
    check_endpoints(edges, n_nodes);
    std::vector<WeightedEdge> entries;
    entries.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!(weights[i] >= 0.0))
            throw InputError("edge weight " + std::to_string(weights[i]) +
                             " is negative or NaN");
        entries.push_back({edges[i].first, edges[i].second, weights[i]});
    }
    return assemble(std::move(entries), n_nodes);
}

SparseGraph normalize(const SparseGraph& g) {
    for (double v : g.values)
        if (!(v >= 0.0))
            throw InputError("normalize() requires non-negative edge weights");

    const std::size_t n = g.n_nodes;
    SparseGraph out;
    out.n_nodes = n;
    out.row_offsets.assign(n + 1, 0);
    out.col_indices.reserve(g.nnz() + n);
    out.values.reserve(g.nnz() + n);

    // Degrees of A + I: row sums including the injected unit self-loop.
    std::vector<double> degree(n, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (double v : g.row_vals(i))
            degree[i] += v;

    for (std::size_t i = 0; i < n; ++i) {
        auto cols = g.row_cols(i);
        auto vals = g.row_vals(i);
        bool placed_diag = false;
        // Entry (i,j) becomes a / sqrt(d_i * d_j). The product d_i * d_j is
        // commutative and sqrt is taken once, so the mirrored entry (j,i)
        // runs the exact same float operations and lands on the same bits.
        auto emit = [&](std::size_t col, double a) {
            out.col_indices.push_back(col);
            out.values.push_back(a / std::sqrt(degree[i] * degree[col]));
        };
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (!placed_diag && cols[k] >= i) {
                double raw = cols[k] == i ? vals[k] + 1.0 : 1.0;
                emit(i, raw);
                placed_diag = true;
                if (cols[k] == i)
                    continue;
            }
            emit(cols[k], vals[k]);
        }
        if (!placed_diag)
            emit(i, 1.0);
        out.row_offsets[i + 1] = out.col_indices.size();
    }
    out.normalized = true;
    return out;
}

PropagatedFeatures propagate(const SparseGraph& s, const FeatureMatrix& x,
                             std::size_t k) {
    if (!s.normalized)
        throw InputError("propagate() requires a normalized graph");
    if (s.n_nodes != x.n_rows)
        throw DimensionError("graph has " + std::to_string(s.n_nodes) +
                             " nodes but feature matrix has " +
                             std::to_string(x.n_rows) + " rows");

    PropagatedFeatures result;
    result.data = x;
    result.k_used = k;
    if (k == 0)
        return result;

    const std::size_t d = x.n_cols;
    FeatureMatrix next(s.n_nodes, d);
    for (std::size_t hop = 0; hop < k; ++hop) {
        for (std::size_t i = 0; i < s.n_nodes; ++i) {
            auto cols = s.row_cols(i);
            auto vals = s.row_vals(i);
            double* out = next.data.data() + i * d;
            std::fill(out, out + d, 0.0);
            for (std::size_t e = 0; e < cols.size(); ++e) {
                const double w = vals[e];
                const double* src = result.data.data.data() + cols[e] * d;
                for (std::size_t j = 0; j < d; ++j)
                    out[j] += w * src[j];
            }
        }
        std::swap(result.data.data, next.data);
    }
    return result;
}

std::vector<double> propagate_node(const SparseGraph& s,
                                   const FeatureMatrix& x, std::size_t node) {
    if (!s.normalized)
        throw InputError("propagate_node() requires a normalized graph");
    if (s.n_nodes != x.n_rows)
        throw DimensionError("graph/feature row mismatch");
    if (node >= s.n_nodes)
        throw InputError("node index " + std::to_string(node) + " out of range");

    std::vector<double> out(x.n_cols, 0.0);
    auto cols = s.row_cols(node);
    auto vals = s.row_vals(node);
    for (std::size_t e = 0; e < cols.size(); ++e) {
        const double w = vals[e];
        auto src = x.row(cols[e]);
        for (std::size_t j = 0; j < x.n_cols; ++j)
            out[j] += w * src[j];
    }
    return out;
}

} // namespace spikegraph
