#include "spikegraph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spikegraph/error.hpp"

namespace spikegraph {

namespace {

void check_inputs(std::span<const double> psi, std::span<const double> lambda,
                  double epsilon) {
    if (psi.size() != lambda.size())
        throw DimensionError("bounds: psi and lambda lengths differ");
    for (double l : lambda)
        if (!(l >= 0.0 && l <= 1.0))
            throw InputError("bounds: lambda value " + std::to_string(l) +
                             " outside [0,1]");
    if (!(epsilon > 0.0))
        throw InputError("bounds: epsilon must be positive");
}

double tail(double epsilon, double denom) {
    if (denom == 0.0)
        return 0.0; // Z is deterministic, no deviation possible
    return std::exp(-epsilon * epsilon / denom);
}

} // namespace

BoundReport analyze(std::span<const double> psi,
                    std::span<const double> lambda, double epsilon) {
    check_inputs(psi, lambda, epsilon);

    BoundReport r;
    r.epsilon = epsilon;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const double w = psi[j];
        if (w < 0.0)
            r.conservative_signed = true;
        r.expected += w * lambda[j];
        r.sigma += w * w * lambda[j];
        r.sigma_prime += w * w;
        r.psi_hat = std::max(r.psi_hat, std::fabs(w));
    }

    r.lower_bound = tail(epsilon, 2.0 * r.sigma);
    r.lower_bound_prime = tail(epsilon, 2.0 * r.sigma_prime);
    const double bern = 2.0 * (r.sigma + r.psi_hat * epsilon / 3.0);
    const double bern_prime = 2.0 * (r.sigma_prime + r.psi_hat * epsilon / 3.0);
    r.upper_bound = tail(epsilon, bern);
    r.upper_bound_prime = tail(epsilon, bern_prime);
    r.failure_prob = r.upper_bound_prime;
    return r;
}

std::pair<double, double> empirical_tails(std::span<const double> psi,
                                          std::span<const double> lambda,
                                          double epsilon, std::size_t trials,
                                          RngStream& rng) {
    check_inputs(psi, lambda, epsilon);
    if (trials == 0)
        throw InputError("bounds: trials must be positive");

    double expected = 0.0;
    for (std::size_t j = 0; j < psi.size(); ++j)
        expected += psi[j] * lambda[j];

    std::size_t below = 0, above = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        double z = 0.0;
        for (std::size_t j = 0; j < psi.size(); ++j)
            if (rng.bernoulli(lambda[j]))
                z += psi[j];
        if (z < expected - epsilon)
            ++below;
        if (z > expected + epsilon)
            ++above;
    }
    const double n = static_cast<double>(trials);
    return {static_cast<double>(below) / n, static_cast<double>(above) / n};
}

std::vector<BoundReport> audit_model(const LifLayer& layer,
                                     const PropagatedFeatures& h,
                                     std::size_t node, double epsilon) {
    if (node >= h.data.n_rows)
        throw InputError("audit_model: node " + std::to_string(node) +
                         " out of range");
    if (h.data.n_cols != layer.in_dim)
        throw DimensionError("audit_model: feature dim does not match layer");

    std::vector<double> lambda(layer.in_dim);
    auto row = h.data.row(node);
    for (std::size_t j = 0; j < layer.in_dim; ++j)
        lambda[j] = std::clamp(row[j], 0.0, 1.0);

    std::vector<BoundReport> reports;
    reports.reserve(layer.n_out);
    std::vector<double> column(layer.in_dim);
    for (std::size_t c = 0; c < layer.n_out; ++c) {
        for (std::size_t j = 0; j < layer.in_dim; ++j)
            column[j] = layer.weight(j, c);
        reports.push_back(analyze(column, lambda, epsilon));
    }
    return reports;
}

} // namespace spikegraph
