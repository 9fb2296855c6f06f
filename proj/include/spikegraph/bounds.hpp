#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "spikegraph/graph.hpp"
#include "spikegraph/neuron.hpp"
#include "spikegraph/rng.hpp"

namespace spikegraph {

// Concentration analysis for the one-step spike sum Z = sum_j psi_j o_j with
// o_j ~ Bernoulli(lambda_j), against its mean E(Z) = sum_j psi_j lambda_j.
//
// Two variance proxies appear: sigma = sum psi_j^2 lambda_j (distribution
// aware, tighter) and sigma_prime = sum psi_j^2 (rate free; under weight
// clipping it is bounded by d * clip^2, which is what makes the analysis
// usable before seeing any data). Each tail is reported with both.
struct BoundReport {
    double expected = 0.0;
    double sigma = 0.0;
    double sigma_prime = 0.0;
    double psi_hat = 0.0; // max |psi_j|
    double epsilon = 0.0;

    // Pr(Z < E - eps) <= exp(-eps^2 / (2 sigma)), and the sigma_prime form.
    double lower_bound = 0.0;
    double lower_bound_prime = 0.0;
    // Pr(Z > E + eps) <= exp(-eps^2 / (2 (sigma + psi_hat eps / 3))).
    double upper_bound = 0.0;
    double upper_bound_prime = 0.0;
    // Headline failure probability: the sigma_prime upper form, the variant
    // a clip bound controls without knowing the rates.
    double failure_prob = 0.0;

    // Trained weights carry signs; the inequalities are stated for
    // non-negative coefficients, so sigma/sigma_prime/psi_hat fall back to
    // magnitudes and the report is flagged as conservative.
    bool conservative_signed = false;
};

// Computes every BoundReport field. A variance term of exactly zero means Z
// cannot deviate at all, so the corresponding bound is reported as 0.
// Lambdas must lie in [0, 1]; epsilon must be positive.
BoundReport analyze(std::span<const double> psi,
                    std::span<const double> lambda, double epsilon);

// Monte Carlo check of the same tails: draws `trials` independent spike
// vectors, returns the observed frequencies of Z < E - eps and Z > E + eps.
std::pair<double, double> empirical_tails(std::span<const double> psi,
                                          std::span<const double> lambda,
                                          double epsilon, std::size_t trials,
                                          RngStream& rng);

// Runs analyze once per output class of the layer, pairing the class's
// weight column with the node's propagated features clamped into [0, 1]
// (exactly what the encoder sees).
std::vector<BoundReport> audit_model(const LifLayer& layer,
                                     const PropagatedFeatures& h,
                                     std::size_t node, double epsilon);

} // namespace spikegraph
