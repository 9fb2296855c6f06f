#include <doctest.h>

#include <cmath>
#include <vector>

#include "spikegraph/bounds.hpp"
#include "spikegraph/error.hpp"

using namespace spikegraph;

namespace {

// Binomial 3-sigma slack for an empirical frequency against a bound.
double sampling_slack(double bound, std::size_t trials) {
    return 3.0 * std::sqrt(bound * (1.0 - bound) / static_cast<double>(trials));
}

} // namespace

TEST_CASE("uniform 1/100 weights at rate one half") {
    std::vector<double> psi(100, 0.01), lambda(100, 0.5);
    BoundReport r = analyze(psi, lambda, 0.3);

    CHECK(r.expected == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.sigma == doctest::Approx(0.005).epsilon(1e-12));
    CHECK(r.sigma_prime == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(r.psi_hat == doctest::Approx(0.01).epsilon(1e-12));
    // exp(-0.09 / 0.02) = exp(-4.5)
    CHECK(r.lower_bound_prime == doctest::Approx(0.011109).epsilon(1e-4));
    CHECK(r.lower_bound == doctest::Approx(std::exp(-9.0)).epsilon(1e-10));
    CHECK(r.upper_bound_prime ==
          doctest::Approx(std::exp(-0.09 / (2.0 * (0.01 + 0.01 * 0.1)))));
    CHECK(r.failure_prob == r.upper_bound_prime);
    CHECK_FALSE(r.conservative_signed);
}

TEST_CASE("variance ordering and bound ordering") {
    std::vector<double> psi{0.4, -0.2, 0.1, 0.3};
    std::vector<double> lambda{0.3, 0.9, 0.5, 0.1};
    BoundReport r = analyze(psi, lambda, 0.2);

    CHECK(r.sigma <= r.sigma_prime);
    CHECK(r.lower_bound <= r.lower_bound_prime);
    CHECK(r.upper_bound <= r.upper_bound_prime);
    CHECK(r.conservative_signed);
    CHECK(r.psi_hat == 0.4);
    for (double b : {r.lower_bound, r.lower_bound_prime, r.upper_bound,
                     r.upper_bound_prime})
        CHECK((b > 0.0 && b <= 1.0));
}

TEST_CASE("large epsilon drives the bounds to zero") {
    std::vector<double> psi{0.5, 0.5}, lambda{0.5, 0.5};
    BoundReport r = analyze(psi, lambda, 1e6);
    CHECK(r.lower_bound == 0.0);
    CHECK(r.upper_bound_prime == 0.0);
}

TEST_CASE("deterministic Z reports zero tail mass") {
    std::vector<double> psi(10, 0.1), zeros(10, 0.0);
    BoundReport r = analyze(psi, zeros, 0.5);
    CHECK(r.expected == 0.0);
    CHECK(r.sigma == 0.0);
    CHECK(r.lower_bound == 0.0); // sigma = 0: no deviation possible

    RngStream rng(1, stream_tag::monte_carlo);
    auto [below, above] = empirical_tails(psi, zeros, 0.5, 2000, rng);
    CHECK(below == 0.0);
    CHECK(above == 0.0);

    std::vector<double> ones(10, 1.0);
    auto [b1, a1] = empirical_tails(psi, ones, 0.5, 2000, rng);
    CHECK(b1 == 0.0);
    CHECK(a1 == 0.0);
}

TEST_CASE("input validation") {
    std::vector<double> psi{0.1, 0.2}, lambda{0.5, 0.5};
    std::vector<double> bad_lambda{0.5, 1.5};
    std::vector<double> neg_lambda{0.5, -0.1};
    std::vector<double> short_lambda{0.5};
    RngStream rng(2);

    CHECK_THROWS_AS(analyze(psi, bad_lambda, 0.1), InputError);
    CHECK_THROWS_AS(analyze(psi, neg_lambda, 0.1), InputError);
    CHECK_THROWS_AS(analyze(psi, short_lambda, 0.1), DimensionError);
    CHECK_THROWS_AS(analyze(psi, lambda, 0.0), InputError);
    CHECK_THROWS_AS(analyze(psi, lambda, -1.0), InputError);
    CHECK_THROWS_AS(empirical_tails(psi, lambda, 0.1, 0, rng), InputError);
}

TEST_CASE("empirical tails respect the analytic bounds") {
    const std::size_t trials = 10000;
    RngStream gen(7, stream_tag::monte_carlo, 99);
    for (int instance = 0; instance < 25; ++instance) {
        const std::size_t d = 5 + gen.next_below(60);
        std::vector<double> psi(d), lambda(d);
        const bool signed_psi = instance % 3 == 0;
        for (std::size_t j = 0; j < d; ++j) {
            psi[j] = gen.next_range(signed_psi ? -0.2 : 0.0, 0.2);
            lambda[j] = gen.next_double();
        }
        const double epsilon = 0.05 + 0.5 * gen.next_double();

        BoundReport r = analyze(psi, lambda, epsilon);
        RngStream mc(7, stream_tag::monte_carlo, 100 + instance);
        auto [below, above] = empirical_tails(psi, lambda, epsilon, trials, mc);

        CHECK(below <= r.lower_bound + sampling_slack(r.lower_bound, trials));
        CHECK(below <= r.lower_bound_prime +
                           sampling_slack(r.lower_bound_prime, trials));
        CHECK(above <= r.upper_bound + sampling_slack(r.upper_bound, trials));
        CHECK(above <= r.upper_bound_prime +
                           sampling_slack(r.upper_bound_prime, trials));
    }
}

TEST_CASE("model audit pairs weight columns with clamped rates") {
    NeuronConfig cfg;
    LifLayer layer(3, 2, cfg);
    layer.weight(0, 0) = 0.5;
    layer.weight(1, 0) = 0.5;
    layer.weight(2, 0) = 0.5;
    // class 1 column stays all zero

    PropagatedFeatures h;
    h.data = FeatureMatrix(2, 3);
    h.data.at(1, 0) = 0.5;
    h.data.at(1, 1) = 1.7;  // clamps to 1
    h.data.at(1, 2) = -0.3; // clamps to 0

    auto reports = audit_model(layer, h, 1, 0.25);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].expected == doctest::Approx(0.5 * 0.5 + 0.5 * 1.0));
    CHECK(reports[0].sigma == doctest::Approx(0.25 * 0.5 + 0.25 * 1.0));
    CHECK(reports[0].sigma_prime == doctest::Approx(0.75));

    // The zero column cannot deviate: tails are reported as zero mass.
    CHECK(reports[1].expected == 0.0);
    CHECK(reports[1].failure_prob == 0.0);

    CHECK_THROWS_AS(audit_model(layer, h, 2, 0.25), InputError);
}

TEST_CASE("tightening the weight range tightens the rate-free bound") {
    std::vector<double> lambda(50, 0.5);
    double previous = 1.0;
    for (double clip : {0.5, 0.25, 0.1, 0.05}) {
        std::vector<double> psi(50, clip);
        BoundReport r = analyze(psi, lambda, 0.3);
        CHECK(r.upper_bound_prime < previous);
        previous = r.upper_bound_prime;
    }
}
