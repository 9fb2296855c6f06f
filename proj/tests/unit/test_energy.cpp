#include <doctest.h>

#include <utility>
#include <vector>

#include "spikegraph/energy.hpp"
#include "spikegraph/error.hpp"

using namespace spikegraph;

namespace {

PropagatedFeatures single_row(std::vector<double> lambda) {
    PropagatedFeatures h;
    h.data.n_rows = 1;
    h.data.n_cols = lambda.size();
    h.data.data = std::move(lambda);
    return h;
}

} // namespace

TEST_CASE("silent input produces zero counts") {
    LifLayer layer(4, 3);
    layer.weight(0, 0) = 1.0;
    auto h = single_row({0.0, 0.0, 0.0, 0.0});
    std::vector<std::size_t> nodes{0};
    OpCounter c = count_inference(layer, h, nodes, 25, 3);
    CHECK(c.spikes == 0);
    CHECK(c.sops == 0);
    CHECK(c.macs == 0);
    CHECK(c.nodes_evaluated == 1);
}

TEST_CASE("one input spike per step updates every membrane") {
    // lambda = 1 on a single feature, weights too small to ever fire:
    // each of the T steps costs C membrane updates and one input spike.
    NeuronConfig cfg;
    LifLayer layer(2, 3, cfg);
    layer.weight(0, 0) = 0.01;
    auto h = single_row({1.0, 0.0});
    std::vector<std::size_t> nodes{0};
    const std::size_t t_steps = 7;
    OpCounter c = count_inference(layer, h, nodes, t_steps, 3);
    CHECK(c.spikes == t_steps);
    CHECK(c.sops == t_steps * 3);
}

TEST_CASE("fires add one SOP and one spike each") {
    // Certain input through weight 2 fires every step: per step one input
    // spike + one output spike, one membrane update + one reset.
    NeuronConfig cfg;
    LifLayer layer(1, 1, cfg);
    layer.weight(0, 0) = 2.0;
    auto h = single_row({1.0});
    std::vector<std::size_t> nodes{0};
    OpCounter c = count_inference(layer, h, nodes, 5, 3);
    CHECK(c.spikes == 10);
    CHECK(c.sops == 10);
}

TEST_CASE("counting is seed-deterministic") {
    NeuronConfig cfg;
    LifLayer layer(3, 2, cfg);
    layer.weight(0, 0) = 0.8;
    layer.weight(1, 1) = 0.6;
    layer.weight(2, 0) = 0.4;
    PropagatedFeatures h;
    h.data = FeatureMatrix(4, 3);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            h.data.at(i, j) = 0.1 + 0.2 * static_cast<double>((i + j) % 4);
    std::vector<std::size_t> nodes{0, 1, 2, 3};

    OpCounter a = count_inference(layer, h, nodes, 50, 11);
    OpCounter b = count_inference(layer, h, nodes, 50, 11);
    CHECK(a.spikes == b.spikes);
    CHECK(a.sops == b.sops);
    OpCounter other = count_inference(layer, h, nodes, 50, 12);
    CHECK(a.spikes != other.spikes);

    // Structural ceiling: every step can cost at most C charge updates,
    // plus one SOP per emitted spike.
    CHECK(a.sops <= 50 * 2 * nodes.size() + a.spikes);
}

TEST_CASE("halving the rates cannot increase expected spike traffic") {
    NeuronConfig cfg;
    LifLayer layer(5, 3, cfg);
    for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t c = 0; c < 3; ++c)
            layer.weight(j, c) = (j + c) % 2 == 0 ? 0.7 : -0.4;

    PropagatedFeatures full;
    full.data = FeatureMatrix(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            full.data.at(i, j) = 0.15 * static_cast<double>(j % 4);
    PropagatedFeatures half = full;
    for (double& v : half.data.data)
        v *= 0.5;

    std::vector<std::size_t> nodes{0, 1, 2};
    std::uint64_t spikes_full = 0, spikes_half = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        spikes_full += count_inference(layer, full, nodes, 40, seed).spikes;
        spikes_half += count_inference(layer, half, nodes, 40, seed).spikes;
    }
    CHECK(spikes_half <= spikes_full);
}

TEST_CASE("dense reference MAC counts match the known models") {
    CHECK(count_dense_reference(1433, 7) == 10031); // 10.03K
    CHECK(count_dense_reference(500, 3) == 1500);   // 1.50K
    CHECK(count_dense_reference(3703, 6) == 22218); // 22.22K

    std::vector<std::pair<std::size_t, std::size_t>> none;
    CHECK(count_dense_reference(none) == 0);
    std::vector<std::pair<std::size_t, std::size_t>> two{{1433, 16}, {16, 7}};
    CHECK(count_dense_reference(two) == 1433 * 16 + 16 * 7);
    CHECK_THROWS_AS(count_dense_reference(0, 7), InputError);
}

TEST_CASE("joule figures for the reference platforms") {
    PlatformSpec neuro;
    neuro.kind = PlatformKind::neuromorphic;
    EnergyReport spikes = estimate_energy(neuro, 27'300'000);
    CHECK(spikes.joules == doctest::Approx(1.0101e-4).epsilon(1e-9));
    CHECK(format_scientific(spikes.joules) == "1.01E-04");

    PlatformSpec gpu;
    gpu.kind = PlatformKind::gpu;
    EnergyReport flops = estimate_energy(gpu, 4'140'000'000);
    CHECK(flops.joules == doctest::Approx(0.0711).epsilon(5e-3));
    CHECK(flops.joules ==
          doctest::Approx(4.14e9 / (16310.0 * 1e9) * 280.0).epsilon(1e-12));
    CHECK(format_scientific(flops.joules) == "7.11E-02");

    CHECK(estimate_energy(gpu, 0).joules == 0.0);
}

TEST_CASE("energy is exactly linear in events") {
    PlatformSpec gpu;
    PlatformSpec neuro;
    neuro.kind = PlatformKind::neuromorphic;
    for (std::uint64_t n : {1ULL, 12345ULL, 99999999ULL}) {
        CHECK(estimate_energy(gpu, 2 * n).joules ==
              2.0 * estimate_energy(gpu, n).joules);
        CHECK(estimate_energy(neuro, 2 * n).joules ==
              2.0 * estimate_energy(neuro, n).joules);
    }
}

TEST_CASE("physical quantities must be positive") {
    PlatformSpec gpu;
    gpu.gpu.gflops = 0.0;
    CHECK_THROWS_AS(estimate_energy(gpu, 100), InputError);
    gpu.gpu.gflops = 16310.0;
    gpu.gpu.power_watts = -1.0;
    CHECK_THROWS_AS(estimate_energy(gpu, 100), InputError);

    PlatformSpec neuro;
    neuro.kind = PlatformKind::neuromorphic;
    neuro.neuromorphic.energy_per_spike_pj = 0.0;
    CHECK_THROWS_AS(estimate_energy(neuro, 100), InputError);
}
