#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spikegraph/graph.hpp"
#include "spikegraph/neuron.hpp"

namespace spikegraph {

// Operation tallies for a batch of spiking inferences.
//
// SOP convention: one synaptic operation per membrane-potential change,
// which means one per output neuron on any step where at least one input
// spike arrives (the charge touches every membrane), plus one per emitted
// spike (the reset). Steps that only leak are free; an idle network costs
// nothing. MACs stay zero for the spiking path; they exist so the same
// counter type can describe the dense reference.
struct OpCounter {
    std::uint64_t macs = 0;
    std::uint64_t sops = 0;
    std::uint64_t spikes = 0; // nonzero input and output spikes
    std::uint64_t nodes_evaluated = 0;
};

enum class PlatformKind { gpu, neuromorphic };

struct GpuSpec {
    double power_watts = 280.0;
    double gflops = 16310.0;
};

struct NeuromorphicSpec {
    double energy_per_spike_pj = 3.7;
    double supply_volts = 1.8; // reported for context, not used in joules
};

struct PlatformSpec {
    PlatformKind kind = PlatformKind::gpu;
    GpuSpec gpu;
    NeuromorphicSpec neuromorphic;
};

struct EnergyReport {
    PlatformSpec platform;
    std::uint64_t total_events = 0; // FLOPs for gpu, spikes for neuromorphic
    double joules = 0.0;
};

// Replays evaluation forward passes (same per-node streams as evaluate()
// with this seed) and tallies spike and SOP counts.
OpCounter count_inference(LifLayer& layer, const PropagatedFeatures& h,
                          std::span<const std::size_t> nodes,
                          std::size_t t_steps, std::uint64_t seed);

// MACs per node for a dense feed-forward reference: sum of in*out over the
// layers. The two-argument form is the single-linear-layer case.
std::uint64_t
count_dense_reference(std::span<const std::pair<std::size_t, std::size_t>> layers);
std::uint64_t count_dense_reference(std::size_t d, std::size_t c);

// gpu: joules = events / (gflops * 1e9) * power_watts
// neuromorphic: joules = events * energy_per_spike_pj * 1e-12
EnergyReport estimate_energy(const PlatformSpec& spec, std::uint64_t events);

// "1.01E-04" style rendering, three significant digits.
std::string format_scientific(double value);

} // namespace spikegraph
