#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spikegraph/rng.hpp"

namespace spikegraph {

enum class FireMode {
    binary,  // spikes in {0, 1}
    ternary, // spikes in {-1, 0, 1}, negative threshold at -v_th / theta
};

// Leaky integrate-and-fire parameters. The membrane decays by
// k_m = 1 - 1/tau_m per step; a neuron fires when it reaches v_th and then
// subtracts the crossed threshold from its membrane (soft reset). In ternary
// mode a second threshold at -v_th/theta emits -1 spikes, and the reset adds
// v_th/theta back. v_reset shifts the resting level; at the default 0 the
// leak pulls the membrane toward zero.
struct NeuronConfig {
    double tau_m = 2.0;
    double v_th = 1.0;
    double v_reset = 0.0;
    double theta = 2.0;
    double alpha = 2.0; // surrogate-gradient sharpness, used by training
    FireMode fire_mode = FireMode::binary;

    double k_m() const { return 1.0 - 1.0 / tau_m; }
    double lower_threshold() const { return -v_th / theta; }
};

// Spike values for `dim` units over `t_steps` steps, stored step-major.
struct SpikeTrain {
    std::size_t t_steps = 0;
    std::size_t dim = 0;
    std::vector<std::int8_t> spikes; // t_steps * dim

    SpikeTrain() = default;
    SpikeTrain(std::size_t t, std::size_t d)
        : t_steps(t), dim(d), spikes(t * d, 0) {}

    std::int8_t at(std::size_t t, std::size_t j) const {
        return spikes[t * dim + j];
    }
    std::span<const std::int8_t> step(std::size_t t) const {
        return {spikes.data() + t * dim, dim};
    }
    std::span<std::int8_t> step(std::size_t t) {
        return {spikes.data() + t * dim, dim};
    }
};

struct FiringRate {
    std::vector<double> rates; // one per output neuron; ternary can be < 0
};

// One fully connected layer of LIF neurons: in_dim inputs, n_out neurons,
// weights row-major [input j][neuron c]. `membrane` is the mutable state
// advanced by lif_charge/reset.
struct LifLayer {
    std::size_t in_dim = 0;
    std::size_t n_out = 0;
    std::vector<double> weights; // in_dim * n_out
    NeuronConfig config;
    std::vector<double> membrane; // n_out

    LifLayer() = default;
    LifLayer(std::size_t in, std::size_t out, NeuronConfig cfg = {})
        : in_dim(in), n_out(out), weights(in * out, 0.0), config(cfg),
          membrane(out, 0.0) {}

    double weight(std::size_t j, std::size_t c) const {
        return weights[j * n_out + c];
    }
    double& weight(std::size_t j, std::size_t c) {
        return weights[j * n_out + c];
    }

    void reset_membrane() { membrane.assign(n_out, 0.0); }
};

// Draws a spike train whose entries are independent Bernoulli with
// per-feature rate lambda clamped into [0, 1]. Values must be finite.
// Clamped rate 1 fires every step, rate 0 never fires.
SpikeTrain bernoulli_encode(std::span<const double> lambda,
                            std::size_t t_steps, RngStream& rng);

// One integration step: membrane <- k_m * membrane + (1-k_m) * v_reset,
// plus the weighted input spikes. Zero spikes contribute nothing and cost
// nothing; -1 spikes subtract the weight.
void lif_charge(LifLayer& layer, std::span<const std::int8_t> input_spikes);

// Threshold comparison on the current membrane, inclusive on both sides.
// Does not modify state.
std::vector<std::int8_t> fire(const LifLayer& layer);

// Soft reset for the neurons that fired: subtract v_th after a +1 spike,
// add v_th/theta after a -1 spike.
void reset(LifLayer& layer, std::span<const std::int8_t> fired);

// Optional forward() capture for training and tracing: everything the
// backward pass needs to replay the run.
struct ForwardTrace {
    SpikeTrain input;            // encoded spikes, t_steps x in_dim
    SpikeTrain output;           // emitted spikes, t_steps x n_out
    std::vector<double> membrane; // t_steps * n_out, after charge, before reset
};

// Runs encode/charge/fire/reset for t_steps from a fresh membrane and
// returns per-neuron average spike counts (sum of emitted spikes / t_steps).
// Consumes exactly t_steps * in_dim draws from `rng` in step-major order,
// the same order bernoulli_encode uses.
FiringRate forward(LifLayer& layer, std::span<const double> lambda,
                   std::size_t t_steps, RngStream& rng,
                   ForwardTrace* trace = nullptr);

// Index of the largest rate; ties go to the lowest index.
std::size_t predict(const FiringRate& fr);

} // namespace spikegraph
