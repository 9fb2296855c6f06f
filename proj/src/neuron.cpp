#include "spikegraph/neuron.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spikegraph/error.hpp"

namespace spikegraph {

namespace {

void check_lambda(std::span<const double> lambda) {
    for (double v : lambda)
        if (!std::isfinite(v))
            throw InputError("encoding rate is not finite");
}

inline void encode_step(std::span<const double> lambda, RngStream& rng,
                        std::span<std::int8_t> out) {
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        double p = std::clamp(lambda[j], 0.0, 1.0);
        out[j] = rng.bernoulli(p) ? 1 : 0;
    }
}

} // namespace

SpikeTrain bernoulli_encode(std::span<const double> lambda,
                            std::size_t t_steps, RngStream& rng) {
    check_lambda(lambda);
    SpikeTrain train(t_steps, lambda.size());
    for (std::size_t t = 0; t < t_steps; ++t)
        encode_step(lambda, rng, train.step(t));
    return train;
}

void lif_charge(LifLayer& layer, std::span<const std::int8_t> input_spikes) {
    if (input_spikes.size() != layer.in_dim)
        throw DimensionError("charge: got " + std::to_string(input_spikes.size()) +
                             " input spikes for in_dim " +
                             std::to_string(layer.in_dim));
    const double k_m = layer.config.k_m();
    const double rest = (1.0 - k_m) * layer.config.v_reset;
    for (double& v : layer.membrane)
        v = k_m * v + rest;
    // Masked accumulation: only rows with a spike touch the membrane.
    for (std::size_t j = 0; j < layer.in_dim; ++j) {
        const std::int8_t o = input_spikes[j];
        if (o == 0)
            continue;
        const double* w = layer.weights.data() + j * layer.n_out;
        if (o == 1)
            for (std::size_t c = 0; c < layer.n_out; ++c)
                layer.membrane[c] += w[c];
        else
            for (std::size_t c = 0; c < layer.n_out; ++c)
                layer.membrane[c] -= w[c];
    }
}

std::vector<std::int8_t> fire(const LifLayer& layer) {
    std::vector<std::int8_t> out(layer.n_out, 0);
    const double hi = layer.config.v_th;
    const double lo = layer.config.lower_threshold();
    const bool ternary = layer.config.fire_mode == FireMode::ternary;
    for (std::size_t c = 0; c < layer.n_out; ++c) {
        if (layer.membrane[c] >= hi)
            out[c] = 1;
        else if (ternary && layer.membrane[c] <= lo)
            out[c] = -1;
    }
    return out;
}

void reset(LifLayer& layer, std::span<const std::int8_t> fired) {
    if (fired.size() != layer.n_out)
        throw DimensionError("reset: spike vector length mismatch");
    for (std::size_t c = 0; c < layer.n_out; ++c) {
        if (fired[c] == 1)
            layer.membrane[c] -= layer.config.v_th;
        else if (fired[c] == -1)
            layer.membrane[c] += layer.config.v_th / layer.config.theta;
    }
}

FiringRate forward(LifLayer& layer, std::span<const double> lambda,
                   std::size_t t_steps, RngStream& rng, ForwardTrace* trace) {
    if (lambda.size() != layer.in_dim)
        throw DimensionError("forward: lambda length " +
                             std::to_string(lambda.size()) + " != in_dim " +
                             std::to_string(layer.in_dim));
    if (t_steps == 0)
        throw InputError("forward: t_steps must be positive");
    check_lambda(lambda);

    layer.reset_membrane();
    if (trace) {
        trace->input = SpikeTrain(t_steps, layer.in_dim);
        trace->output = SpikeTrain(t_steps, layer.n_out);
        trace->membrane.assign(t_steps * layer.n_out, 0.0);
    }

    std::vector<std::int8_t> in_step(layer.in_dim, 0);
    std::vector<double> spike_sum(layer.n_out, 0.0);
    for (std::size_t t = 0; t < t_steps; ++t) {
        encode_step(lambda, rng, in_step);
        lif_charge(layer, in_step);
        std::vector<std::int8_t> fired = fire(layer);
        if (trace) {
            std::copy(in_step.begin(), in_step.end(), trace->input.step(t).begin());
            std::copy(fired.begin(), fired.end(), trace->output.step(t).begin());
            std::copy(layer.membrane.begin(), layer.membrane.end(),
                      trace->membrane.begin() + t * layer.n_out);
        }
        reset(layer, fired);
        for (std::size_t c = 0; c < layer.n_out; ++c)
            spike_sum[c] += fired[c];
    }

    FiringRate fr;
    fr.rates.resize(layer.n_out);
    for (std::size_t c = 0; c < layer.n_out; ++c)
        fr.rates[c] = spike_sum[c] / static_cast<double>(t_steps);
    return fr;
}

std::size_t predict(const FiringRate& fr) {
    if (fr.rates.empty())
        throw InputError("predict: empty rate vector");
    return static_cast<std::size_t>(
        std::max_element(fr.rates.begin(), fr.rates.end()) - fr.rates.begin());
}

} // namespace spikegraph
