#include "spikegraph/energy.hpp"

#include <cstdio>

#include "spikegraph/error.hpp"

namespace spikegraph {

OpCounter count_inference(LifLayer& layer, const PropagatedFeatures& h,
                          std::span<const std::size_t> nodes,
                          std::size_t t_steps, std::uint64_t seed) {
    if (h.data.n_cols != layer.in_dim)
        throw DimensionError("count_inference: feature dim does not match layer");

    OpCounter counter;
    for (std::size_t node : nodes) {
        if (node >= h.data.n_rows)
            throw InputError("count_inference: node index out of range");
        RngStream rng(seed, stream_tag::encode_eval, 0, node);
        ForwardTrace trace;
        forward(layer, h.data.row(node), t_steps, rng, &trace);

        for (std::size_t t = 0; t < t_steps; ++t) {
            std::uint64_t in_events = 0;
            for (std::int8_t s : trace.input.step(t))
                if (s != 0)
                    ++in_events;
            std::uint64_t out_events = 0;
            for (std::int8_t s : trace.output.step(t))
                if (s != 0)
                    ++out_events;

            counter.spikes += in_events + out_events;
            if (in_events > 0)
                counter.sops += layer.n_out; // charge touched every membrane
            counter.sops += out_events;      // one reset per emitted spike
        }
        ++counter.nodes_evaluated;
    }
    return counter;
}

std::uint64_t count_dense_reference(
    std::span<const std::pair<std::size_t, std::size_t>> layers) {
    std::uint64_t macs = 0;
    for (const auto& [in, out] : layers) {
        if (in == 0 || out == 0)
            throw InputError("count_dense_reference: layer dims must be positive");
        macs += static_cast<std::uint64_t>(in) * out;
    }
    return macs;
}

std::uint64_t count_dense_reference(std::size_t d, std::size_t c) {
    const std::pair<std::size_t, std::size_t> single{d, c};
    return count_dense_reference({&single, 1});
}

EnergyReport estimate_energy(const PlatformSpec& spec, std::uint64_t events) {
    EnergyReport report;
    report.platform = spec;
    report.total_events = events;
    if (spec.kind == PlatformKind::gpu) {
        if (!(spec.gpu.gflops > 0.0))
            throw InputError("estimate_energy: gflops must be positive");
        if (!(spec.gpu.power_watts > 0.0))
            throw InputError("estimate_energy: power_watts must be positive");
        report.joules = static_cast<double>(events) /
                        (spec.gpu.gflops * 1e9) * spec.gpu.power_watts;
    } else {
        if (!(spec.neuromorphic.energy_per_spike_pj > 0.0))
            throw InputError("estimate_energy: energy per spike must be positive");
        report.joules = static_cast<double>(events) *
                        spec.neuromorphic.energy_per_spike_pj * 1e-12;
    }
    return report;
}

std::string format_scientific(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2E", value);
    return buf;
}

} // namespace spikegraph
