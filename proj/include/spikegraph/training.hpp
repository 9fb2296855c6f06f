#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "spikegraph/dataset.hpp"
#include "spikegraph/graph.hpp"
#include "spikegraph/neuron.hpp"

namespace spikegraph {

// Sigmoid surrogate used in place of the spike step function when
// differentiating: value 1 / (1 + exp(-alpha v)), gradient alpha g (1 - g).
double surrogate_value(double v, double alpha);
double surrogate_grad(double v, double alpha);

// Mean squared error between the firing-rate vector and the one-hot target
// for `label`: mean over classes of (rate - target)^2.
double mse_loss(const FiringRate& fr, std::size_t label, std::size_t n_classes);
// d loss / d rate_c = 2 (rate_c - target_c) / n_classes.
std::vector<double> mse_loss_grad(const FiringRate& fr, std::size_t label,
                                  std::size_t n_classes);

// Gradient of the loss with respect to the layer weights for one node,
// unrolled over the trace that forward() captured. The reset is treated as
// a constant during differentiation, so the only time coupling is the
// membrane leak: each output spike at step t feels input spikes from steps
// s <= t discounted by k_m^(t-s). Implemented as a backward accumulation
// over steps, touching only the steps where an input spike occurred.
// `loss_grad` is d loss / d rate per class. Returns in_dim * n_out values
// in the weight layout.
std::vector<double> backward_through_time(const LifLayer& layer,
                                          const ForwardTrace& trace,
                                          std::span<const double> loss_grad);

enum class OptimizerKind { sgd, adam };

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::adam;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct TrainConfig {
    double learning_rate = 0.01;
    std::size_t epochs = 200;
    std::size_t batch_size = 0; // 0 means all training nodes per batch
    std::size_t t_steps = 100;
    double l2_coeff = 1e-4;   // added to the gradient as 2 * l2 * weight
    double clip_bound = 5.0;  // clamp |weight| after each update; 0 disables
    std::uint64_t seed = 42;
    OptimizerConfig optimizer;
};

struct EpochRecord {
    std::size_t epoch = 0;
    double train_loss = 0.0;
    double val_accuracy = 0.0;
};

struct TrainReport {
    std::vector<EpochRecord> epochs;
    LifLayer layer; // weights of the best validation snapshot
    std::size_t best_epoch = 0;
    double best_val_accuracy = 0.0;
    double test_accuracy = 0.0;
};

struct EvalResult {
    double accuracy = 0.0;
    // confusion[true_label][predicted_label]
    std::vector<std::vector<std::size_t>> confusion;
};

// Glorot-style uniform initialization, deterministic in the seed.
void init_weights(LifLayer& layer, std::uint64_t seed);

// Runs every node in `nodes` through the layer with a fresh membrane and
// spike trains drawn from (seed, eval tag, node), and scores predictions.
EvalResult evaluate(LifLayer& layer, const PropagatedFeatures& h,
                    std::span<const std::size_t> labels,
                    std::span<const std::size_t> nodes, std::size_t t_steps,
                    std::uint64_t seed);

// Full training run: normalizes the dataset graph, propagates features k
// hops, and fits the LIF readout with surrogate-gradient descent. Spike
// trains are redrawn every epoch from per-(epoch, node) streams, so the
// whole run is a pure function of dataset, split, configs, and k. Keeps the
// weights of the best validation epoch (first epoch wins ties; final
// weights if there are no validation nodes) and reports test accuracy for
// that snapshot. Throws Error if the loss stops being finite.
TrainReport train(const Dataset& ds, const SplitSpec& split,
                  const TrainConfig& cfg, const NeuronConfig& neuron_cfg,
                  std::size_t k,
                  const std::function<void(const EpochRecord&)>& on_epoch = {});

// Plain-text checkpoint with full double precision; load restores an
// identical layer (zeroed membrane).
void save_checkpoint(const LifLayer& layer, const std::filesystem::path& path);
LifLayer load_checkpoint(const std::filesystem::path& path);

} // namespace spikegraph
