#include "spikegraph/training.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "spikegraph/error.hpp"

namespace spikegraph {

double surrogate_value(double v, double alpha) {
    const double x = alpha * v;
    if (x >= 0.0)
        return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double surrogate_grad(double v, double alpha) {
    const double g = surrogate_value(v, alpha);
    return alpha * g * (1.0 - g);
}

double mse_loss(const FiringRate& fr, std::size_t label, std::size_t n_classes) {
    if (fr.rates.size() != n_classes)
        throw DimensionError("mse_loss: rate vector has " +
                             std::to_string(fr.rates.size()) + " entries for " +
                             std::to_string(n_classes) + " classes");
    if (label >= n_classes)
        throw InputError("mse_loss: label " + std::to_string(label) +
                         " >= n_classes " + std::to_string(n_classes));
    double sum = 0.0;
    for (std::size_t c = 0; c < n_classes; ++c) {
        const double err = fr.rates[c] - (c == label ? 1.0 : 0.0);
        sum += err * err;
    }
    return sum / static_cast<double>(n_classes);
}

std::vector<double> mse_loss_grad(const FiringRate& fr, std::size_t label,
                                  std::size_t n_classes) {
    if (fr.rates.size() != n_classes)
        throw DimensionError("mse_loss_grad: rate/class count mismatch");
    if (label >= n_classes)
        throw InputError("mse_loss_grad: label out of range");
    std::vector<double> grad(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c)
        grad[c] = 2.0 * (fr.rates[c] - (c == label ? 1.0 : 0.0)) /
                  static_cast<double>(n_classes);
    return grad;
}

namespace {

// d spike / d membrane under the surrogate. Binary mode differentiates the
// sigmoid at the membrane itself; ternary mode smooths both transition
// points and sums their slopes.
inline double fire_grad(double v, const NeuronConfig& cfg) {
    if (cfg.fire_mode == FireMode::binary)
        return surrogate_grad(v, cfg.alpha);
    return surrogate_grad(v - cfg.v_th, cfg.alpha) +
           surrogate_grad(v + cfg.v_th / cfg.theta, cfg.alpha);
}

} // namespace

std::vector<double> backward_through_time(const LifLayer& layer,
                                          const ForwardTrace& trace,
                                          std::span<const double> loss_grad) {
    const std::size_t t_steps = trace.input.t_steps;
    const std::size_t d = layer.in_dim;
    const std::size_t c_out = layer.n_out;
    if (trace.input.dim != d || trace.output.dim != c_out ||
        trace.output.t_steps != t_steps ||
        trace.membrane.size() != t_steps * c_out)
        throw DimensionError("backward_through_time: trace does not match layer");
    if (loss_grad.size() != c_out)
        throw DimensionError("backward_through_time: loss gradient length mismatch");

    std::vector<double> grad(d * c_out, 0.0);
    if (t_steps == 0)
        return grad;

    // An input spike at step s reaches the membrane at every step t >= s
    // discounted by k_m^(t-s). Folding the discount backward turns the
    // double sum into one pass: b[t][c] carries the per-step fire terms of
    // steps >= t, pre-discounted to step t.
    const double k_m = layer.config.k_m();
    const double inv_t = 1.0 / static_cast<double>(t_steps);
    std::vector<double> b(t_steps * c_out, 0.0);
    for (std::size_t t = t_steps; t-- > 0;) {
        for (std::size_t c = 0; c < c_out; ++c) {
            const double a =
                loss_grad[c] * inv_t * fire_grad(trace.membrane[t * c_out + c],
                                                 layer.config);
            b[t * c_out + c] =
                a + (t + 1 < t_steps ? k_m * b[(t + 1) * c_out + c] : 0.0);
        }
    }
    for (std::size_t t = 0; t < t_steps; ++t) {
        auto spikes = trace.input.step(t);
        for (std::size_t j = 0; j < d; ++j) {
            const std::int8_t o = spikes[j];
            if (o == 0)
                continue;
            const double* bt = b.data() + t * c_out;
            double* gj = grad.data() + j * c_out;
            if (o == 1)
                for (std::size_t c = 0; c < c_out; ++c)
                    gj[c] += bt[c];
            else
                for (std::size_t c = 0; c < c_out; ++c)
                    gj[c] -= bt[c];
        }
    }
    return grad;
}

void init_weights(LifLayer& layer, std::uint64_t seed) {
    RngStream rng(seed, stream_tag::weight_init);
    const double limit = std::sqrt(
        6.0 / static_cast<double>(layer.in_dim + layer.n_out));
    for (double& w : layer.weights)
        w = rng.next_range(-limit, limit);
}

EvalResult evaluate(LifLayer& layer, const PropagatedFeatures& h,
                    std::span<const std::size_t> labels,
                    std::span<const std::size_t> nodes, std::size_t t_steps,
                    std::uint64_t seed) {
    if (h.data.n_rows != labels.size())
        throw DimensionError("evaluate: labels do not cover the feature rows");
    if (h.data.n_cols != layer.in_dim)
        throw DimensionError("evaluate: feature dim does not match layer");

    EvalResult result;
    result.confusion.assign(layer.n_out,
                            std::vector<std::size_t>(layer.n_out, 0));
    std::size_t correct = 0;
    for (std::size_t node : nodes) {
        if (node >= h.data.n_rows)
            throw InputError("evaluate: node index out of range");
        RngStream rng(seed, stream_tag::encode_eval, 0, node);
        FiringRate fr = forward(layer, h.data.row(node), t_steps, rng);
        const std::size_t pred = predict(fr);
        const std::size_t truth = labels[node];
        if (truth >= layer.n_out)
            throw InputError("evaluate: label out of range for the layer");
        ++result.confusion[truth][pred];
        if (pred == truth)
            ++correct;
    }
    result.accuracy =
        nodes.empty() ? 0.0 : static_cast<double>(correct) / nodes.size();
    return result;
}

namespace {

struct Optimizer {
    const TrainConfig& cfg;
    std::vector<double> m, v;
    std::size_t step_count = 0;

    explicit Optimizer(const TrainConfig& c, std::size_t n_params)
        : cfg(c), m(n_params, 0.0), v(n_params, 0.0) {}

    void step(std::vector<double>& weights, const std::vector<double>& grad) {
        ++step_count;
        const double lr = cfg.learning_rate;
        if (cfg.optimizer.kind == OptimizerKind::sgd) {
            for (std::size_t i = 0; i < weights.size(); ++i)
                weights[i] -= lr * grad[i];
        } else {
            const double b1 = cfg.optimizer.beta1;
            const double b2 = cfg.optimizer.beta2;
            const double corr1 = 1.0 - std::pow(b1, static_cast<double>(step_count));
            const double corr2 = 1.0 - std::pow(b2, static_cast<double>(step_count));
            for (std::size_t i = 0; i < weights.size(); ++i) {
                m[i] = b1 * m[i] + (1.0 - b1) * grad[i];
                v[i] = b2 * v[i] + (1.0 - b2) * grad[i] * grad[i];
                const double m_hat = m[i] / corr1;
                const double v_hat = v[i] / corr2;
                weights[i] -= lr * m_hat / (std::sqrt(v_hat) + cfg.optimizer.epsilon);
            }
        }
        for (double& w : weights)
            w = std::clamp(w, -cfg.clip_bound, cfg.clip_bound);
    }
};

void check_train_config(const TrainConfig& cfg) {
    if (!(cfg.learning_rate > 0.0))
        throw InputError("learning_rate must be positive");
    if (cfg.epochs == 0)
        throw InputError("epochs must be positive");
    if (cfg.t_steps == 0)
        throw InputError("t_steps must be positive");
    if (!(cfg.l2_coeff >= 0.0))
        throw InputError("l2_coeff must be non-negative");
    if (!(cfg.clip_bound > 0.0))
        throw InputError("clip_bound must be positive");
}

} // namespace

TrainReport train(const Dataset& ds, const SplitSpec& split,
                  const TrainConfig& cfg, const NeuronConfig& neuron_cfg,
                  std::size_t k,
                  const std::function<void(const EpochRecord&)>& on_epoch) {
    check_train_config(cfg);
    validate_split(ds, split);

    const PropagatedFeatures h = propagate(normalize(ds.graph), ds.features, k);
    const std::size_t d = h.data.n_cols;
    const std::size_t n_classes = ds.n_classes;
    const std::size_t n_train = split.train_idx.size();
    const std::size_t batch_size =
        cfg.batch_size == 0 ? n_train : std::min(cfg.batch_size, n_train);

    TrainReport report;
    LifLayer layer(d, n_classes, neuron_cfg);
    init_weights(layer, cfg.seed);
    Optimizer opt(cfg, layer.weights.size());

    std::vector<double> best_weights = layer.weights;
    double best_val = -1.0;
    std::size_t best_epoch = 0;

    std::vector<double> grad_sum(layer.weights.size());
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::vector<std::size_t> order = split.train_idx;
        RngStream batch_rng(cfg.seed, stream_tag::batch_order, epoch);
        batch_rng.shuffle(order);

        double loss_sum = 0.0;
        for (std::size_t start = 0; start < n_train; start += batch_size) {
            const std::size_t end = std::min(start + batch_size, n_train);
            std::fill(grad_sum.begin(), grad_sum.end(), 0.0);
            for (std::size_t b = start; b < end; ++b) {
                const std::size_t node = order[b];
                RngStream enc(cfg.seed, stream_tag::encode_train, epoch, node);
                ForwardTrace trace;
                FiringRate fr =
                    forward(layer, h.data.row(node), cfg.t_steps, enc, &trace);
                loss_sum += mse_loss(fr, ds.labels[node], n_classes);
                std::vector<double> lg = mse_loss_grad(fr, ds.labels[node], n_classes);
                std::vector<double> g = backward_through_time(layer, trace, lg);
                for (std::size_t i = 0; i < grad_sum.size(); ++i)
                    grad_sum[i] += g[i];
            }
            const double inv_batch = 1.0 / static_cast<double>(end - start);
            for (std::size_t i = 0; i < grad_sum.size(); ++i)
                grad_sum[i] = grad_sum[i] * inv_batch +
                              2.0 * cfg.l2_coeff * layer.weights[i];
            opt.step(layer.weights, grad_sum);
        }

        EpochRecord record;
        record.epoch = epoch;
        record.train_loss = loss_sum / static_cast<double>(n_train);
        if (!std::isfinite(record.train_loss))
            throw Error("training diverged: non-finite loss at epoch " +
                        std::to_string(epoch));

        if (!split.val_idx.empty()) {
            std::size_t correct = 0;
            for (std::size_t node : split.val_idx) {
                RngStream enc(cfg.seed, stream_tag::encode_val, epoch, node);
                FiringRate fr = forward(layer, h.data.row(node), cfg.t_steps, enc);
                if (predict(fr) == ds.labels[node])
                    ++correct;
            }
            record.val_accuracy =
                static_cast<double>(correct) / split.val_idx.size();
            if (record.val_accuracy > best_val) {
                best_val = record.val_accuracy;
                best_epoch = epoch;
                best_weights = layer.weights;
            }
        }
        report.epochs.push_back(record);
        if (on_epoch)
            on_epoch(record);
    }

    if (split.val_idx.empty()) {
        // No validation signal: the final weights are the snapshot.
        best_weights = layer.weights;
        best_epoch = cfg.epochs - 1;
        best_val = 0.0;
    }
    layer.weights = best_weights;
    layer.reset_membrane();
    report.best_epoch = best_epoch;
    report.best_val_accuracy = best_val;
    report.test_accuracy = evaluate(layer, h, ds.labels, split.test_idx,
                                    cfg.t_steps, cfg.seed)
                               .accuracy;
    report.layer = std::move(layer);
    return report;
}

void save_checkpoint(const LifLayer& layer, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open checkpoint for writing: " + path.string());

    auto num = [](double v) {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        (void)ec;
        return std::string(buf, ptr);
    };

    out << "spikegraph-checkpoint v1\n";
    out << "dims " << layer.in_dim << ' ' << layer.n_out << '\n';
    const NeuronConfig& c = layer.config;
    out << "neuron tau_m " << num(c.tau_m) << " v_th " << num(c.v_th)
        << " v_reset " << num(c.v_reset) << " theta " << num(c.theta)
        << " alpha " << num(c.alpha) << " fire_mode "
        << (c.fire_mode == FireMode::binary ? "binary" : "ternary") << '\n';
    for (std::size_t j = 0; j < layer.in_dim; ++j) {
        for (std::size_t cc = 0; cc < layer.n_out; ++cc)
            out << num(layer.weight(j, cc)) << (cc + 1 == layer.n_out ? "" : " ");
        out << '\n';
    }
    if (!out)
        throw Error("failed writing checkpoint: " + path.string());
}

LifLayer load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open checkpoint: " + path.string());

    auto fail = [&path](const std::string& detail) -> Error {
        return Error("checkpoint " + path.string() + ": " + detail);
    };

    std::string line;
    if (!std::getline(in, line) || line != "spikegraph-checkpoint v1")
        throw fail("bad header");

    std::string word;
    std::size_t d = 0, c_out = 0;
    in >> word;
    if (word != "dims" || !(in >> d >> c_out) || d == 0 || c_out == 0)
        throw fail("bad dims line");

    NeuronConfig cfg;
    auto read_field = [&](const char* name, double& value) {
        std::string key;
        if (!(in >> key >> value) || key != name)
            throw fail(std::string("expected neuron field ") + name);
    };
    in >> word;
    if (word != "neuron")
        throw fail("missing neuron line");
    read_field("tau_m", cfg.tau_m);
    read_field("v_th", cfg.v_th);
    read_field("v_reset", cfg.v_reset);
    read_field("theta", cfg.theta);
    read_field("alpha", cfg.alpha);
    std::string mode;
    if (!(in >> word >> mode) || word != "fire_mode" ||
        (mode != "binary" && mode != "ternary"))
        throw fail("bad fire_mode");
    cfg.fire_mode = mode == "binary" ? FireMode::binary : FireMode::ternary;

    LifLayer layer(d, c_out, cfg);
    for (double& w : layer.weights)
        if (!(in >> w))
            throw fail("truncated weight matrix");
    double extra;
    if (in >> extra)
        throw fail("trailing data after weight matrix");
    return layer;
}

} // namespace spikegraph
