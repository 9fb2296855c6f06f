// Command-line front end: train / eval / energy / bounds subcommands over
// the two-file citation dataset format. Every command prints its resolved
// configuration as the first output record; all metric output is
// line-delimited JSON so runs can be diffed byte for byte.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spikegraph/bounds.hpp"
#include "spikegraph/dataset.hpp"
#include "spikegraph/energy.hpp"
#include "spikegraph/error.hpp"
#include "spikegraph/graph.hpp"
#include "spikegraph/neuron.hpp"
#include "spikegraph/rng.hpp"
#include "spikegraph/training.hpp"

namespace fs = std::filesystem;
namespace sg = spikegraph;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string command;
    std::string dataset_content;
    std::string dataset_cites;
    std::string split = "official"; // official | ratio
    std::string split_file;         // import instead of generating
    std::uint64_t seed = 42;
    std::size_t k = 2;
    std::size_t time_steps = 100;

    double tau_m = 2.0;
    double v_th = 1.0;
    double v_reset = 0.0;
    double theta = 2.0;
    double alpha = 2.0;
    std::string fire_mode = "binary";

    double lr = 0.01;
    std::size_t epochs = 200;
    std::size_t batch = 0; // 0 = full batch
    double l2 = 1e-4;
    double clip = 5.0;
    std::string optimizer = "adam";
    std::string feature_scale = "row-normalize"; // row-normalize | clamp-only

    std::string out_dir;
    std::string checkpoint;
    std::uint64_t eval_seed = 12345;

    // eval extras
    long long trace_node = -1;
    std::string trace_out;

    // energy extras
    std::uint64_t spikes = 0;
    bool spikes_given = false;
    std::uint64_t flops = 0;
    bool flops_given = false;
    double gpu_power = 280.0;
    double gpu_gflops = 16310.0;
    double pj_per_spike = 3.7;
    double supply_volts = 1.8;
    std::size_t dense_d = 0;
    std::size_t dense_c = 0;

    // bounds extras
    long long node = -1;
    double epsilon = 0.5;
    std::size_t trials = 10000;
    std::size_t demo_dim = 0;
    double demo_psi = 0.01;
    double demo_lambda = 0.5;
};

json config_record(const RunConfig& c) {
    json j;
    j["event"] = "config";
    j["command"] = c.command;
    j["dataset_content"] = c.dataset_content;
    j["dataset_cites"] = c.dataset_cites;
    j["split"] = c.split;
    j["split_file"] = c.split_file;
    j["seed"] = c.seed;
    j["k"] = c.k;
    j["time_steps"] = c.time_steps;
    j["tau_m"] = c.tau_m;
    j["v_th"] = c.v_th;
    j["v_reset"] = c.v_reset;
    j["theta"] = c.theta;
    j["alpha"] = c.alpha;
    j["fire_mode"] = c.fire_mode;
    j["lr"] = c.lr;
    j["epochs"] = c.epochs;
    j["batch"] = c.batch;
    j["l2"] = c.l2;
    j["clip"] = c.clip;
    j["optimizer"] = c.optimizer;
    j["feature_scale"] = c.feature_scale;
    j["out_dir"] = c.out_dir;
    j["checkpoint"] = c.checkpoint;
    j["eval_seed"] = c.eval_seed;
    return j;
}

void load_config_file(RunConfig& c, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw sg::Error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw sg::Error("config file " + path + ": " + e.what());
    }
    auto get = [&j](const char* key, auto& into) {
        if (j.contains(key))
            j.at(key).get_to(into);
    };
    get("dataset_content", c.dataset_content);
    get("dataset_cites", c.dataset_cites);
    get("split", c.split);
    get("split_file", c.split_file);
    get("seed", c.seed);
    get("k", c.k);
    get("time_steps", c.time_steps);
    get("tau_m", c.tau_m);
    get("v_th", c.v_th);
    get("v_reset", c.v_reset);
    get("theta", c.theta);
    get("alpha", c.alpha);
    get("fire_mode", c.fire_mode);
    get("lr", c.lr);
    get("epochs", c.epochs);
    get("batch", c.batch);
    get("l2", c.l2);
    get("clip", c.clip);
    get("optimizer", c.optimizer);
    get("feature_scale", c.feature_scale);
    get("out_dir", c.out_dir);
    get("eval_seed", c.eval_seed);
}

sg::NeuronConfig neuron_config(const RunConfig& c) {
    sg::NeuronConfig n;
    n.tau_m = c.tau_m;
    n.v_th = c.v_th;
    n.v_reset = c.v_reset;
    n.theta = c.theta;
    n.alpha = c.alpha;
    n.fire_mode =
        c.fire_mode == "ternary" ? sg::FireMode::ternary : sg::FireMode::binary;
    return n;
}

sg::TrainConfig train_config(const RunConfig& c) {
    sg::TrainConfig t;
    t.learning_rate = c.lr;
    t.epochs = c.epochs;
    t.batch_size = c.batch;
    t.t_steps = c.time_steps;
    t.l2_coeff = c.l2;
    t.clip_bound = c.clip;
    t.seed = c.seed;
    t.optimizer.kind =
        c.optimizer == "sgd" ? sg::OptimizerKind::sgd : sg::OptimizerKind::adam;
    return t;
}

sg::FeatureScaling scaling_mode(const RunConfig& c) {
    return c.feature_scale == "clamp-only" ? sg::FeatureScaling::clamp_only
                                           : sg::FeatureScaling::row_normalize;
}

sg::SplitMode split_mode(const RunConfig& c) {
    return c.split == "ratio" ? sg::SplitMode::split_ii : sg::SplitMode::split_i;
}

struct LoadedData {
    sg::Dataset ds;
    sg::SplitSpec split;
    sg::PropagatedFeatures h;
};

LoadedData load_pipeline(const RunConfig& c) {
    LoadedData data;
    data.ds = sg::scale_features(
        sg::load_content_cites(c.dataset_content, c.dataset_cites),
        scaling_mode(c));
    data.split = c.split_file.empty()
                     ? sg::make_split(data.ds, split_mode(c), c.seed)
                     : sg::load_split(c.split_file);
    sg::validate_split(data.ds, data.split);
    data.h = sg::propagate(sg::normalize(data.ds.graph), data.ds.features, c.k);
    return data;
}

// Removes everything registered unless the run completes.
struct ArtifactGuard {
    std::vector<fs::path> paths;
    bool committed = false;

    void track(const fs::path& p) { paths.push_back(p); }
    ~ArtifactGuard() {
        if (committed)
            return;
        for (const auto& p : paths) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }
};

void emit(const json& record, std::ostream* file = nullptr) {
    const std::string line = record.dump();
    std::cout << line << '\n';
    if (file)
        *file << line << '\n';
}

int cmd_train(const RunConfig& cfg) {
    emit(config_record(cfg));

    fs::path out(cfg.out_dir);
    fs::create_directories(out);
    ArtifactGuard guard;

    const fs::path config_path = out / "runconfig.json";
    const fs::path metrics_path = out / "metrics.jsonl";
    const fs::path checkpoint_path = out / "checkpoint.txt";
    const fs::path split_path = out / "split.txt";
    guard.track(config_path);
    guard.track(metrics_path);
    guard.track(checkpoint_path);
    guard.track(split_path);

    {
        std::ofstream config_out(config_path);
        if (!config_out)
            throw sg::Error("cannot write " + config_path.string());
        config_out << config_record(cfg).dump(2) << '\n';
    }

    LoadedData data = load_pipeline(cfg);
    std::ofstream metrics(metrics_path);
    if (!metrics)
        throw sg::Error("cannot write " + metrics_path.string());

    sg::TrainReport report =
        sg::train(data.ds, data.split, train_config(cfg), neuron_config(cfg),
                  cfg.k, [&metrics](const sg::EpochRecord& r) {
                      json j;
                      j["event"] = "epoch";
                      j["epoch"] = r.epoch;
                      j["train_loss"] = r.train_loss;
                      j["val_acc"] = r.val_accuracy;
                      emit(j, &metrics);
                  });

    json final_record;
    final_record["event"] = "final";
    final_record["best_epoch"] = report.best_epoch;
    final_record["best_val_acc"] = report.best_val_accuracy;
    final_record["test_acc"] = report.test_accuracy;
    emit(final_record, &metrics);
    metrics.close();
    if (!metrics)
        throw sg::Error("failed writing " + metrics_path.string());

    sg::save_checkpoint(report.layer, checkpoint_path);
    sg::save_split(data.split, split_path);
    guard.committed = true;
    return 0;
}

int cmd_eval(const RunConfig& cfg) {
    emit(config_record(cfg));

    sg::LifLayer layer = sg::load_checkpoint(cfg.checkpoint);
    LoadedData data = load_pipeline(cfg);
    if (layer.in_dim != data.h.data.n_cols || layer.n_out != data.ds.n_classes)
        throw sg::DimensionError(
            "checkpoint is " + std::to_string(layer.in_dim) + "x" +
            std::to_string(layer.n_out) + " but the dataset needs " +
            std::to_string(data.h.data.n_cols) + "x" +
            std::to_string(data.ds.n_classes));

    sg::EvalResult result =
        sg::evaluate(layer, data.h, data.ds.labels, data.split.test_idx,
                     cfg.time_steps, cfg.eval_seed);

    json j;
    j["event"] = "eval";
    j["accuracy"] = result.accuracy;
    j["n_test"] = data.split.test_idx.size();
    emit(j);
    for (std::size_t t = 0; t < result.confusion.size(); ++t) {
        json row;
        row["event"] = "confusion";
        row["true_class"] = data.ds.class_names[t];
        row["counts"] = result.confusion[t];
        emit(row);
    }

    if (cfg.trace_node >= 0) {
        const auto node = static_cast<std::size_t>(cfg.trace_node);
        if (node >= data.ds.n_nodes())
            throw sg::InputError("trace node out of range");
        if (cfg.trace_out.empty())
            throw sg::InputError("--trace-node requires --trace-out");
        sg::RngStream rng(cfg.eval_seed, sg::stream_tag::encode_eval, 0, node);
        sg::ForwardTrace trace;
        sg::forward(layer, data.h.data.row(node), cfg.time_steps, rng, &trace);

        ArtifactGuard guard;
        guard.track(cfg.trace_out);
        std::ofstream csv(cfg.trace_out);
        if (!csv)
            throw sg::Error("cannot write " + cfg.trace_out);
        csv << "t,neuron,V,spike\n";
        for (std::size_t t = 0; t < cfg.time_steps; ++t)
            for (std::size_t c = 0; c < layer.n_out; ++c)
                csv << t << ',' << c << ','
                    << trace.membrane[t * layer.n_out + c] << ','
                    << static_cast<int>(trace.output.at(t, c)) << '\n';
        csv.close();
        if (!csv)
            throw sg::Error("failed writing " + cfg.trace_out);
        guard.committed = true;
    }
    return 0;
}

int cmd_energy(const RunConfig& cfg) {
    emit(config_record(cfg));

    auto energy_record = [](const sg::EnergyReport& r, const char* platform) {
        json j;
        j["event"] = "energy";
        j["platform"] = platform;
        j["events"] = r.total_events;
        j["joules"] = r.joules;
        j["joules_sci"] = sg::format_scientific(r.joules);
        return j;
    };

    sg::PlatformSpec platform;
    platform.gpu.power_watts = cfg.gpu_power;
    platform.gpu.gflops = cfg.gpu_gflops;
    platform.neuromorphic.energy_per_spike_pj = cfg.pj_per_spike;
    platform.neuromorphic.supply_volts = cfg.supply_volts;

    bool produced_output = false;

    std::size_t dense_d = cfg.dense_d;
    std::size_t dense_c = cfg.dense_c;

    // Model mode: replay the test-set inference and count real spikes.
    if (!cfg.checkpoint.empty()) {
        sg::LifLayer layer = sg::load_checkpoint(cfg.checkpoint);
        LoadedData data = load_pipeline(cfg);
        if (layer.in_dim != data.h.data.n_cols)
            throw sg::DimensionError("checkpoint does not match dataset dims");
        sg::OpCounter counter =
            sg::count_inference(layer, data.h, data.split.test_idx,
                                cfg.time_steps, cfg.eval_seed);
        if (dense_d == 0) {
            dense_d = layer.in_dim;
            dense_c = layer.n_out;
        }

        json ops;
        ops["event"] = "ops";
        ops["nodes"] = counter.nodes_evaluated;
        ops["spikes"] = counter.spikes;
        ops["sops"] = counter.sops;
        ops["sops_per_node"] =
            counter.nodes_evaluated == 0
                ? 0.0
                : static_cast<double>(counter.sops) /
                      static_cast<double>(counter.nodes_evaluated);
        emit(ops);

        sg::PlatformSpec neuro = platform;
        neuro.kind = sg::PlatformKind::neuromorphic;
        emit(energy_record(sg::estimate_energy(neuro, counter.spikes),
                           "neuromorphic"));
        produced_output = true;
    }

    if (dense_d > 0) {
        const std::uint64_t macs = sg::count_dense_reference(dense_d, dense_c);
        json j;
        j["event"] = "macs";
        j["dense_d"] = dense_d;
        j["dense_c"] = dense_c;
        j["macs_per_node"] = macs;
        emit(j);
        produced_output = true;
    }

    if (cfg.spikes_given) {
        sg::PlatformSpec neuro = platform;
        neuro.kind = sg::PlatformKind::neuromorphic;
        emit(energy_record(sg::estimate_energy(neuro, cfg.spikes),
                           "neuromorphic"));
        produced_output = true;
    }
    if (cfg.flops_given) {
        sg::PlatformSpec gpu = platform;
        gpu.kind = sg::PlatformKind::gpu;
        emit(energy_record(sg::estimate_energy(gpu, cfg.flops), "gpu"));
        produced_output = true;
    }

    if (!produced_output)
        throw sg::InputError(
            "energy: provide --checkpoint with dataset flags, --dense-d/"
            "--dense-c, or --spikes/--flops");
    return 0;
}

int cmd_bounds(const RunConfig& cfg) {
    emit(config_record(cfg));

    auto bound_record = [](const sg::BoundReport& r) {
        json j;
        j["event"] = "bound";
        j["expected"] = r.expected;
        j["sigma"] = r.sigma;
        j["sigma_prime"] = r.sigma_prime;
        j["psi_hat"] = r.psi_hat;
        j["epsilon"] = r.epsilon;
        j["lower_bound"] = r.lower_bound;
        j["lower_bound_prime"] = r.lower_bound_prime;
        j["upper_bound"] = r.upper_bound;
        j["upper_bound_prime"] = r.upper_bound_prime;
        j["failure_prob"] = r.failure_prob;
        j["conservative_signed"] = r.conservative_signed;
        return j;
    };

    // Formula playground: uniform psi/lambda vectors, no model needed.
    if (cfg.demo_dim > 0) {
        std::vector<double> psi(cfg.demo_dim, cfg.demo_psi);
        std::vector<double> lambda(cfg.demo_dim, cfg.demo_lambda);
        sg::BoundReport r = sg::analyze(psi, lambda, cfg.epsilon);
        sg::RngStream rng(cfg.seed, sg::stream_tag::monte_carlo, 0);
        auto [below, above] =
            sg::empirical_tails(psi, lambda, cfg.epsilon, cfg.trials, rng);
        json j = bound_record(r);
        j["mc_below"] = below;
        j["mc_above"] = above;
        emit(j);
        return 0;
    }

    if (cfg.checkpoint.empty())
        throw sg::InputError("bounds: provide --checkpoint or --demo-dim");
    if (cfg.node < 0)
        throw sg::InputError("bounds: --node is required with --checkpoint");

    sg::LifLayer layer = sg::load_checkpoint(cfg.checkpoint);
    LoadedData data = load_pipeline(cfg);
    if (layer.in_dim != data.h.data.n_cols)
        throw sg::DimensionError("checkpoint does not match dataset dims");
    const auto node = static_cast<std::size_t>(cfg.node);

    auto reports = sg::audit_model(layer, data.h, node, cfg.epsilon);

    std::vector<double> lambda(layer.in_dim);
    auto row = data.h.data.row(node);
    for (std::size_t j = 0; j < layer.in_dim; ++j)
        lambda[j] = std::clamp(row[j], 0.0, 1.0);

    double worst = 0.0;
    std::size_t worst_class = 0;
    std::vector<double> column(layer.in_dim);
    for (std::size_t c = 0; c < reports.size(); ++c) {
        for (std::size_t j = 0; j < layer.in_dim; ++j)
            column[j] = layer.weight(j, c);
        sg::RngStream rng(cfg.seed, sg::stream_tag::monte_carlo, c, node);
        auto [below, above] =
            sg::empirical_tails(column, lambda, cfg.epsilon, cfg.trials, rng);

        json j = bound_record(reports[c]);
        j["class"] = data.ds.class_names[c];
        j["node"] = node;
        j["mc_below"] = below;
        j["mc_above"] = above;
        emit(j);

        if (reports[c].failure_prob >= worst) {
            worst = reports[c].failure_prob;
            worst_class = c;
        }
    }

    json summary;
    summary["event"] = "bound_summary";
    summary["node"] = node;
    summary["worst_class"] = data.ds.class_names[worst_class];
    summary["worst_failure_prob"] = worst;
    emit(summary);
    return 0;
}

void add_dataset_flags(CLI::App* app, RunConfig& cfg, bool required) {
    auto* content = app->add_option("--dataset-content", cfg.dataset_content,
                                    "Path to the <name>.content file");
    auto* cites = app->add_option("--dataset-cites", cfg.dataset_cites,
                                  "Path to the <name>.cites file");
    if (required) {
        content->required();
        cites->required();
    }
    app->add_option("--split", cfg.split,
                    "Split protocol: official (20/class + 500 + 1000) or ratio "
                    "(60/20/20)")
        ->check(CLI::IsMember({"official", "ratio"}));
    app->add_option("--split-file", cfg.split_file,
                    "Load a saved split instead of generating one");
    app->add_option("--seed", cfg.seed, "Seed for splits, init, and encoding");
    app->add_option("--k", cfg.k, "Propagation depth K")->capture_default_str();
    app->add_option("--feature-scale", cfg.feature_scale,
                    "Feature scaling before encoding")
        ->check(CLI::IsMember({"row-normalize", "clamp-only"}));
}

void add_neuron_flags(CLI::App* app, RunConfig& cfg) {
    app->add_option("--time-steps", cfg.time_steps, "Encoding window T")->capture_default_str();
    app->add_option("--tau-m", cfg.tau_m, "Membrane time constant")->capture_default_str();
    app->add_option("--v-th", cfg.v_th, "Firing threshold")->capture_default_str();
    app->add_option("--v-reset", cfg.v_reset, "Resting potential")->capture_default_str();
    app->add_option("--theta", cfg.theta,
                    "Negative-threshold divisor (ternary mode)")->capture_default_str();
    app->add_option("--alpha", cfg.alpha, "Surrogate sharpness")->capture_default_str();
    app->add_option("--fire-mode", cfg.fire_mode, "Spike polarity")
        ->check(CLI::IsMember({"binary", "ternary"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spiking graph network engine"};
    app.require_subcommand(1);

    RunConfig train_cfg, eval_cfg, energy_cfg, bounds_cfg;
    train_cfg.command = "train";
    eval_cfg.command = "eval";
    energy_cfg.command = "energy";
    bounds_cfg.command = "bounds";

    // --config seeds the defaults of every later flag, so it must be applied
    // before CLI11 parses; a plain pre-scan keeps the semantics obvious.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                load_config_file(train_cfg, argv[i + 1]);
            } catch (const sg::Error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 1;
            }
        }
    }

    CLI::App* train = app.add_subcommand("train", "Fit the spiking readout");
    std::string config_path;
    train->add_option("--config", config_path,
                      "JSON RunConfig whose values become the defaults");
    add_dataset_flags(train, train_cfg, /*required=*/train_cfg.dataset_content.empty());
    add_neuron_flags(train, train_cfg);
    train->add_option("--lr", train_cfg.lr, "Learning rate")->capture_default_str();
    train->add_option("--epochs", train_cfg.epochs, "Training epochs")->capture_default_str();
    train->add_option("--batch", train_cfg.batch,
                      "Mini-batch size (0 = full batch)")->capture_default_str();
    train->add_option("--l2", train_cfg.l2, "L2 coefficient")->capture_default_str();
    train->add_option("--clip", train_cfg.clip, "Weight clip bound")->capture_default_str();
    train->add_option("--optimizer", train_cfg.optimizer, "Optimizer")
        ->check(CLI::IsMember({"adam", "sgd"}));
    auto* out_opt = train->add_option("--out-dir", train_cfg.out_dir,
                                      "Directory for run artifacts");
    if (train_cfg.out_dir.empty())
        out_opt->required();

    CLI::App* eval = app.add_subcommand("eval", "Score a checkpoint");
    eval->add_option("--checkpoint", eval_cfg.checkpoint, "Trained model file")
        ->required();
    add_dataset_flags(eval, eval_cfg, /*required=*/true);
    eval->add_option("--time-steps", eval_cfg.time_steps, "Encoding window T")
        ->capture_default_str();
    eval->add_option("--eval-seed", eval_cfg.eval_seed,
                     "Seed for evaluation spike trains")->capture_default_str();
    eval->add_option("--trace-node", eval_cfg.trace_node,
                     "Export a membrane trace for this node index");
    eval->add_option("--trace-out", eval_cfg.trace_out,
                     "CSV file for the membrane trace");

    CLI::App* energy = app.add_subcommand("energy", "Operation and joule report");
    energy->add_option("--checkpoint", energy_cfg.checkpoint,
                       "Trained model file (enables spike counting)");
    add_dataset_flags(energy, energy_cfg, /*required=*/false);
    energy->add_option("--time-steps", energy_cfg.time_steps,
                       "Encoding window T")->capture_default_str();
    energy->add_option("--eval-seed", energy_cfg.eval_seed,
                       "Seed for counted spike trains")->capture_default_str();
    auto* spikes_opt = energy->add_option("--spikes", energy_cfg.spikes,
                                          "Spike count for a direct estimate");
    auto* flops_opt = energy->add_option("--flops", energy_cfg.flops,
                                         "FLOP count for a direct estimate");
    energy->add_option("--gpu-power", energy_cfg.gpu_power, "GPU watts")->capture_default_str();
    energy->add_option("--gpu-gflops", energy_cfg.gpu_gflops, "GPU GFLOPS")
        ->capture_default_str();
    energy->add_option("--pj-per-spike", energy_cfg.pj_per_spike,
                       "Neuromorphic pJ per spike")->capture_default_str();
    energy->add_option("--supply-volts", energy_cfg.supply_volts,
                       "Neuromorphic supply voltage")->capture_default_str();
    energy->add_option("--dense-d", energy_cfg.dense_d,
                       "Dense reference input dim");
    energy->add_option("--dense-c", energy_cfg.dense_c,
                       "Dense reference output dim");

    CLI::App* bounds = app.add_subcommand("bounds", "Concentration audit");
    bounds->add_option("--checkpoint", bounds_cfg.checkpoint,
                       "Trained model file");
    add_dataset_flags(bounds, bounds_cfg, /*required=*/false);
    bounds->add_option("--node", bounds_cfg.node, "Node to audit");
    bounds->add_option("--epsilon", bounds_cfg.epsilon, "Deviation radius")
        ->capture_default_str();
    bounds->add_option("--trials", bounds_cfg.trials, "Monte Carlo trials")
        ->capture_default_str();
    bounds->add_option("--demo-dim", bounds_cfg.demo_dim,
                       "Uniform-vector mode: dimension");
    bounds->add_option("--demo-psi", bounds_cfg.demo_psi,
                       "Uniform-vector mode: weight value")->capture_default_str();
    bounds->add_option("--demo-lambda", bounds_cfg.demo_lambda,
                       "Uniform-vector mode: rate value")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    energy_cfg.spikes_given = spikes_opt->count() > 0;
    energy_cfg.flops_given = flops_opt->count() > 0;

    try {
        if (train->parsed())
            return cmd_train(train_cfg);
        if (eval->parsed())
            return cmd_eval(eval_cfg);
        if (energy->parsed())
            return cmd_energy(energy_cfg);
        if (bounds->parsed())
            return cmd_bounds(bounds_cfg);
    } catch (const sg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
