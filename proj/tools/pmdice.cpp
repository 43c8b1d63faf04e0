// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: loss evaluation, metric panels, gradient checking,
// scene synthesis, training, and gamma sweeps over the library.
//
// Exit codes follow sysexits where the contract pins them: 2 shape mismatch,
// 64 usage, 65/66 unreadable input, 73 unwritable output, 78 bad config key.
#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "pmdice/config.hpp"
#include "pmdice/io.hpp"
#include "pmdice/losses.hpp"
#include "pmdice/metrics.hpp"
#include "pmdice/ops.hpp"
#include "pmdice/synth.hpp"
#include "pmdice/trainer.hpp"
#include "pmdice/verify.hpp"

using namespace pmdice;

namespace {

constexpr int kExitShape = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;
constexpr int kExitCantWrite = 73;
constexpr int kExitConfig = 78;

int io_exit_code(const FormatError& e) {
    return std::string(e.what()).find("cannot open") != std::string::npos ? kExitNoInput
                                                                          : kExitBadData;
}

bool is_tnsr(const std::vector<std::uint8_t>& bytes) {
    return bytes.size() >= 4 && bytes[0] == 'T' && bytes[1] == 'N' && bytes[2] == 'S' &&
           bytes[3] == 'R';
}

ScalarField load_scalar(const std::string& path) {
    auto bytes = read_file(path);
    if (is_tnsr(bytes)) return as_scalar(read_tnsr(bytes));
    return read_pgm_intensity(bytes);
}

LabelField load_labels(const std::string& path) {
    auto bytes = read_file(path);
    if (is_tnsr(bytes)) return as_labels(read_tnsr(bytes));
    return read_pgm_labels(bytes);
}

// "0=1,1=2.5" -> {0: 1.0, 1: 2.5}
std::map<std::size_t, double> parse_gamma_class(const std::string& text) {
    std::map<std::size_t, double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected class=gamma, got '" + item + "'");
        out[std::stoul(item.substr(0, eq))] = std::stod(item.substr(eq + 1));
        pos = comma + 1;
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& key) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        try {
            out.push_back(std::stod(text.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw ConfigError(key, "config key " + key + ": not a number list: '" + text + "'");
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text, const std::string& key) {
    std::vector<std::uint64_t> out;
    for (double v : parse_double_list(text, key)) out.push_back(static_cast<std::uint64_t>(v));
    return out;
}

struct LossFlags {
    std::string kind = "dice";
    std::string compound_with;
    std::string gamma_class;
    double gamma = -1.0;  // negative = not set
    double k_percent = -1.0;
    double epsilon = -1.0;
    double w1 = 1.0;
    double w2 = 1.0;

    void attach(CLI::App* cmd, bool kind_required) {
        auto* opt = cmd->add_option("--loss", kind, "loss kind");
        if (kind_required) opt->required();
        cmd->add_option("--gamma", gamma, "focusing exponent");
        cmd->add_option("--gamma-class", gamma_class, "per-class exponents, class=gamma[,..]");
        cmd->add_option("--k", k_percent, "top-K percentage in (0,100]");
        cmd->add_option("--epsilon", epsilon, "smoothing constant");
        cmd->add_option("--compound", compound_with, "second loss kind of a compound");
        cmd->add_option("--w1", w1, "compound weight of the first loss");
        cmd->add_option("--w2", w2, "compound weight of the second loss");
    }

    // Throws std::invalid_argument on unknown kinds (mapped to a usage error).
    LossSpec build() const {
        LossSpec spec = make_loss(loss_kind_from_string(kind));
        if (gamma >= 0.0) {
            spec.gamma = gamma;
            spec.pm_gamma = gamma;
        }
        if (!gamma_class.empty()) spec.gamma_per_class = parse_gamma_class(gamma_class);
        if (k_percent >= 0.0) spec.k_percent = k_percent;
        if (epsilon >= 0.0) spec.epsilon = epsilon;
        if (!compound_with.empty())
            return make_compound(spec, make_loss(loss_kind_from_string(compound_with)), w1, w2);
        spec.validate();
        return spec;
    }
};

std::string panel_csv(const MetricPanel& p) {
    std::string out = "class,dice,iou,precision,recall,nsd\n";
    for (std::size_t c = 0; c < p.num_classes; ++c) {
        out += std::to_string(c) + "," + format_full(p.dice[c]) + "," + format_full(p.iou[c]) +
               "," + format_full(p.precision[c]) + "," + format_full(p.recall[c]) + "," +
               format_full(p.nsd[c]) + "\n";
    }
    out += "foreground_mean," + format_full(p.mdice) + "," + format_full(p.miou) + "," +
           format_full(p.mprec) + "," + format_full(p.mrec) + "," + format_full(p.mnsd) + "\n";
    return out;
}

std::string metric_record(double dice, double iou, double prec, double rec, double nsd) {
    return "\"dice\": " + format_full(dice) + ", \"iou\": " + format_full(iou) +
           ", \"precision\": " + format_full(prec) + ", \"recall\": " + format_full(rec) +
           ", \"nsd\": " + format_full(nsd);
}

// Same numbers as panel_csv, byte for byte.
std::string panel_json(const MetricPanel& p, const std::string& extra = "") {
    std::string out = "{\n  \"classes\": [\n";
    for (std::size_t c = 0; c < p.num_classes; ++c) {
        out += "    {\"class\": " + std::to_string(c) + ", " +
               metric_record(p.dice[c], p.iou[c], p.precision[c], p.recall[c], p.nsd[c]) + "}" +
               (c + 1 < p.num_classes ? "," : "") + "\n";
    }
    out += "  ],\n  \"foreground_mean\": {" +
           metric_record(p.mdice, p.miou, p.mprec, p.mrec, p.mnsd) + "}";
    out += extra;
    out += "\n}\n";
    return out;
}

// --- config-driven construction ------------------------------------------

const std::set<std::string> kSceneKeys = {
    "preset",         "height",           "width",          "n_scenes",
    "big_radius_min", "big_radius_max",   "small_radius_min", "small_radius_max",
    "small_contrast", "noise_sigma",      "fg_fraction",    "seed",
    "multiclass"};

const std::set<std::string> kTrainKeys = {
    "loss",       "gamma",      "gamma_class", "k_percent",  "epsilon", "compound",
    "w1",         "w2",         "epochs",      "initial_lr", "weight_decay",
    "eval_scenes", "tau",       "epoch_evals"};

const std::set<std::string> kSweepKeys = {"gammas", "gamma_pairs", "seeds"};

std::set<std::string> merge_keys(std::initializer_list<const std::set<std::string>*> sets) {
    std::set<std::string> out;
    for (const auto* s : sets) out.insert(s->begin(), s->end());
    return out;
}

SceneConfig scene_from_config(const ConfigMap& cfg) {
    SceneConfig sc;
    const std::string preset = get_string(cfg, "preset", "");
    if (preset == "moderate")
        sc = preset_moderate();
    else if (preset == "severe")
        sc = preset_severe();
    else if (!preset.empty())
        throw ConfigError("preset", "config key preset: expected moderate or severe, got '" +
                                        preset + "'");
    sc.height = get_size(cfg, "height", sc.height);
    sc.width = get_size(cfg, "width", sc.width);
    sc.n_scenes = get_size(cfg, "n_scenes", sc.n_scenes);
    sc.big_radius_min = get_double(cfg, "big_radius_min", sc.big_radius_min);
    sc.big_radius_max = get_double(cfg, "big_radius_max", sc.big_radius_max);
    sc.small_radius_min = get_double(cfg, "small_radius_min", sc.small_radius_min);
    sc.small_radius_max = get_double(cfg, "small_radius_max", sc.small_radius_max);
    sc.small_contrast = get_double(cfg, "small_contrast", sc.small_contrast);
    sc.noise_sigma = get_double(cfg, "noise_sigma", sc.noise_sigma);
    sc.fg_fraction = get_double(cfg, "fg_fraction", sc.fg_fraction);
    sc.seed = get_u64(cfg, "seed", sc.seed);
    sc.multiclass = get_bool(cfg, "multiclass", sc.multiclass);
    return sc;
}

LossSpec loss_from_config(const ConfigMap& cfg) {
    LossFlags flags;
    flags.kind = get_string(cfg, "loss", "dice");
    flags.gamma = get_double(cfg, "gamma", -1.0);
    flags.gamma_class = get_string(cfg, "gamma_class", "");
    flags.k_percent = get_double(cfg, "k_percent", -1.0);
    flags.epsilon = get_double(cfg, "epsilon", -1.0);
    flags.compound_with = get_string(cfg, "compound", "");
    flags.w1 = get_double(cfg, "w1", 1.0);
    flags.w2 = get_double(cfg, "w2", 1.0);
    try {
        return flags.build();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("loss", std::string("config key loss: ") + e.what());
    }
}

TrainConfig train_from_config(const ConfigMap& cfg) {
    TrainConfig tc;
    tc.scenes = scene_from_config(cfg);
    tc.loss = loss_from_config(cfg);
    tc.epochs = get_size(cfg, "epochs", tc.epochs);
    tc.initial_lr = get_double(cfg, "initial_lr", tc.initial_lr);
    tc.weight_decay = get_double(cfg, "weight_decay", tc.weight_decay);
    tc.eval_scenes = get_size(cfg, "eval_scenes", tc.eval_scenes);
    tc.tau = get_double(cfg, "tau", tc.tau);
    tc.seed = get_u64(cfg, "seed", tc.scenes.seed);
    tc.epoch_evals = get_bool(cfg, "epoch_evals", tc.epoch_evals);
    return tc;
}

// Creates the directory and proves it is writable before any real output.
int ensure_out_dir(const std::string& out) {
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    const std::string probe = out + "/.probe";
    try {
        write_text_file(probe, "");
    } catch (const FormatError&) {
        std::cerr << "cannot write to output directory: " << out << "\n";
        return kExitCantWrite;
    }
    std::filesystem::remove(probe, ec);
    return 0;
}

// --- subcommands -----------------------------------------------------------

int run_loss(const LossFlags& flags, const std::string& pred_path,
             const std::string& label_path) {
    LossSpec spec;
    try {
        spec = flags.build();
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    ScalarField probs;
    LabelField labels;
    try {
        probs = load_scalar(pred_path);
        labels = load_labels(label_path);
    } catch (const FormatError& e) {
        std::cerr << e.what() << "\n";
        return io_exit_code(e);
    }
    const LossResult res = evaluate(spec, probs, labels);
    std::printf("{\"loss_kind\": \"%s\", \"value\": %s}\n",
                (flags.compound_with.empty() ? flags.kind
                                             : flags.kind + "+" + flags.compound_with)
                    .c_str(),
                format_short(res.value).c_str());
    return 0;
}

int run_eval(const std::string& pred_path, const std::string& label_path, double tau,
             const std::string& format) {
    if (format != "csv" && format != "json") {
        std::cerr << "unknown --format: " << format << "\n";
        return kExitUsage;
    }
    MetricPanel p;
    try {
        LabelField truth = load_labels(label_path);
        auto bytes = read_file(pred_path);
        if (is_tnsr(bytes)) {
            const Tnsr t = read_tnsr(bytes);
            if (t.dtype == 1) {
                p = panel(as_scalar(t), truth, tau);
            } else {
                LabelField pred = as_labels(t);
                int top = 1;
                for (int v : pred.data) top = std::max(top, v);
                for (int v : truth.data) top = std::max(top, v);
                p = panel_from_labels(pred, truth, static_cast<std::size_t>(top) + 1, tau);
            }
        } else {
            LabelField pred = read_pgm_labels(bytes);
            int top = 1;
            for (int v : pred.data) top = std::max(top, v);
            for (int v : truth.data) top = std::max(top, v);
            p = panel_from_labels(pred, truth, static_cast<std::size_t>(top) + 1, tau);
        }
    } catch (const FormatError& e) {
        std::cerr << e.what() << "\n";
        return io_exit_code(e);
    }
    std::fputs(format == "csv" ? panel_csv(p).c_str() : panel_json(p).c_str(), stdout);
    return 0;
}

int run_gradcheck(const LossFlags& flags, std::size_t trials, std::uint64_t seed, bool unfrozen) {
    LossSpec spec;
    try {
        spec = flags.build();
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    GradReport rep;
    if (unfrozen && spec.kind == LossKind::pm_dice) {
        // The stop-gradient witness: unfrozen differences must disagree.
        LossSpec witness_spec;
        ScalarField probs;
        LabelField labels;
        detach_witness(witness_spec, probs, labels);
        witness_spec.pm_gamma = spec.pm_gamma;
        rep = finite_diff_report(witness_spec, probs, labels, 1e-6, false);
    } else {
        rep = grad_check(spec, trials, seed, 1e-6, !unfrozen);
    }
    std::printf("loss=%s trials=%zu max_rel_error=%s max_abs_error=%s at trial=%zu class=%zu "
                "pixel=%zu h=%s clipped=%d\n",
                flags.kind.c_str(), trials, format_short(rep.max_rel_error).c_str(),
                format_short(rep.max_abs_error).c_str(), rep.arg_trial, rep.arg_class,
                rep.arg_pixel, format_short(rep.h).c_str(), rep.clipped ? 1 : 0);
    return rep.max_rel_error < 1e-4 ? 0 : 1;
}

int run_synth(const std::string& config_path, const std::string& out) {
    ConfigMap cfg;
    try {
        auto bytes = read_file(config_path);
        cfg = parse_config(std::string(bytes.begin(), bytes.end()));
        require_keys(cfg, kSceneKeys);
    } catch (const FormatError& e) {
        std::cerr << e.what() << "\n";
        return io_exit_code(e);
    }
    SceneConfig sc;
    try {
        sc = scene_from_config(cfg);
        sc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("scene", std::string("invalid scene config: ") + e.what());
    }
    if (int rc = ensure_out_dir(out)) return rc;

    try {
        std::string manifest =
            "index,image,labels,big_radius,small_radius,big_row,big_col,small_row,small_col\n";
        for (std::size_t idx = 0; idx < sc.n_scenes; ++idx) {
            const Scene s = gen_scene(sc, idx);
            char image_name[32], label_name[32];
            std::snprintf(image_name, sizeof(image_name), "scene_%03zu.tnsr", idx);
            std::snprintf(label_name, sizeof(label_name), "scene_%03zu_labels.pgm", idx);
            write_file(out + "/" + image_name, write_tnsr(s.image));
            write_file(out + "/" + label_name, write_pgm(s.labels));
            manifest += std::to_string(idx) + "," + image_name + "," + label_name + "," +
                        format_full(s.big_radius) + "," + format_full(s.small_radius) + "," +
                        format_full(s.big_row) + "," + format_full(s.big_col) + "," +
                        format_full(s.small_row) + "," + format_full(s.small_col) + "\n";
        }
        write_text_file(out + "/manifest.csv", manifest);
    } catch (const FormatError& e) {
        std::cerr << e.what() << "\n";
        return kExitCantWrite;
    }
    std::printf("wrote %zu scenes to %s\n", sc.n_scenes, out.c_str());
    return 0;
}

int run_train(const std::string& config_path, const std::string& out) {
    ConfigMap cfg;
    try {
        auto bytes = read_file(config_path);
        cfg = parse_config(std::string(bytes.begin(), bytes.end()));
        require_keys(cfg, merge_keys({&kSceneKeys, &kTrainKeys}));
    } catch (const FormatError& e) {
        std::cerr << e.what() << "\n";
        return io_exit_code(e);
    }
    TrainConfig tc;
    try {
        tc = train_from_config(cfg);
        tc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("train", std::string("invalid training config: ") + e.what());
    }
    if (int rc = ensure_out_dir(out)) return rc;

    auto [model, history] = train(tc);
    const EpochEval final_eval = eval_model(model, tc);

    try {
        std::string hist = "iter,loss,lr\n";
        for (std::size_t i = 0; i < history.loss.size(); ++i)
            hist += std::to_string(i) + "," + format_full(history.loss[i]) + "," +
                    format_full(history.lr[i]) + "\n";
        write_text_file(out + "/history.csv", hist);

        if (!history.epochs.empty()) {
            std::string ep = "epoch,mdice,miou,mprec,mrec,mnsd,small_dice\n";
            for (std::size_t i = 0; i < history.epochs.size(); ++i) {
                const EpochEval& ev = history.epochs[i];
                ep += std::to_string(i) + "," + format_full(ev.panel.mdice) + "," +
                      format_full(ev.panel.miou) + "," + format_full(ev.panel.mprec) + "," +
                      format_full(ev.panel.mrec) + "," + format_full(ev.panel.mnsd) + "," +
                      format_full(ev.small_dice) + "\n";
            }
            write_text_file(out + "/epochs.csv", ep);
        }

        write_text_file(out + "/final_metrics.csv", panel_csv(final_eval.panel));
        write_text_file(out + "/final_metrics.json",
                        panel_json(final_eval.panel, ",\n  \"small_object_dice\": " +
                                                         format_full(final_eval.small_dice)));
    } catch (const FormatError& e) {
        std::cerr << e.what() << "\n";
        return kExitCantWrite;
    }
    std::printf("trained %zu iterations; held-out mdice %s\n", history.loss.size(),
                format_short(final_eval.panel.mdice).c_str());
    return 0;
}

int run_sweep(const std::string& config_path, const std::string& out) {
    ConfigMap cfg;
    try {
        auto bytes = read_file(config_path);
        cfg = parse_config(std::string(bytes.begin(), bytes.end()));
        require_keys(cfg, merge_keys({&kSceneKeys, &kTrainKeys, &kSweepKeys}));
    } catch (const FormatError& e) {
        std::cerr << e.what() << "\n";
        return io_exit_code(e);
    }
    TrainConfig base;
    try {
        base = train_from_config(cfg);
        base.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("train", std::string("invalid training config: ") + e.what());
    }
    base.epoch_evals = false;

    std::vector<std::pair<double, double>> pairs;
    const std::string pair_text = get_string(cfg, "gamma_pairs", "");
    if (!pair_text.empty()) {
        // "fg:bg,fg:bg" for per-class sweeps
        std::size_t pos = 0;
        while (pos < pair_text.size()) {
            auto comma = pair_text.find(',', pos);
            if (comma == std::string::npos) comma = pair_text.size();
            const std::string item = pair_text.substr(pos, comma - pos);
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw ConfigError("gamma_pairs",
                                  "config key gamma_pairs: expected fg:bg, got '" + item + "'");
            pairs.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
            pos = comma + 1;
        }
    } else {
        for (double g : parse_double_list(get_string(cfg, "gammas", "0.5,1,2,5"), "gammas"))
            pairs.emplace_back(g, g);
    }
    const auto seeds = parse_seed_list(get_string(cfg, "seeds", "1,2,3,4,5"), "seeds");

    if (int rc = ensure_out_dir(out)) return rc;
    const auto rows = gamma_sweep(base, pairs, seeds);
    try {
        std::string csv = "gamma_fg,gamma_bg,seed,mdice,miou,mprec,mrec,mnsd\n";
        for (const SweepRow& r : rows)
            csv += format_full(r.gamma_fg) + "," + format_full(r.gamma_bg) + "," +
                   std::to_string(r.seed) + "," + format_full(r.mdice) + "," +
                   format_full(r.miou) + "," + format_full(r.mprec) + "," + format_full(r.mrec) +
                   "," + format_full(r.mnsd) + "\n";
        write_text_file(out + "/sweep.csv", csv);
    } catch (const FormatError& e) {
        std::cerr << e.what() << "\n";
        return kExitCantWrite;
    }
    std::printf("wrote %zu sweep rows to %s/sweep.csv\n", rows.size(), out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loss, metric, and training workbench for imbalanced segmentation scenes"};
    app.require_subcommand(1);

    LossFlags loss_flags;
    std::string pred_path, label_path;
    auto* loss_cmd = app.add_subcommand("loss", "evaluate a loss on prediction/label files");
    loss_flags.attach(loss_cmd, true);
    loss_cmd->add_option("--pred", pred_path, "prediction file (tnsr probabilities)")->required();
    loss_cmd->add_option("--label", label_path, "label file (tnsr or pgm)")->required();

    std::string eval_pred, eval_label, eval_format = "csv";
    double eval_tau = 2.0;
    auto* eval_cmd = app.add_subcommand("eval", "metric panel for a prediction");
    eval_cmd->add_option("--pred", eval_pred, "prediction file (probabilities or labels)")
        ->required();
    eval_cmd->add_option("--label", eval_label, "ground-truth labels")->required();
    eval_cmd->add_option("--tau", eval_tau, "surface-distance tolerance in pixels");
    eval_cmd->add_option("--format", eval_format, "csv or json");

    LossFlags check_flags;
    std::size_t check_trials = 100;
    std::uint64_t check_seed = 1;
    bool check_unfrozen = false;
    auto* check_cmd = app.add_subcommand("gradcheck", "finite-difference gradient audit");
    check_flags.attach(check_cmd, true);
    check_cmd->add_option("--trials", check_trials, "number of random instances");
    check_cmd->add_option("--seed", check_seed, "instance stream seed");
    check_cmd->add_flag("--unfrozen", check_unfrozen,
                        "re-derive modulation per perturbation (violates the contract)");

    std::string synth_config, synth_out;
    auto* synth_cmd = app.add_subcommand("synth", "generate scenes to a directory");
    synth_cmd->add_option("--config", synth_config, "scene config file")->required();
    synth_cmd->add_option("--out", synth_out, "output directory")->required();

    std::string train_config, train_out;
    auto* train_cmd = app.add_subcommand("train", "train the linear model");
    train_cmd->add_option("--config", train_config, "training config file")->required();
    train_cmd->add_option("--out", train_out, "output directory")->required();

    std::string sweep_config, sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "train across a gamma grid");
    sweep_cmd->add_option("--config", sweep_config, "sweep config file")->required();
    sweep_cmd->add_option("--out", sweep_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*loss_cmd) return run_loss(loss_flags, pred_path, label_path);
        if (*eval_cmd) return run_eval(eval_pred, eval_label, eval_tau, eval_format);
        if (*check_cmd) return run_gradcheck(check_flags, check_trials, check_seed, check_unfrozen);
        if (*synth_cmd) return run_synth(synth_config, synth_out);
        if (*train_cmd) return run_train(train_config, train_out);
        if (*sweep_cmd) return run_sweep(sweep_config, sweep_out);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitShape;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitSoftware;
    }
    return kExitUsage;
}
