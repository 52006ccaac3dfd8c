// Command-line front end: synth (generate the benchmark dataset), balance
// (resample one CSV), benchmark (cross-validated sampler comparison).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gammabal/csv.hpp"
#include "gammabal/dataset.hpp"
#include "gammabal/error.hpp"
#include "gammabal/eval.hpp"
#include "gammabal/report.hpp"
#include "gammabal/samplers.hpp"
#include "gammabal/synth.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitRuntime = 4;

struct BalanceOptions {
    std::string input;
    std::string output;
    std::string provenance;
    std::string method = "gamma";
    double alpha = 2.0;
    double theta = 0.125;
    std::size_t k = 3;
    std::uint64_t seed = 42;
    std::string label_col;
    std::string positive_label;
    bool no_scale = false;
};

struct BenchmarkOptions {
    std::string input;
    std::string out;
    std::vector<std::string> methods{"none", "gamma", "smote", "adasyn", "ros", "rus"};
    std::vector<std::string> classifiers{"knn", "forest"};
    std::size_t folds = 5;
    std::uint64_t seed = 42;
    double alpha = 2.0;
    double theta = 0.125;
    std::size_t k = 3;
    std::size_t knn_k_vote = 5;
    std::string report = "markdown";
    std::string label_col;
    std::string positive_label;
    bool no_scale = false;
};

struct SynthOptions {
    std::string output;
    std::size_t n = 5500;
    double minority_frac = 0.10;
    std::uint64_t seed = 42;
    gammabal::SynthSpec geometry;  // line/noise defaults
};

void add_seed_option(CLI::App* cmd, std::uint64_t& seed) {
    cmd->add_option("--seed", seed, "Root RNG seed")
        ->envname("GAMMA_BALANCE_SEED")
        ->capture_default_str();
}

gammabal::CsvSchema make_schema(const std::string& label_col, const std::string& positive) {
    gammabal::CsvSchema schema;
    schema.label_column = label_col;
    schema.positive_label = positive;
    return schema;
}

int run_balance(const BalanceOptions& opt) {
    using namespace gammabal;

    const CsvDataset input = read_csv(opt.input, make_schema(opt.label_col, opt.positive_label));

    SamplerSpec spec;
    spec.method = parse_method(opt.method);
    if (spec.method == SampleMethod::none) {
        throw ConfigError("balance requires one of gamma|smote|adasyn|ros|rus");
    }
    spec.alpha = opt.alpha;
    spec.theta = opt.theta;
    spec.k_neighbors = opt.k;
    spec.seed = opt.seed;

    const LabeledDataset& raw = input.data;
    ResampleResult result;
    LabeledDataset output;
    if (opt.no_scale) {
        result = fit_resample(raw, spec);
        output = result.dataset;
    } else {
        // Neighbor search runs in min-max-scaled space; the output is rebuilt
        // in the user's original units from the recorded provenance, keeping
        // original rows bit-exact.
        const ScalingParams scaling = fit_min_max(raw);
        result = fit_resample(apply_min_max(raw, scaling), spec);

        Matrix rebuilt(result.dataset.n_samples(), raw.n_features());
        std::size_t original_at = 0;
        std::size_t synthetic_at = 0;
        const double mode = spec.method == SampleMethod::gamma ? spec.gamma_params().mode() : 0.0;
        for (std::size_t i = 0; i < result.dataset.n_samples(); ++i) {
            auto dst = rebuilt.row(i);
            if (!result.synthetic[i]) {
                const auto src = raw.row(result.original_rows[original_at++]);
                std::copy(src.begin(), src.end(), dst.begin());
                continue;
            }
            const Provenance& p = result.provenance[synthetic_at++];
            if (spec.method == SampleMethod::ros) {
                const auto src = raw.row(p.source_row);
                std::copy(src.begin(), src.end(), dst.begin());
            } else {
                const auto q = synth_point(raw.row(p.source_row), raw.row(p.neighbor_row),
                                           p.draw, mode);
                std::copy(q.begin(), q.end(), dst.begin());
            }
        }
        output = LabeledDataset(std::move(rebuilt), result.dataset.labels(),
                                raw.positive_class());
    }

    CsvDataset out = input;
    out.data = std::move(output);
    write_csv(out, std::filesystem::path(opt.output));
    if (!opt.provenance.empty()) {
        write_provenance(result, std::filesystem::path(opt.provenance));
    }

    const ClassSummary counts = class_counts(out.data);
    std::cerr << "wrote " << out.data.n_samples() << " rows (" << counts.majority_count << "/"
              << counts.minority_count << " per class, " << result.synthetic_count()
              << " synthetic) to " << opt.output << "\n";
    return 0;
}

int run_benchmark(const BenchmarkOptions& opt) {
    using namespace gammabal;

    const CsvDataset input = read_csv(opt.input, make_schema(opt.label_col, opt.positive_label));

    ExperimentConfig cfg;
    cfg.n_folds = opt.folds;
    cfg.seed = opt.seed;
    cfg.scale = !opt.no_scale;
    for (const auto& name : opt.methods) {
        SamplerSpec spec;
        spec.method = parse_method(name);
        spec.alpha = opt.alpha;
        spec.theta = opt.theta;
        spec.k_neighbors = opt.k;
        cfg.samplers.push_back(spec);
    }
    for (const auto& name : opt.classifiers) {
        ClassifierSpec spec;
        spec.kind = parse_classifier(name);
        spec.knn_k_vote = opt.knn_k_vote;
        cfg.classifiers.push_back(spec);
    }

    const ExperimentReport report = run_experiment(input.data, cfg);
    const std::string text = render_report(report, parse_report_format(opt.report));
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(opt.out);
        if (!file) {
            throw IoError("cannot open '" + opt.out + "' for writing");
        }
        file << text;
    }
    return 0;
}

int run_synth(const SynthOptions& opt) {
    using namespace gammabal;

    SynthSpec spec = opt.geometry;
    spec.n_total = opt.n;
    spec.minority_frac = opt.minority_frac;
    spec.seed = opt.seed;

    CsvDataset out;
    out.data = generate_synthetic(spec);
    out.feature_names = {"x", "y"};
    out.label_name = "label";
    out.label_position = 2;
    out.label_tokens = {"0", "1"};
    write_csv(out, std::filesystem::path(opt.output));
    std::cerr << "wrote " << out.data.n_samples() << " rows (" << spec.majority_count() << "/"
              << spec.minority_count() << " per class) to " << opt.output << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gamma-distribution oversampling and resampling benchmarks "
                 "for imbalanced binary classification data"};
    app.require_subcommand(1);

    BalanceOptions balance;
    auto* balance_cmd = app.add_subcommand("balance", "Balance one CSV dataset");
    balance_cmd->add_option("--input", balance.input, "Input CSV")->required();
    balance_cmd->add_option("--output", balance.output, "Balanced output CSV")->required();
    balance_cmd->add_option("--method", balance.method, "Resampling method")
        ->check(CLI::IsMember({"gamma", "smote", "adasyn", "ros", "rus"}))
        ->capture_default_str();
    balance_cmd->add_option("--alpha", balance.alpha, "Gamma shape (>= 1)")
        ->capture_default_str();
    balance_cmd->add_option("--theta", balance.theta, "Gamma scale (> 0)")
        ->capture_default_str();
    balance_cmd->add_option("--k", balance.k, "Nearest neighbors used for generation")
        ->capture_default_str();
    add_seed_option(balance_cmd, balance.seed);
    balance_cmd->add_option("--provenance", balance.provenance,
                            "Sidecar CSV of (source,neighbor,draw) per synthetic row");
    balance_cmd->add_option("--label-col", balance.label_col,
                            "Label column name (default: last column)");
    balance_cmd->add_option("--positive-label", balance.positive_label,
                            "Positive/minority label token (default: auto-detect)");
    balance_cmd->add_flag("--no-scale", balance.no_scale,
                          "Skip internal min-max scaling for neighbor search");

    BenchmarkOptions benchmark;
    auto* benchmark_cmd =
        app.add_subcommand("benchmark", "Cross-validated sampler/classifier comparison");
    benchmark_cmd->add_option("--input", benchmark.input, "Input CSV")->required();
    benchmark_cmd->add_option("--methods", benchmark.methods, "Samplers to compare")
        ->delimiter(',')
        ->check(CLI::IsMember({"none", "gamma", "smote", "adasyn", "ros", "rus"}))
        ->capture_default_str();
    benchmark_cmd->add_option("--classifiers", benchmark.classifiers, "Classifiers to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"knn", "forest"}))
        ->capture_default_str();
    benchmark_cmd->add_option("--folds", benchmark.folds, "Cross-validation folds")
        ->capture_default_str();
    add_seed_option(benchmark_cmd, benchmark.seed);
    benchmark_cmd->add_option("--alpha", benchmark.alpha, "Gamma shape")->capture_default_str();
    benchmark_cmd->add_option("--theta", benchmark.theta, "Gamma scale")->capture_default_str();
    benchmark_cmd->add_option("--k", benchmark.k, "Sampler nearest neighbors")
        ->capture_default_str();
    benchmark_cmd->add_option("--knn-votes", benchmark.knn_k_vote, "k-NN classifier votes")
        ->capture_default_str();
    benchmark_cmd->add_option("--report", benchmark.report, "Report format")
        ->check(CLI::IsMember({"markdown", "json", "csv"}))
        ->capture_default_str();
    benchmark_cmd->add_option("--out", benchmark.out, "Report file (default: stdout)");
    benchmark_cmd->add_option("--label-col", benchmark.label_col, "Label column name");
    benchmark_cmd->add_option("--positive-label", benchmark.positive_label,
                              "Positive/minority label token");
    benchmark_cmd->add_flag("--no-scale", benchmark.no_scale,
                            "Skip per-fold min-max scaling");

    SynthOptions synth;
    auto* synth_cmd = app.add_subcommand("synth", "Generate the synthetic line benchmark");
    synth_cmd->add_option("--output", synth.output, "Output CSV")->required();
    synth_cmd->add_option("--n", synth.n, "Total points")->capture_default_str();
    synth_cmd->add_option("--minority-frac", synth.minority_frac, "Minority share")
        ->capture_default_str();
    add_seed_option(synth_cmd, synth.seed);
    synth_cmd->add_option("--line-length", synth.geometry.line_length, "Majority line length")
        ->capture_default_str();
    synth_cmd
        ->add_option("--majority-noise", synth.geometry.majority_noise,
                     "Vertical sigma of the majority band")
        ->capture_default_str();
    synth_cmd
        ->add_option("--minority-offset", synth.geometry.minority_offset,
                     "Flank distance from the line")
        ->capture_default_str();
    synth_cmd
        ->add_option("--minority-noise", synth.geometry.minority_noise,
                     "Perpendicular sigma of the flanks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (balance_cmd->parsed()) return run_balance(balance);
        if (benchmark_cmd->parsed()) return run_benchmark(benchmark);
        if (synth_cmd->parsed()) return run_synth(synth);
    } catch (const gammabal::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gammabal::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const gammabal::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
