#include "gammabal/eval.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "gammabal/error.hpp"
#include "gammabal/seeding.hpp"

namespace gammabal {

std::vector<FoldIndices> stratified_folds(const LabeledDataset& ds, std::size_t n_folds,
                                          std::uint64_t seed) {
    if (n_folds < 2) {
        throw ConfigError("cross validation needs at least 2 folds");
    }
    std::vector<std::size_t> by_class[2];
    for (std::size_t i = 0; i < ds.n_samples(); ++i) {
        by_class[ds.label(i)].push_back(i);
    }
    for (int c = 0; c < 2; ++c) {
        if (by_class[c].size() < n_folds) {
            throw TooFewSamplesError("class " + std::to_string(c) + " has " +
                                     std::to_string(by_class[c].size()) +
                                     " samples, fewer than " + std::to_string(n_folds) +
                                     " folds");
        }
    }

    Rng rng(mix_seed(seed));
    std::vector<std::vector<std::size_t>> test_sets(n_folds);
    for (int c = 0; c < 2; ++c) {
        auto& rows = by_class[c];
        std::shuffle(rows.begin(), rows.end(), rng);
        const std::size_t base = rows.size() / n_folds;
        const std::size_t extra = rows.size() % n_folds;
        std::size_t at = 0;
        for (std::size_t f = 0; f < n_folds; ++f) {
            const std::size_t take = base + (f < extra ? 1 : 0);
            test_sets[f].insert(test_sets[f].end(), rows.begin() + at, rows.begin() + at + take);
            at += take;
        }
    }

    std::vector<FoldIndices> folds(n_folds);
    for (std::size_t f = 0; f < n_folds; ++f) {
        auto& test = test_sets[f];
        std::sort(test.begin(), test.end());
        folds[f].test = test;
        folds[f].train.reserve(ds.n_samples() - test.size());
        std::size_t at = 0;
        for (std::size_t i = 0; i < ds.n_samples(); ++i) {
            if (at < test.size() && test[at] == i) {
                ++at;
            } else {
                folds[f].train.push_back(i);
            }
        }
    }
    return folds;
}

const CellReport* ExperimentReport::find(std::string_view sampler,
                                         std::string_view classifier) const {
    for (const auto& cell : cells) {
        if (cell.sampler == sampler && cell.classifier == classifier) {
            return &cell;
        }
    }
    return nullptr;
}

namespace {

MetricBundle mean_bundle(const std::vector<MetricBundle>& folds) {
    MetricBundle mean;
    for (const auto& b : folds) {
        mean.precision += b.precision;
        mean.recall += b.recall;
        mean.f1 += b.f1;
        mean.roc_auc += b.roc_auc;
        mean.avg_precision += b.avg_precision;
    }
    const auto n = static_cast<double>(folds.size());
    mean.precision /= n;
    mean.recall /= n;
    mean.f1 /= n;
    mean.roc_auc /= n;
    mean.avg_precision /= n;
    return mean;
}

}  // namespace

ExperimentReport run_experiment(const LabeledDataset& ds, const ExperimentConfig& cfg) {
    if (cfg.samplers.empty() || cfg.classifiers.empty()) {
        throw ConfigError("experiment needs at least one sampler and one classifier");
    }
    const ClassSummary summary = class_counts(ds);

    ExperimentReport report;
    report.dataset = {ds.n_samples(), ds.n_features(),     summary.majority_count,
                      summary.minority_count, summary.ratio, ds.positive_class()};
    report.config = cfg;

    const auto folds = stratified_folds(ds, cfg.n_folds, cfg.seed);

    for (const auto& sampler : cfg.samplers) {
        for (const auto& classifier : cfg.classifiers) {
            CellReport cell;
            cell.sampler = to_string(sampler.method);
            cell.classifier = std::string(to_string(classifier.kind));
            for (std::size_t f = 0; f < folds.size(); ++f) {
                const std::uint64_t cell_seed =
                    derive_seed(cfg.seed, cell.sampler, cell.classifier, f);

                LabeledDataset train = subset(ds, folds[f].train);
                LabeledDataset test = subset(ds, folds[f].test);
                if (cfg.scale) {
                    const ScalingParams scaling = fit_min_max(train);
                    train = apply_min_max(train, scaling);
                    test = apply_min_max(test, scaling);
                }

                SamplerSpec fold_sampler = sampler;
                fold_sampler.seed = mix_seed(cell_seed ^ 0x5a5a5a5a5a5a5a5aULL);
                const ResampleResult balanced = fit_resample(train, fold_sampler);

                const TrainedModel model = fit_classifier(
                    balanced.dataset, classifier, mix_seed(cell_seed ^ 0xc3c3c3c3c3c3c3c3ULL));

                std::vector<double> scores(test.n_samples());
                for (std::size_t i = 0; i < test.n_samples(); ++i) {
                    scores[i] = model.score(test.row(i));
                }
                cell.folds.push_back(
                    evaluate_scores(scores, test.labels(), test.positive_class()));
            }
            cell.mean = mean_bundle(cell.folds);
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

}  // namespace gammabal
