#ifndef GAMMABAL_EVAL_HPP
#define GAMMABAL_EVAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gammabal/classifiers.hpp"
#include "gammabal/dataset.hpp"
#include "gammabal/metrics.hpp"
#include "gammabal/samplers.hpp"

namespace gammabal {

struct FoldIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

/// Seeded stratified partition: folds are disjoint, cover all rows, and the
/// per-class counts across folds differ by at most one. Throws
/// TooFewSamplesError when a class has fewer than n_folds samples.
std::vector<FoldIndices> stratified_folds(const LabeledDataset& ds, std::size_t n_folds,
                                          std::uint64_t seed);

/// Cross-validated sampler-vs-classifier grid. Training folds are scaled
/// (optional) and balanced; test folds stay untouched and imbalanced.
struct ExperimentConfig {
    std::vector<SamplerSpec> samplers;
    std::vector<ClassifierSpec> classifiers;
    std::size_t n_folds = 5;
    std::uint64_t seed = 0;
    bool scale = true;
};

struct CellReport {
    std::string sampler;
    std::string classifier;
    std::vector<MetricBundle> folds;
    MetricBundle mean;
};

struct DatasetSummary {
    std::size_t n_samples = 0;
    std::size_t n_features = 0;
    std::size_t majority_count = 0;
    std::size_t minority_count = 0;
    double ratio = 1.0;
    int positive_class = 1;
};

struct ExperimentReport {
    DatasetSummary dataset;
    ExperimentConfig config;        // seeds and hyperparameters, for the header
    std::vector<CellReport> cells;  // sampler-major, classifier-minor order

    const CellReport* find(std::string_view sampler, std::string_view classifier) const;
};

ExperimentReport run_experiment(const LabeledDataset& ds, const ExperimentConfig& cfg);

}  // namespace gammabal

#endif
