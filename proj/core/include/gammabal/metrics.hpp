#ifndef GAMMABAL_METRICS_HPP
#define GAMMABAL_METRICS_HPP

#include <cstddef>
#include <span>

namespace gammabal {

struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;
};

ConfusionCounts confusion(std::span<const int> labels, std::span<const int> predictions,
                          int positive_class);

struct Prf {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// precision = tp/(tp+fp), recall = tp/(tp+fn), f1 their harmonic mean;
/// every 0/0 resolves to 0.
Prf prf(const ConfusionCounts& c);

/// Probability that a random positive is scored above a random negative
/// (Mann-Whitney statistic; ties credited 0.5). Throws UndefinedMetricError
/// when either class is absent.
double roc_auc(std::span<const double> scores, std::span<const int> labels, int positive_class);

/// Mean precision at each newly recalled positive, scanning scores descending
/// with ties broken by ascending sample index. Throws UndefinedMetricError
/// when no positives exist.
double average_precision(std::span<const double> scores, std::span<const int> labels,
                         int positive_class);

struct MetricBundle {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double roc_auc = 0.0;
    double avg_precision = 0.0;
};

/// All metrics from raw scores; predictions are score >= threshold.
MetricBundle evaluate_scores(std::span<const double> scores, std::span<const int> labels,
                             int positive_class, double threshold = 0.5);

}  // namespace gammabal

#endif
