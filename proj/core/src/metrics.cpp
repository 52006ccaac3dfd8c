#include "gammabal/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "gammabal/error.hpp"

namespace gammabal {

ConfusionCounts confusion(std::span<const int> labels, std::span<const int> predictions,
                          int positive_class) {
    ConfusionCounts c;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const bool actual_pos = labels[i] == positive_class;
        const bool predicted_pos = predictions[i] == positive_class;
        if (actual_pos && predicted_pos) ++c.tp;
        else if (!actual_pos && predicted_pos) ++c.fp;
        else if (actual_pos && !predicted_pos) ++c.fn;
        else ++c.tn;
    }
    return c;
}

Prf prf(const ConfusionCounts& c) {
    Prf out;
    const std::size_t predicted_pos = c.tp + c.fp;
    const std::size_t actual_pos = c.tp + c.fn;
    out.precision = predicted_pos > 0
                        ? static_cast<double>(c.tp) / static_cast<double>(predicted_pos)
                        : 0.0;
    out.recall = actual_pos > 0 ? static_cast<double>(c.tp) / static_cast<double>(actual_pos)
                                : 0.0;
    const double denom = out.precision + out.recall;
    out.f1 = denom > 0.0 ? 2.0 * out.precision * out.recall / denom : 0.0;
    return out;
}

double roc_auc(std::span<const double> scores, std::span<const int> labels, int positive_class) {
    const std::size_t n = scores.size();
    std::size_t n_pos = 0;
    for (int y : labels) {
        if (y == positive_class) ++n_pos;
    }
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw UndefinedMetricError("roc_auc needs both classes present");
    }

    // Rank-sum formulation of the Mann-Whitney statistic; tied scores share
    // the mean of their rank range, which credits each tied pair with 0.5.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) {
            ++j;
        }
        // 1-based ranks i+1 .. j share the mean rank.
        const double mean_rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t t = i; t < j; ++t) {
            if (labels[order[t]] == positive_class) {
                rank_sum_pos += mean_rank;
            }
        }
        i = j;
    }
    const double u = rank_sum_pos - 0.5 * static_cast<double>(n_pos) *
                                        static_cast<double>(n_pos + 1);
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

double average_precision(std::span<const double> scores, std::span<const int> labels,
                         int positive_class) {
    const std::size_t n = scores.size();
    std::size_t n_pos = 0;
    for (int y : labels) {
        if (y == positive_class) ++n_pos;
    }
    if (n_pos == 0) {
        throw UndefinedMetricError("average_precision needs at least one positive");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    double sum = 0.0;
    std::size_t seen_pos = 0;
    for (std::size_t rank = 0; rank < n; ++rank) {
        if (labels[order[rank]] == positive_class) {
            ++seen_pos;
            sum += static_cast<double>(seen_pos) / static_cast<double>(rank + 1);
        }
    }
    return sum / static_cast<double>(n_pos);
}

MetricBundle evaluate_scores(std::span<const double> scores, std::span<const int> labels,
                             int positive_class, double threshold) {
    std::vector<int> predictions(scores.size());
    const int negative = positive_class == 1 ? 0 : 1;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        predictions[i] = scores[i] >= threshold ? positive_class : negative;
    }
    const Prf p = prf(confusion(labels, predictions, positive_class));
    MetricBundle b;
    b.precision = p.precision;
    b.recall = p.recall;
    b.f1 = p.f1;
    b.roc_auc = roc_auc(scores, labels, positive_class);
    b.avg_precision = average_precision(scores, labels, positive_class);
    return b;
}

}  // namespace gammabal
