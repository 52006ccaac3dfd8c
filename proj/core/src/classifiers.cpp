#include "gammabal/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "gammabal/error.hpp"
#include "gammabal/seeding.hpp"

namespace gammabal {

KnnModel::KnnModel(LabeledDataset train, std::size_t k_vote)
    : train_(std::move(train)),
      index_(std::make_shared<NeighborIndex>(train_.features())),
      k_vote_(k_vote) {}

KnnModel fit_knn(const LabeledDataset& train, std::size_t k_vote) {
    if (k_vote == 0 || k_vote > train.n_samples()) {
        throw ConfigError("k_vote must be in [1, training size], got " +
                          std::to_string(k_vote));
    }
    return KnnModel(train, k_vote);
}

double KnnModel::score(std::span<const double> x) const {
    const auto nbrs = index_->k_nearest(x, k_vote_);
    std::size_t positives = 0;
    for (std::size_t row : nbrs) {
        if (train_.label(row) == train_.positive_class()) {
            ++positives;
        }
    }
    return static_cast<double>(positives) / static_cast<double>(nbrs.size());
}

int KnnModel::predict(std::span<const double> x) const {
    const int negative = 1 - train_.positive_class();
    return score(x) >= 0.5 ? train_.positive_class() : negative;
}

namespace {

double gini(std::size_t pos, std::size_t total) {
    if (total == 0) return 0.0;
    const double p = static_cast<double>(pos) / static_cast<double>(total);
    return 2.0 * p * (1.0 - p);
}

struct TreeBuilder {
    const LabeledDataset& train;
    const ForestParams& params;
    std::size_t features_per_split;
    Rng rng;
    std::vector<ForestModel::Node>* nodes;

    // value/label scratch reused across nodes
    std::vector<std::pair<double, int>> sorted;

    std::int32_t build(std::vector<std::size_t>& samples, std::size_t depth) {
        const std::size_t n = samples.size();
        std::size_t pos = 0;
        for (std::size_t s : samples) {
            if (train.label(s) == train.positive_class()) ++pos;
        }

        const auto make_leaf = [&]() {
            ForestModel::Node leaf;
            leaf.positive_fraction = static_cast<double>(pos) / static_cast<double>(n);
            nodes->push_back(leaf);
            return static_cast<std::int32_t>(nodes->size() - 1);
        };

        if (pos == 0 || pos == n || depth >= params.max_depth || n < 2 * params.min_leaf) {
            return make_leaf();
        }

        // Candidate features for this split.
        const std::size_t d = train.n_features();
        std::vector<std::size_t> features(d);
        std::iota(features.begin(), features.end(), std::size_t{0});
        if (features_per_split < d) {
            for (std::size_t i = 0; i < features_per_split; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, d - 1);
                std::swap(features[i], features[pick(rng)]);
            }
            features.resize(features_per_split);
            std::sort(features.begin(), features.end());
        }

        const double parent = gini(pos, n);
        double best_score = parent - 1e-12;
        int best_feature = -1;
        double best_threshold = 0.0;

        for (std::size_t f : features) {
            sorted.clear();
            for (std::size_t s : samples) {
                sorted.emplace_back(train.features()(s, f), train.label(s));
            }
            std::sort(sorted.begin(), sorted.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

            std::size_t left_n = 0;
            std::size_t left_pos = 0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                ++left_n;
                if (sorted[i].second == train.positive_class()) ++left_pos;
                if (sorted[i].first == sorted[i + 1].first) {
                    continue;  // no boundary between equal values
                }
                if (left_n < params.min_leaf || n - left_n < params.min_leaf) {
                    continue;
                }
                const double threshold =
                    sorted[i].first + 0.5 * (sorted[i + 1].first - sorted[i].first);
                const double weighted =
                    (static_cast<double>(left_n) * gini(left_pos, left_n) +
                     static_cast<double>(n - left_n) * gini(pos - left_pos, n - left_n)) /
                    static_cast<double>(n);
                if (weighted < best_score) {
                    best_score = weighted;
                    best_feature = static_cast<int>(f);
                    best_threshold = threshold;
                }
            }
        }

        if (best_feature < 0) {
            return make_leaf();
        }

        std::vector<std::size_t> left, right;
        left.reserve(n);
        right.reserve(n);
        for (std::size_t s : samples) {
            if (train.features()(s, static_cast<std::size_t>(best_feature)) < best_threshold) {
                left.push_back(s);
            } else {
                right.push_back(s);
            }
        }
        samples.clear();
        samples.shrink_to_fit();

        ForestModel::Node split;
        split.feature = best_feature;
        split.threshold = best_threshold;
        nodes->push_back(split);
        const auto index = static_cast<std::int32_t>(nodes->size() - 1);
        const std::int32_t left_index = build(left, depth + 1);
        const std::int32_t right_index = build(right, depth + 1);
        (*nodes)[index].left = left_index;
        (*nodes)[index].right = right_index;
        return index;
    }
};

double tree_score(const std::vector<ForestModel::Node>& nodes, std::span<const double> x) {
    std::int32_t at = 0;
    for (;;) {
        const auto& node = nodes[at];
        if (node.feature < 0) {
            return node.positive_fraction;
        }
        at = x[static_cast<std::size_t>(node.feature)] < node.threshold ? node.left
                                                                        : node.right;
    }
}

}  // namespace

ForestModel fit_forest(const LabeledDataset& train, const ForestParams& params) {
    if (train.n_samples() < 2) {
        throw ConfigError("forest training needs at least 2 rows");
    }
    class_counts(train);  // rejects single-class input
    if (params.n_trees == 0 || params.max_depth == 0 || params.min_leaf == 0) {
        throw ConfigError("n_trees, max_depth and min_leaf must be positive");
    }
    std::size_t per_split = params.features_per_split;
    if (per_split == 0) {
        per_split = static_cast<std::size_t>(
            std::ceil(std::sqrt(static_cast<double>(train.n_features()))));
    }
    per_split = std::min(per_split, train.n_features());

    ForestModel model;
    model.positive_class_ = train.positive_class();
    model.trees_.resize(params.n_trees);
    const std::size_t n = train.n_samples();
    for (std::size_t t = 0; t < params.n_trees; ++t) {
        TreeBuilder builder{train, params, per_split, Rng(mix_seed(params.seed ^ (t + 1))),
                            &model.trees_[t].nodes, {}};
        std::vector<std::size_t> samples(n);
        if (params.bootstrap) {
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            for (auto& s : samples) {
                s = pick(builder.rng);
            }
        } else {
            std::iota(samples.begin(), samples.end(), std::size_t{0});
        }
        builder.build(samples, 0);
    }
    return model;
}

double ForestModel::score(std::span<const double> x) const {
    double sum = 0.0;
    for (const auto& tree : trees_) {
        sum += tree_score(tree.nodes, x);
    }
    return sum / static_cast<double>(trees_.size());
}

int ForestModel::predict(std::span<const double> x) const {
    return score(x) >= 0.5 ? positive_class_ : 1 - positive_class_;
}

std::size_t ForestModel::n_trees() const { return trees_.size(); }

MajorityModel fit_majority(const LabeledDataset& train) {
    const ClassSummary s = class_counts(train);
    MajorityModel model;
    model.majority_label_ = s.majority_label;
    model.positive_class_ = train.positive_class();
    std::size_t positives = 0;
    for (int y : train.labels()) {
        if (y == train.positive_class()) ++positives;
    }
    model.score_ = static_cast<double>(positives) / static_cast<double>(train.n_samples());
    return model;
}

int MajorityModel::predict(std::span<const double>) const { return majority_label_; }

std::string_view to_string(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::knn: return "knn";
        case ClassifierKind::forest: return "forest";
        case ClassifierKind::majority: return "majority";
    }
    return "unknown";
}

ClassifierKind parse_classifier(std::string_view name) {
    if (name == "knn") return ClassifierKind::knn;
    if (name == "forest") return ClassifierKind::forest;
    if (name == "majority") return ClassifierKind::majority;
    throw ConfigError("unknown classifier '" + std::string(name) + "'");
}

TrainedModel::TrainedModel(KnnModel model) {
    auto shared = std::make_shared<KnnModel>(std::move(model));
    score_ = [shared](std::span<const double> x) { return shared->score(x); };
    predict_ = [shared](std::span<const double> x) { return shared->predict(x); };
}

TrainedModel::TrainedModel(ForestModel model) {
    auto shared = std::make_shared<ForestModel>(std::move(model));
    score_ = [shared](std::span<const double> x) { return shared->score(x); };
    predict_ = [shared](std::span<const double> x) { return shared->predict(x); };
}

TrainedModel::TrainedModel(MajorityModel model) {
    auto shared = std::make_shared<MajorityModel>(std::move(model));
    score_ = [shared](std::span<const double> x) { return shared->score(x); };
    predict_ = [shared](std::span<const double> x) { return shared->predict(x); };
}

TrainedModel fit_classifier(const LabeledDataset& train, const ClassifierSpec& spec,
                            std::uint64_t seed) {
    switch (spec.kind) {
        case ClassifierKind::knn:
            return TrainedModel(fit_knn(train, spec.knn_k_vote));
        case ClassifierKind::forest: {
            ForestParams params = spec.forest;
            params.seed = seed;
            return TrainedModel(fit_forest(train, params));
        }
        case ClassifierKind::majority:
            return TrainedModel(fit_majority(train));
    }
    throw ConfigError("unhandled classifier kind");
}

}  // namespace gammabal
