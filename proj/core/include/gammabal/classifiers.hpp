#ifndef GAMMABAL_CLASSIFIERS_HPP
#define GAMMABAL_CLASSIFIERS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "gammabal/dataset.hpp"
#include "gammabal/neighbors.hpp"

namespace gammabal {

/// k-nearest-neighbor vote classifier. score(x) is the fraction of positive
/// labels among the k_vote nearest training rows; predictions break the 0.5
/// tie toward positive.
class KnnModel {
public:
    double score(std::span<const double> x) const;
    int predict(std::span<const double> x) const;
    std::size_t k_vote() const { return k_vote_; }

private:
    friend KnnModel fit_knn(const LabeledDataset&, std::size_t);
    KnnModel(LabeledDataset train, std::size_t k_vote);

    LabeledDataset train_;
    std::shared_ptr<const NeighborIndex> index_;
    std::size_t k_vote_;
};

/// Throws ConfigError if k_vote is 0 or exceeds the training size.
KnnModel fit_knn(const LabeledDataset& train, std::size_t k_vote = 5);

struct ForestParams {
    std::size_t n_trees = 100;
    std::size_t max_depth = 12;
    std::size_t min_leaf = 1;
    /// Features considered per split; 0 means ceil(sqrt(n_features)).
    std::size_t features_per_split = 0;
    /// Debug switch: disable bagging so a single tree reproduces plain CART.
    bool bootstrap = true;
    std::uint64_t seed = 0;
};

/// Bagged CART trees split on Gini impurity with midpoint thresholds;
/// score(x) is the mean positive fraction of the reached leaves.
class ForestModel {
public:
    double score(std::span<const double> x) const;
    int predict(std::span<const double> x) const;
    std::size_t n_trees() const;

private:
    friend ForestModel fit_forest(const LabeledDataset&, const ForestParams&);
    struct Node {
        int feature = -1;  // -1 marks a leaf
        double threshold = 0.0;
        std::int32_t left = -1;
        std::int32_t right = -1;
        double positive_fraction = 0.0;
    };
    struct Tree {
        std::vector<Node> nodes;
    };

    ForestModel() = default;
    std::vector<Tree> trees_;
    int positive_class_ = 1;
};

/// Throws ConfigError on degenerate params and EmptyClassError when the
/// training set lacks a class. Deterministic under params.seed.
ForestModel fit_forest(const LabeledDataset& train, const ForestParams& params);

/// Constant-score baseline: always predicts the training majority class.
/// Its score is the training positive fraction, so every sample ties in
/// ranking metrics.
class MajorityModel {
public:
    double score(std::span<const double>) const { return score_; }
    int predict(std::span<const double>) const;

private:
    friend MajorityModel fit_majority(const LabeledDataset&);
    double score_ = 0.0;
    int majority_label_ = 0;
    int positive_class_ = 1;
};

MajorityModel fit_majority(const LabeledDataset& train);

enum class ClassifierKind { knn, forest, majority };

std::string_view to_string(ClassifierKind kind);
ClassifierKind parse_classifier(std::string_view name);

struct ClassifierSpec {
    ClassifierKind kind = ClassifierKind::knn;
    std::size_t knn_k_vote = 5;
    ForestParams forest;
};

/// Type-erased fitted classifier for harness code that iterates over kinds.
class TrainedModel {
public:
    TrainedModel(KnnModel model);
    TrainedModel(ForestModel model);
    TrainedModel(MajorityModel model);
    double score(std::span<const double> x) const { return score_(x); }
    int predict(std::span<const double> x) const { return predict_(x); }

private:
    std::function<double(std::span<const double>)> score_;
    std::function<int(std::span<const double>)> predict_;
};

TrainedModel fit_classifier(const LabeledDataset& train, const ClassifierSpec& spec,
                            std::uint64_t seed);

}  // namespace gammabal

#endif
