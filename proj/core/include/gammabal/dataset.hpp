#ifndef GAMMABAL_DATASET_HPP
#define GAMMABAL_DATASET_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gammabal {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    /// Appends a row; on the first append an empty matrix adopts the row's width.
    void push_row(std::span<const double> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Feature matrix plus binary labels in {0,1}; positive_class marks the
/// minority/positive label. Immutable after construction.
class LabeledDataset {
public:
    LabeledDataset() = default;

    /// Validates shape, label values and finiteness; throws DataError on violation.
    LabeledDataset(Matrix features, std::vector<int> labels, int positive_class = 1);

    std::size_t n_samples() const { return labels_.size(); }
    std::size_t n_features() const { return features_.cols(); }

    const Matrix& features() const { return features_; }
    std::span<const double> row(std::size_t i) const { return features_.row(i); }
    const std::vector<int>& labels() const { return labels_; }
    int label(std::size_t i) const { return labels_[i]; }
    int positive_class() const { return positive_class_; }

    bool operator==(const LabeledDataset&) const = default;

private:
    Matrix features_;
    std::vector<int> labels_;
    int positive_class_ = 1;
};

/// Class tally; deficit is the paper's N (majority minus minority count).
struct ClassSummary {
    std::size_t majority_count = 0;
    std::size_t minority_count = 0;
    std::size_t deficit = 0;
    double ratio = 1.0;
    int majority_label = 0;
    int minority_label = 1;
};

/// Tallies both classes; the minority is the less frequent label, ties resolved
/// toward the dataset's positive class. Throws EmptyClassError if a class is absent.
ClassSummary class_counts(const LabeledDataset& ds);

/// Per-feature min/max of a training set.
struct ScalingParams {
    std::vector<double> min;
    std::vector<double> max;
};

ScalingParams fit_min_max(const LabeledDataset& ds);

/// Maps each feature to (x - min) / (max - min); constant features map to 0.
/// Values outside the fitted range land outside [0,1] and are not clipped.
LabeledDataset apply_min_max(const LabeledDataset& ds, const ScalingParams& params);

/// Row indices per class, preserving original order.
struct ClassSplit {
    std::vector<std::size_t> minority_rows;
    std::vector<std::size_t> majority_rows;
};

ClassSplit split_by_class(const LabeledDataset& ds);

/// Dataset restricted to the given rows, in the given order.
LabeledDataset subset(const LabeledDataset& ds, std::span<const std::size_t> rows);

}  // namespace gammabal

#endif
