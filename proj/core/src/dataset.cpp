#include "gammabal/dataset.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gammabal/error.hpp"

namespace gammabal {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m;
    for (const auto& r : rows) {
        std::vector<double> tmp(r);
        m.push_row(tmp);
    }
    return m;
}

void Matrix::push_row(std::span<const double> values) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = values.size();
    }
    if (values.size() != cols_) {
        throw DataError("row width " + std::to_string(values.size()) +
                        " does not match matrix width " + std::to_string(cols_));
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

LabeledDataset::LabeledDataset(Matrix features, std::vector<int> labels, int positive_class)
    : features_(std::move(features)), labels_(std::move(labels)), positive_class_(positive_class) {
    if (features_.rows() != labels_.size()) {
        throw DataError("feature rows (" + std::to_string(features_.rows()) +
                        ") do not match label count (" + std::to_string(labels_.size()) + ")");
    }
    if (labels_.empty()) {
        throw EmptyInputError("dataset has no samples");
    }
    if (features_.cols() == 0) {
        throw DataError("dataset has no features");
    }
    for (double v : features_.data()) {
        if (!std::isfinite(v)) {
            throw DataError("non-finite feature value");
        }
    }
    for (int y : labels_) {
        if (y != 0 && y != 1) {
            throw DataError("label " + std::to_string(y) + " is not in {0,1}");
        }
    }
    if (positive_class_ != 0 && positive_class_ != 1) {
        throw DataError("positive class " + std::to_string(positive_class_) + " is not in {0,1}");
    }
}

ClassSummary class_counts(const LabeledDataset& ds) {
    std::size_t count[2] = {0, 0};
    for (int y : ds.labels()) {
        ++count[y];
    }
    if (count[0] == 0 || count[1] == 0) {
        throw EmptyClassError("class " + std::to_string(count[0] == 0 ? 0 : 1) +
                              " has no samples");
    }
    ClassSummary s;
    const int pos = ds.positive_class();
    if (count[0] == count[1]) {
        s.minority_label = pos;
    } else {
        s.minority_label = count[0] < count[1] ? 0 : 1;
    }
    s.majority_label = 1 - s.minority_label;
    s.minority_count = count[s.minority_label];
    s.majority_count = count[s.majority_label];
    s.deficit = s.majority_count - s.minority_count;
    s.ratio = static_cast<double>(s.majority_count) / static_cast<double>(s.minority_count);
    return s;
}

ScalingParams fit_min_max(const LabeledDataset& ds) {
    const std::size_t d = ds.n_features();
    ScalingParams p;
    p.min.assign(ds.row(0).begin(), ds.row(0).end());
    p.max = p.min;
    for (std::size_t i = 1; i < ds.n_samples(); ++i) {
        const auto r = ds.row(i);
        for (std::size_t j = 0; j < d; ++j) {
            p.min[j] = std::min(p.min[j], r[j]);
            p.max[j] = std::max(p.max[j], r[j]);
        }
    }
    return p;
}

LabeledDataset apply_min_max(const LabeledDataset& ds, const ScalingParams& params) {
    const std::size_t d = ds.n_features();
    if (params.min.size() != d || params.max.size() != d) {
        throw DataError("scaling params fitted on a different feature count");
    }
    Matrix scaled(ds.n_samples(), d);
    for (std::size_t i = 0; i < ds.n_samples(); ++i) {
        const auto r = ds.row(i);
        for (std::size_t j = 0; j < d; ++j) {
            const double range = params.max[j] - params.min[j];
            scaled(i, j) = range > 0.0 ? (r[j] - params.min[j]) / range : 0.0;
        }
    }
    return {std::move(scaled), ds.labels(), ds.positive_class()};
}

ClassSplit split_by_class(const LabeledDataset& ds) {
    const ClassSummary s = class_counts(ds);
    ClassSplit out;
    out.minority_rows.reserve(s.minority_count);
    out.majority_rows.reserve(s.majority_count);
    for (std::size_t i = 0; i < ds.n_samples(); ++i) {
        if (ds.label(i) == s.minority_label) {
            out.minority_rows.push_back(i);
        } else {
            out.majority_rows.push_back(i);
        }
    }
    return out;
}

LabeledDataset subset(const LabeledDataset& ds, std::span<const std::size_t> rows) {
    Matrix m(rows.size(), ds.n_features());
    std::vector<int> labels(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto src = ds.row(rows[i]);
        std::copy(src.begin(), src.end(), m.row(i).begin());
        labels[i] = ds.label(rows[i]);
    }
    return {std::move(m), std::move(labels), ds.positive_class()};
}

}  // namespace gammabal
