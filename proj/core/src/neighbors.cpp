#include "gammabal/neighbors.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "gammabal/error.hpp"

namespace gammabal {

NeighborIndex::NeighborIndex(Matrix points) : points_(std::move(points)) {
    if (points_.rows() == 0) {
        throw EmptyInputError("neighbor index needs at least one point");
    }
}

double NeighborIndex::squared_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double diff = a[j] - b[j];
        sum += diff * diff;
    }
    return sum;
}

std::vector<std::size_t> NeighborIndex::select(std::span<const double> query, std::size_t k,
                                               std::size_t exclude) const {
    const std::size_t n = points_.rows();
    std::vector<std::pair<double, std::size_t>> candidates;
    candidates.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == exclude) {
            continue;
        }
        candidates.emplace_back(squared_distance(query, points_.row(i)), i);
    }
    const std::size_t take = std::min(k, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + take, candidates.end());
    std::vector<std::size_t> out(take);
    for (std::size_t i = 0; i < take; ++i) {
        out[i] = candidates[i].second;
    }
    return out;
}

std::vector<std::size_t> NeighborIndex::k_nearest(std::size_t query_row, std::size_t k) const {
    return select(points_.row(query_row), k, query_row);
}

std::vector<std::size_t> NeighborIndex::k_nearest(std::span<const double> query,
                                                  std::size_t k) const {
    return select(query, k, std::numeric_limits<std::size_t>::max());
}

}  // namespace gammabal
