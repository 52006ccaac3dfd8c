#ifndef GAMMABAL_NEIGHBORS_HPP
#define GAMMABAL_NEIGHBORS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gammabal/dataset.hpp"

namespace gammabal {

/// Exact Euclidean k-nearest-neighbor queries over a fixed point set.
/// Brute-force: datasets in scope are small enough that exactness beats
/// any indexing structure. Immutable after construction; queries are pure.
class NeighborIndex {
public:
    /// Throws EmptyInputError when points has no rows.
    explicit NeighborIndex(Matrix points);

    static NeighborIndex build(Matrix points) { return NeighborIndex(std::move(points)); }

    std::size_t size() const { return points_.rows(); }
    std::size_t dim() const { return points_.cols(); }
    std::span<const double> point(std::size_t i) const { return points_.row(i); }

    /// The min(k, n-1) stored rows closest to stored row query_row, excluding
    /// the query row itself. Sorted ascending by distance, exact ties broken
    /// by ascending row index. Self-exclusion is by row identity, so duplicate
    /// points remain eligible neighbors.
    std::vector<std::size_t> k_nearest(std::size_t query_row, std::size_t k) const;

    /// The min(k, n) stored rows closest to an arbitrary query point (no
    /// exclusion), same ordering rules.
    std::vector<std::size_t> k_nearest(std::span<const double> query, std::size_t k) const;

    static double squared_distance(std::span<const double> a, std::span<const double> b);

private:
    std::vector<std::size_t> select(std::span<const double> query, std::size_t k,
                                    std::size_t exclude) const;

    Matrix points_;
};

}  // namespace gammabal

#endif
