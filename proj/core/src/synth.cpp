#include "gammabal/synth.hpp"

#include <cmath>
#include <random>
#include <string>

#include "gammabal/error.hpp"
#include "gammabal/gamma.hpp"

namespace gammabal {

std::size_t SynthSpec::minority_count() const {
    return static_cast<std::size_t>(
        std::llround(static_cast<double>(n_total) * minority_frac));
}

LabeledDataset generate_synthetic(const SynthSpec& spec) {
    if (spec.n_total == 0 || !(spec.minority_frac > 0.0) || !(spec.minority_frac < 1.0)) {
        throw ConfigError("n_total must be positive and minority_frac in (0,1)");
    }
    const std::size_t n_minority = spec.minority_count();
    if (n_minority < 2 || n_minority >= spec.n_total) {
        throw ConfigError("minority share yields " + std::to_string(n_minority) +
                          " points; need at least 2 and fewer than n_total");
    }
    if (!(spec.line_length > 0.0) || !(spec.majority_noise >= 0.0) ||
        !(spec.minority_noise >= 0.0)) {
        throw ConfigError("geometry values must be positive");
    }
    if (!(spec.minority_offset > 2.0 * spec.majority_noise)) {
        throw ConfigError("minority offset must exceed twice the majority noise");
    }
    const std::size_t n_majority = spec.n_total - n_minority;

    Rng rng(spec.seed);
    std::uniform_real_distribution<double> along(0.0, spec.line_length);
    std::normal_distribution<double> maj_noise(0.0, spec.majority_noise);
    std::normal_distribution<double> min_noise(0.0, spec.minority_noise);

    Matrix points(spec.n_total, 2);
    std::vector<int> labels(spec.n_total, 0);

    for (std::size_t i = 0; i < n_majority; ++i) {
        const double x = along(rng);
        points(i, 0) = x;
        points(i, 1) = x + maj_noise(rng);
    }

    // Perpendicular unit vector of y = x.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t n_upper = (n_minority + 1) / 2;
    for (std::size_t i = 0; i < n_minority; ++i) {
        const double side = i < n_upper ? 1.0 : -1.0;
        const double x = along(rng);
        const double jitter = min_noise(rng);
        const std::size_t row = n_majority + i;
        points(row, 0) = x - jitter * inv_sqrt2;
        points(row, 1) = x + side * spec.minority_offset + jitter * inv_sqrt2;
        labels[row] = 1;
    }

    return {std::move(points), std::move(labels), /*positive_class=*/1};
}

}  // namespace gammabal
