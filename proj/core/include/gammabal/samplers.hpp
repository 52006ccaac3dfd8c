#ifndef GAMMABAL_SAMPLERS_HPP
#define GAMMABAL_SAMPLERS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammabal/dataset.hpp"
#include "gammabal/gamma.hpp"

namespace gammabal {

enum class SampleMethod { none, gamma, smote, adasyn, ros, rus };

std::string_view to_string(SampleMethod method);

/// Parses a method name; throws ConfigError on an unknown name.
SampleMethod parse_method(std::string_view name);

/// One resampling run. Defaults reproduce the reference setup: k = 3 neighbors
/// and base gamma (alpha = 2, theta = 1/8).
struct SamplerSpec {
    SampleMethod method = SampleMethod::gamma;
    double alpha = 2.0;
    double theta = 0.125;
    std::size_t k_neighbors = 3;
    std::uint64_t seed = 0;

    GammaParams gamma_params() const { return {alpha, theta}; }
};

/// Origin of one synthetic row: source row p, chosen neighbor row p', and the
/// raw draw (gamma t, or the uniform u for smote/adasyn; 0 for ros duplicates).
/// Row indices refer to the input dataset.
struct Provenance {
    std::size_t source_row = 0;
    std::size_t neighbor_row = 0;
    double draw = 0.0;
};

struct ResampleResult {
    LabeledDataset dataset;
    /// Per output row; nonzero marks a generated/duplicated row.
    std::vector<std::uint8_t> synthetic;
    /// One entry per synthetic row, in output order.
    std::vector<Provenance> provenance;
    /// Input row index of each non-synthetic output row, in output order.
    /// Identity for the oversamplers; the kept subset for rus.
    std::vector<std::size_t> original_rows;

    std::size_t synthetic_count() const { return provenance.size(); }
};

/// New point q = p + (t - m) * (p' - p); t - m is the scaling factor along the
/// neighbor direction, with m the mode of the configured gamma.
std::vector<double> synth_point(std::span<const double> p, std::span<const double> p_prime,
                                double t, double m);

/// Gamma-distribution oversampling: appends exactly deficit-many minority
/// points, each generated from a uniformly drawn minority source row, one of
/// its k nearest minority neighbors, and a Gamma(alpha, theta) draw.
ResampleResult gamma_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec);

/// SMOTE: uniform interpolation q = p + u*(p' - p), u in [0,1).
ResampleResult smote_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec);

/// ADASYN: SMOTE-style generation with per-point allocation proportional to
/// the majority fraction among each minority point's k nearest neighbors in
/// the full dataset (largest-remainder rounding, exact balance).
ResampleResult adasyn_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec);

/// Random oversampling: duplicates uniformly chosen minority rows.
ResampleResult ros_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec);

/// Random undersampling: keeps a uniform without-replacement subset of
/// majority rows of minority size, original row order preserved.
ResampleResult rus_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec);

/// Dispatch on spec.method; method none returns the input unchanged.
ResampleResult fit_resample(const LabeledDataset& ds, const SamplerSpec& spec);

}  // namespace gammabal

#endif
