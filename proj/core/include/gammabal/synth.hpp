#ifndef GAMMABAL_SYNTH_HPP
#define GAMMABAL_SYNTH_HPP

#include <cstdint>

#include "gammabal/dataset.hpp"

namespace gammabal {

/// Two-dimensional benchmark geometry: majority points scattered along the
/// line y = x, minority points on two flanks offset perpendicular to it.
/// The flank offset is well clear of the majority band while minority points
/// sit far apart along their flank, so segment interpolation between minority
/// neighbors tends to cross the majority band.
struct SynthSpec {
    std::size_t n_total = 5500;
    double minority_frac = 0.10;
    double line_length = 10.0;
    double majority_noise = 0.3;    // vertical sigma of the majority band
    double minority_offset = 1.5;   // vertical distance of each flank from y = x
    double minority_noise = 0.2;    // perpendicular sigma of the flanks
    std::uint64_t seed = 0;

    std::size_t minority_count() const;
    std::size_t majority_count() const { return n_total - minority_count(); }
};

/// Majority rows first (label 0), then the upper flank and the lower flank
/// (label 1, the positive class). Deterministic under spec.seed; throws
/// ConfigError on invalid geometry.
LabeledDataset generate_synthetic(const SynthSpec& spec);

}  // namespace gammabal

#endif
