#include "gammabal/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "gammabal/error.hpp"
#include "gammabal/neighbors.hpp"

namespace gammabal {

namespace {

void check_spec(const SamplerSpec& spec) {
    if (spec.method == SampleMethod::gamma && spec.alpha < 1.0) {
        throw ConfigError("gamma sampling requires shape >= 1, got " +
                          std::to_string(spec.alpha));
    }
    if (spec.method == SampleMethod::gamma && !(spec.theta > 0.0)) {
        throw ConfigError("gamma sampling requires scale > 0, got " +
                          std::to_string(spec.theta));
    }
    if (spec.k_neighbors == 0) {
        throw ConfigError("k_neighbors must be positive");
    }
}

struct MinorityContext {
    ClassSummary summary;
    ClassSplit split;
    Matrix minority_points;
    // k nearest minority neighbors of each minority row (indices into
    // split.minority_rows), k clamped to minority_count - 1.
    std::vector<std::vector<std::size_t>> neighbors;
};

MinorityContext minority_context(const LabeledDataset& ds, const SamplerSpec& spec) {
    MinorityContext ctx;
    ctx.summary = class_counts(ds);
    if (ctx.summary.minority_count < 2) {
        throw TooFewMinorityError("oversampling needs at least 2 minority samples, got " +
                                  std::to_string(ctx.summary.minority_count));
    }
    ctx.split = split_by_class(ds);
    ctx.minority_points = Matrix(ctx.split.minority_rows.size(), ds.n_features());
    for (std::size_t i = 0; i < ctx.split.minority_rows.size(); ++i) {
        const auto src = ds.row(ctx.split.minority_rows[i]);
        std::copy(src.begin(), src.end(), ctx.minority_points.row(i).begin());
    }
    const NeighborIndex index(ctx.minority_points);
    const std::size_t k = std::min(spec.k_neighbors, ctx.summary.minority_count - 1);
    ctx.neighbors.resize(ctx.summary.minority_count);
    for (std::size_t i = 0; i < ctx.summary.minority_count; ++i) {
        ctx.neighbors[i] = index.k_nearest(i, k);
    }
    return ctx;
}

// Appends the input rows of ds plus the given synthetic minority rows.
ResampleResult assemble_oversampled(const LabeledDataset& ds, const Matrix& synthetic_rows,
                                    std::vector<Provenance> provenance, int minority_label) {
    Matrix features = ds.features();
    std::vector<int> labels = ds.labels();
    for (std::size_t i = 0; i < synthetic_rows.rows(); ++i) {
        features.push_row(synthetic_rows.row(i));
        labels.push_back(minority_label);
    }
    ResampleResult result;
    result.synthetic.assign(ds.n_samples(), 0);
    result.synthetic.insert(result.synthetic.end(), synthetic_rows.rows(), 1);
    result.provenance = std::move(provenance);
    result.original_rows.resize(ds.n_samples());
    std::iota(result.original_rows.begin(), result.original_rows.end(), std::size_t{0});
    result.dataset = LabeledDataset(std::move(features), std::move(labels), ds.positive_class());
    return result;
}

ResampleResult identity_result(const LabeledDataset& ds) {
    ResampleResult result;
    result.dataset = ds;
    result.synthetic.assign(ds.n_samples(), 0);
    result.original_rows.resize(ds.n_samples());
    std::iota(result.original_rows.begin(), result.original_rows.end(), std::size_t{0});
    return result;
}

// Interpolation-style generation shared by gamma and smote: per synthetic
// point draw a source minority row, one of its k nearest minority neighbors,
// and a scalar; emit q = p + scale * (p' - p).
ResampleResult interpolate_resample(const LabeledDataset& ds, const SamplerSpec& spec,
                                    bool gamma_draws) {
    check_spec(spec);
    const MinorityContext ctx = minority_context(ds, spec);
    const std::size_t n_new = ctx.summary.deficit;
    if (n_new == 0) {
        return identity_result(ds);
    }
    const GammaParams params = spec.gamma_params();
    const double m = gamma_draws ? params.mode() : 0.0;

    Rng rng(spec.seed);
    std::uniform_int_distribution<std::size_t> pick_source(0, ctx.summary.minority_count - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Matrix rows(n_new, ds.n_features());
    std::vector<Provenance> provenance(n_new);
    for (std::size_t i = 0; i < n_new; ++i) {
        const std::size_t src = pick_source(rng);
        const auto& nbrs = ctx.neighbors[src];
        std::uniform_int_distribution<std::size_t> pick_neighbor(0, nbrs.size() - 1);
        const std::size_t nbr = nbrs[pick_neighbor(rng)];
        const double draw = gamma_draws ? gamma_sample(params, rng) : unit(rng);
        const double scale = gamma_draws ? draw - m : draw;

        const auto p = ctx.minority_points.row(src);
        const auto pp = ctx.minority_points.row(nbr);
        auto q = rows.row(i);
        for (std::size_t j = 0; j < q.size(); ++j) {
            q[j] = p[j] + scale * (pp[j] - p[j]);
        }
        provenance[i] = {ctx.split.minority_rows[src], ctx.split.minority_rows[nbr], draw};
    }
    return assemble_oversampled(ds, rows, std::move(provenance), ctx.summary.minority_label);
}

}  // namespace

std::string_view to_string(SampleMethod method) {
    switch (method) {
        case SampleMethod::none: return "none";
        case SampleMethod::gamma: return "gamma";
        case SampleMethod::smote: return "smote";
        case SampleMethod::adasyn: return "adasyn";
        case SampleMethod::ros: return "ros";
        case SampleMethod::rus: return "rus";
    }
    return "unknown";
}

SampleMethod parse_method(std::string_view name) {
    if (name == "none") return SampleMethod::none;
    if (name == "gamma") return SampleMethod::gamma;
    if (name == "smote") return SampleMethod::smote;
    if (name == "adasyn") return SampleMethod::adasyn;
    if (name == "ros") return SampleMethod::ros;
    if (name == "rus") return SampleMethod::rus;
    throw ConfigError("unknown sampling method '" + std::string(name) + "'");
}

std::vector<double> synth_point(std::span<const double> p, std::span<const double> p_prime,
                                double t, double m) {
    std::vector<double> q(p.size());
    const double scale = t - m;
    for (std::size_t j = 0; j < p.size(); ++j) {
        q[j] = p[j] + scale * (p_prime[j] - p[j]);
    }
    return q;
}

ResampleResult gamma_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec) {
    return interpolate_resample(ds, spec, /*gamma_draws=*/true);
}

ResampleResult smote_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec) {
    return interpolate_resample(ds, spec, /*gamma_draws=*/false);
}

ResampleResult adasyn_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec) {
    check_spec(spec);
    const MinorityContext ctx = minority_context(ds, spec);
    const std::size_t n_new = ctx.summary.deficit;
    if (n_new == 0) {
        return identity_result(ds);
    }
    const std::size_t n_minority = ctx.summary.minority_count;

    // Border emphasis: fraction of majority labels among each minority point's
    // k nearest neighbors in the full dataset.
    const NeighborIndex full_index(ds.features());
    const std::size_t k_full = std::min(spec.k_neighbors, ds.n_samples() - 1);
    std::vector<double> weight(n_minority, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n_minority; ++i) {
        const auto nbrs = full_index.k_nearest(ctx.split.minority_rows[i], spec.k_neighbors);
        std::size_t majority_hits = 0;
        for (std::size_t row : nbrs) {
            if (ds.label(row) == ctx.summary.majority_label) {
                ++majority_hits;
            }
        }
        weight[i] = static_cast<double>(majority_hits) / static_cast<double>(k_full);
        total += weight[i];
    }
    if (total == 0.0) {
        // No minority point borders the majority; fall back to uniform allocation.
        weight.assign(n_minority, 1.0);
        total = static_cast<double>(n_minority);
    }

    // Largest-remainder rounding so allocations sum to exactly n_new.
    std::vector<std::size_t> alloc(n_minority);
    std::vector<std::pair<double, std::size_t>> remainders(n_minority);
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < n_minority; ++i) {
        const double share = weight[i] / total * static_cast<double>(n_new);
        alloc[i] = static_cast<std::size_t>(std::floor(share));
        assigned += alloc[i];
        remainders[i] = {share - std::floor(share), i};
    }
    std::sort(remainders.begin(), remainders.end(),
              [](const auto& a, const auto& b) {
                  return a.first != b.first ? a.first > b.first : a.second < b.second;
              });
    for (std::size_t r = 0; assigned < n_new; ++r, ++assigned) {
        ++alloc[remainders[r].second];
    }

    Rng rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Matrix rows(n_new, ds.n_features());
    std::vector<Provenance> provenance(n_new);
    std::size_t out = 0;
    for (std::size_t i = 0; i < n_minority; ++i) {
        const auto& nbrs = ctx.neighbors[i];
        std::uniform_int_distribution<std::size_t> pick_neighbor(0, nbrs.size() - 1);
        for (std::size_t g = 0; g < alloc[i]; ++g, ++out) {
            const std::size_t nbr = nbrs[pick_neighbor(rng)];
            const double u = unit(rng);
            const auto p = ctx.minority_points.row(i);
            const auto pp = ctx.minority_points.row(nbr);
            auto q = rows.row(out);
            for (std::size_t j = 0; j < q.size(); ++j) {
                q[j] = p[j] + u * (pp[j] - p[j]);
            }
            provenance[out] = {ctx.split.minority_rows[i], ctx.split.minority_rows[nbr], u};
        }
    }
    return assemble_oversampled(ds, rows, std::move(provenance), ctx.summary.minority_label);
}

ResampleResult ros_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec) {
    check_spec(spec);
    const ClassSummary summary = class_counts(ds);
    const std::size_t n_new = summary.deficit;
    if (n_new == 0) {
        return identity_result(ds);
    }
    const ClassSplit split = split_by_class(ds);

    Rng rng(spec.seed);
    std::uniform_int_distribution<std::size_t> pick(0, summary.minority_count - 1);
    Matrix rows(n_new, ds.n_features());
    std::vector<Provenance> provenance(n_new);
    for (std::size_t i = 0; i < n_new; ++i) {
        const std::size_t src = split.minority_rows[pick(rng)];
        const auto r = ds.row(src);
        std::copy(r.begin(), r.end(), rows.row(i).begin());
        provenance[i] = {src, src, 0.0};
    }
    return assemble_oversampled(ds, rows, std::move(provenance), summary.minority_label);
}

ResampleResult rus_fit_resample(const LabeledDataset& ds, const SamplerSpec& spec) {
    check_spec(spec);
    const ClassSummary summary = class_counts(ds);
    if (summary.deficit == 0) {
        return identity_result(ds);
    }
    const ClassSplit split = split_by_class(ds);

    Rng rng(spec.seed);
    std::vector<std::size_t> kept_majority;
    kept_majority.reserve(summary.minority_count);
    std::sample(split.majority_rows.begin(), split.majority_rows.end(),
                std::back_inserter(kept_majority), summary.minority_count, rng);

    std::vector<std::size_t> kept(split.minority_rows.begin(), split.minority_rows.end());
    kept.insert(kept.end(), kept_majority.begin(), kept_majority.end());
    std::sort(kept.begin(), kept.end());

    ResampleResult result;
    result.dataset = subset(ds, kept);
    result.synthetic.assign(kept.size(), 0);
    result.original_rows = std::move(kept);
    return result;
}

ResampleResult fit_resample(const LabeledDataset& ds, const SamplerSpec& spec) {
    switch (spec.method) {
        case SampleMethod::none: return identity_result(ds);
        case SampleMethod::gamma: return gamma_fit_resample(ds, spec);
        case SampleMethod::smote: return smote_fit_resample(ds, spec);
        case SampleMethod::adasyn: return adasyn_fit_resample(ds, spec);
        case SampleMethod::ros: return ros_fit_resample(ds, spec);
        case SampleMethod::rus: return rus_fit_resample(ds, spec);
    }
    throw ConfigError("unhandled sampling method");
}

}  // namespace gammabal
