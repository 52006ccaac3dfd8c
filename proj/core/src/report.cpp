#include "gammabal/report.hpp"

#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gammabal/csv.hpp"
#include "gammabal/error.hpp"

namespace gammabal {

ReportFormat parse_report_format(std::string_view name) {
    if (name == "markdown") return ReportFormat::markdown;
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw ConfigError("unknown report format '" + std::string(name) + "'");
}

namespace {

using MetricGetter = double (*)(const MetricBundle&);

constexpr struct {
    const char* name;
    MetricGetter get;
} kMetrics[] = {
    {"f1", [](const MetricBundle& b) { return b.f1; }},
    {"precision", [](const MetricBundle& b) { return b.precision; }},
    {"recall", [](const MetricBundle& b) { return b.recall; }},
    {"roc_auc", [](const MetricBundle& b) { return b.roc_auc; }},
    {"avg_precision", [](const MetricBundle& b) { return b.avg_precision; }},
};

std::string fixed4(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", v);
    return buffer;
}

std::string render_markdown(const ExperimentReport& report) {
    std::ostringstream out;
    const auto& ds = report.dataset;
    out << "# Resampling benchmark\n\n";
    out << "- samples: " << ds.n_samples << " (" << ds.majority_count << " majority / "
        << ds.minority_count << " minority, ratio " << fixed4(ds.ratio) << ")\n";
    out << "- features: " << ds.n_features << "\n";
    out << "- folds: " << report.config.n_folds << ", seed: " << report.config.seed
        << ", min-max scaling: " << (report.config.scale ? "on" : "off") << "\n";
    for (const auto& s : report.config.samplers) {
        out << "- sampler " << to_string(s.method);
        if (s.method == SampleMethod::gamma) {
            out << " (alpha " << format_double(s.alpha) << ", theta " << format_double(s.theta)
                << ", k " << s.k_neighbors << ")";
        } else if (s.method == SampleMethod::smote || s.method == SampleMethod::adasyn) {
            out << " (k " << s.k_neighbors << ")";
        }
        out << "\n";
    }
    for (const auto& c : report.config.classifiers) {
        out << "- classifier " << to_string(c.kind);
        if (c.kind == ClassifierKind::knn) {
            out << " (k_vote " << c.knn_k_vote << ")";
        } else if (c.kind == ClassifierKind::forest) {
            out << " (trees " << c.forest.n_trees << ", max_depth " << c.forest.max_depth
                << ", min_leaf " << c.forest.min_leaf << ")";
        }
        out << "\n";
    }

    for (const auto& metric : kMetrics) {
        out << "\n## " << metric.name << " (fold means)\n\n";
        out << "| classifier |";
        for (const auto& s : report.config.samplers) {
            out << ' ' << to_string(s.method) << " |";
        }
        out << "\n|---|";
        for (std::size_t i = 0; i < report.config.samplers.size(); ++i) {
            out << "---|";
        }
        out << "\n";
        for (const auto& c : report.config.classifiers) {
            out << "| " << to_string(c.kind) << " |";
            for (const auto& s : report.config.samplers) {
                const CellReport* cell =
                    report.find(to_string(s.method), to_string(c.kind));
                out << ' ' << (cell ? fixed4(metric.get(cell->mean)) : "-") << " |";
            }
            out << "\n";
        }
    }
    return out.str();
}

nlohmann::json bundle_json(const MetricBundle& b) {
    return {{"precision", b.precision},
            {"recall", b.recall},
            {"f1", b.f1},
            {"roc_auc", b.roc_auc},
            {"avg_precision", b.avg_precision}};
}

std::string render_json(const ExperimentReport& report) {
    nlohmann::json root;
    root["dataset"] = {{"n_samples", report.dataset.n_samples},
                       {"n_features", report.dataset.n_features},
                       {"majority_count", report.dataset.majority_count},
                       {"minority_count", report.dataset.minority_count},
                       {"ratio", report.dataset.ratio},
                       {"positive_class", report.dataset.positive_class}};
    root["protocol"] = {{"n_folds", report.config.n_folds},
                        {"seed", report.config.seed},
                        {"scaled", report.config.scale}};
    auto& samplers = root["samplers"] = nlohmann::json::array();
    for (const auto& s : report.config.samplers) {
        samplers.push_back({{"method", to_string(s.method)},
                            {"alpha", s.alpha},
                            {"theta", s.theta},
                            {"k_neighbors", s.k_neighbors}});
    }
    auto& classifiers = root["classifiers"] = nlohmann::json::array();
    for (const auto& c : report.config.classifiers) {
        nlohmann::json j{{"kind", to_string(c.kind)}};
        if (c.kind == ClassifierKind::knn) {
            j["k_vote"] = c.knn_k_vote;
        } else if (c.kind == ClassifierKind::forest) {
            j["n_trees"] = c.forest.n_trees;
            j["max_depth"] = c.forest.max_depth;
            j["min_leaf"] = c.forest.min_leaf;
            j["features_per_split"] = c.forest.features_per_split;
        }
        classifiers.push_back(std::move(j));
    }
    auto& cells = root["cells"] = nlohmann::json::array();
    for (const auto& cell : report.cells) {
        nlohmann::json j{{"sampler", cell.sampler},
                         {"classifier", cell.classifier},
                         {"mean", bundle_json(cell.mean)}};
        auto& folds = j["folds"] = nlohmann::json::array();
        for (const auto& b : cell.folds) {
            folds.push_back(bundle_json(b));
        }
        cells.push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

std::string render_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "classifier,sampler,precision,recall,f1,roc_auc,avg_precision\n";
    for (const auto& cell : report.cells) {
        out << cell.classifier << ',' << cell.sampler << ','
            << format_double(cell.mean.precision) << ',' << format_double(cell.mean.recall)
            << ',' << format_double(cell.mean.f1) << ',' << format_double(cell.mean.roc_auc)
            << ',' << format_double(cell.mean.avg_precision) << '\n';
    }
    return out.str();
}

}  // namespace

std::string render_report(const ExperimentReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::markdown: return render_markdown(report);
        case ReportFormat::json: return render_json(report);
        case ReportFormat::csv: return render_csv(report);
    }
    throw ConfigError("unhandled report format");
}

}  // namespace gammabal
