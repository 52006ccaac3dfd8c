#ifndef GAMMABAL_REPORT_HPP
#define GAMMABAL_REPORT_HPP

#include <string>
#include <string_view>

#include "gammabal/eval.hpp"

namespace gammabal {

enum class ReportFormat { markdown, json, csv };

ReportFormat parse_report_format(std::string_view name);

/// Markdown mirrors the usual comparison layout: one table per metric, one
/// row per classifier, one column per sampler. JSON carries per-fold detail
/// plus the environment header; CSV holds one row of fold means per cell.
std::string render_report(const ExperimentReport& report, ReportFormat format);

}  // namespace gammabal

#endif
