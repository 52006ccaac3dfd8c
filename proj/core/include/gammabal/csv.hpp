#ifndef GAMMABAL_CSV_HPP
#define GAMMABAL_CSV_HPP

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gammabal/dataset.hpp"
#include "gammabal/samplers.hpp"

namespace gammabal {

/// How to interpret a CSV file: header row required, every column numeric
/// except the label column, label values being exactly two distinct tokens.
struct CsvSchema {
    /// Label column by header name; empty means use label_index.
    std::string label_column;
    /// Label column position; unset means the last column.
    std::optional<std::size_t> label_index;
    /// Token of the positive/minority class; empty means auto-detect the
    /// less frequent token (ties resolve to the second-seen token).
    std::string positive_label;
};

/// A dataset plus the CSV metadata needed to write it back out.
struct CsvDataset {
    LabeledDataset data;
    std::vector<std::string> feature_names;  // original order, label excluded
    std::string label_name;
    std::size_t label_position = 0;            // column index of the label in the file
    std::array<std::string, 2> label_tokens;   // token for class id 0 and 1
};

/// Throws IoError when the file cannot be opened, ParseError on malformed
/// CSV, SchemaError on schema violations (named by line).
CsvDataset read_csv(const std::filesystem::path& path, const CsvSchema& schema = {});
CsvDataset read_csv(std::istream& in, const CsvSchema& schema = {});

/// Writes header and rows with round-trip-exact numeric formatting; the label
/// column is restored at its original position.
void write_csv(const CsvDataset& ds, std::ostream& out);
void write_csv(const CsvDataset& ds, const std::filesystem::path& path);

/// Sidecar with one (source_row, neighbor_row, draw) line per synthetic row.
void write_provenance(const ResampleResult& result, std::ostream& out);
void write_provenance(const ResampleResult& result, const std::filesystem::path& path);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace gammabal

#endif
