#include "gammabal/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "gammabal/error.hpp"

namespace gammabal {

namespace {

// RFC-4180-style reader: quoted fields may contain commas, doubled quotes and
// line breaks. Returns one record per row, tracking the 1-based line number
// where each record starts.
struct CsvRecord {
    std::vector<std::string> fields;
    std::size_t line = 0;
};

std::vector<CsvRecord> read_records(std::istream& in) {
    std::vector<CsvRecord> records;
    std::string field;
    CsvRecord record;
    record.line = 1;
    std::size_t line = 1;
    bool quoted = false;
    bool any_char = false;

    const auto end_field = [&]() {
        record.fields.push_back(std::move(field));
        field.clear();
    };
    const auto end_record = [&]() {
        end_field();
        records.push_back(std::move(record));
        record = CsvRecord{};
        record.line = line;
        any_char = false;
    };

    char c;
    while (in.get(c)) {
        if (c == '\r') {
            continue;
        }
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty()) {
                    throw ParseError("unexpected quote inside unquoted field", line);
                }
                quoted = true;
                any_char = true;
                break;
            case ',':
                end_field();
                any_char = true;
                break;
            case '\n':
                ++line;
                if (any_char || !field.empty() || !record.fields.empty()) {
                    end_record();
                }
                record.line = line;
                break;
            default:
                field.push_back(c);
                any_char = true;
                break;
        }
    }
    if (quoted) {
        throw ParseError("unterminated quoted field", record.line);
    }
    if (any_char || !field.empty() || !record.fields.empty()) {
        end_record();
    }
    return records;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

double parse_feature(const std::string& raw, std::size_t line, const std::string& column) {
    const std::string text = trim(raw);
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw SchemaError("column '" + column + "': '" + raw + "' is not a number", line);
    }
    if (!std::isfinite(value)) {
        throw SchemaError("column '" + column + "': non-finite value", line);
    }
    return value;
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return {buffer, ptr};
}

CsvDataset read_csv(const std::filesystem::path& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    return read_csv(in, schema);
}

CsvDataset read_csv(std::istream& in, const CsvSchema& schema) {
    const auto records = read_records(in);
    if (records.empty()) {
        throw SchemaError("empty file: a header row is required");
    }
    const auto& header = records[0].fields;
    const std::size_t n_cols = header.size();
    if (n_cols < 2) {
        throw SchemaError("need at least one feature column and a label column", 1);
    }
    if (records.size() < 2) {
        throw SchemaError("no data rows after the header");
    }

    std::size_t label_at = n_cols - 1;
    if (!schema.label_column.empty()) {
        const auto it = std::find(header.begin(), header.end(), schema.label_column);
        if (it == header.end()) {
            throw SchemaError("label column '" + schema.label_column + "' not in header", 1);
        }
        label_at = static_cast<std::size_t>(it - header.begin());
    } else if (schema.label_index) {
        label_at = *schema.label_index;
        if (label_at >= n_cols) {
            throw SchemaError("label index " + std::to_string(label_at) +
                                  " out of range for " + std::to_string(n_cols) + " columns",
                              1);
        }
    }

    CsvDataset out;
    out.label_name = header[label_at];
    out.label_position = label_at;
    for (std::size_t j = 0; j < n_cols; ++j) {
        if (j != label_at) {
            out.feature_names.push_back(header[j]);
        }
    }

    Matrix features(records.size() - 1, n_cols - 1);
    std::vector<int> labels(records.size() - 1);
    std::vector<std::string> tokens;  // distinct label tokens in first-seen order
    std::vector<std::size_t> token_counts;

    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != n_cols) {
            throw SchemaError("row has " + std::to_string(rec.fields.size()) +
                                  " fields, header has " + std::to_string(n_cols),
                              rec.line);
        }
        std::size_t at = 0;
        for (std::size_t j = 0; j < n_cols; ++j) {
            if (j == label_at) {
                continue;
            }
            features(r - 1, at) = parse_feature(rec.fields[j], rec.line, header[j]);
            ++at;
        }
        const std::string token = trim(rec.fields[label_at]);
        auto it = std::find(tokens.begin(), tokens.end(), token);
        if (it == tokens.end()) {
            if (tokens.size() == 2) {
                throw SchemaError("third label value '" + token + "' (have '" + tokens[0] +
                                      "' and '" + tokens[1] + "')",
                                  rec.line);
            }
            tokens.push_back(token);
            token_counts.push_back(0);
            it = tokens.end() - 1;
        }
        const auto id = static_cast<int>(it - tokens.begin());
        ++token_counts[static_cast<std::size_t>(id)];
        labels[r - 1] = id;
    }
    if (tokens.size() < 2) {
        throw SchemaError("label column holds a single value '" + tokens[0] +
                          "'; two classes are required");
    }

    int positive = 0;
    if (!schema.positive_label.empty()) {
        const auto it = std::find(tokens.begin(), tokens.end(), schema.positive_label);
        if (it == tokens.end()) {
            throw SchemaError("positive label '" + schema.positive_label +
                              "' does not occur in the label column");
        }
        positive = static_cast<int>(it - tokens.begin());
    } else {
        positive = token_counts[1] <= token_counts[0] ? 1 : 0;
    }

    out.label_tokens = {tokens[0], tokens[1]};
    out.data = LabeledDataset(std::move(features), std::move(labels), positive);
    return out;
}

namespace {

void write_field(std::ostream& out, const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) {
        out << text;
        return;
    }
    out << '"';
    for (char c : text) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

}  // namespace

void write_csv(const CsvDataset& ds, std::ostream& out) {
    const std::size_t n_cols = ds.feature_names.size() + 1;
    for (std::size_t j = 0, feature = 0; j < n_cols; ++j) {
        if (j > 0) out << ',';
        if (j == ds.label_position) {
            write_field(out, ds.label_name);
        } else {
            write_field(out, ds.feature_names[feature++]);
        }
    }
    out << '\n';
    for (std::size_t i = 0; i < ds.data.n_samples(); ++i) {
        const auto row = ds.data.row(i);
        for (std::size_t j = 0, feature = 0; j < n_cols; ++j) {
            if (j > 0) out << ',';
            if (j == ds.label_position) {
                write_field(out, ds.label_tokens[static_cast<std::size_t>(ds.data.label(i))]);
            } else {
                out << format_double(row[feature++]);
            }
        }
        out << '\n';
    }
}

void write_csv(const CsvDataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    write_csv(ds, out);
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

void write_provenance(const ResampleResult& result, std::ostream& out) {
    out << "source_row,neighbor_row,draw\n";
    for (const auto& p : result.provenance) {
        out << p.source_row << ',' << p.neighbor_row << ',' << format_double(p.draw) << '\n';
    }
}

void write_provenance(const ResampleResult& result, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    write_provenance(result, out);
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace gammabal
