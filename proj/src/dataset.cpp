#include "netwidth/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "netwidth/errors.hpp"

namespace netwidth {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    if (delimiter == '\0') {
        std::istringstream in(line);
        std::string tok;
        while (in >> tok) fields.push_back(tok);
        return fields;
    }
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        fields.push_back(trim(std::string_view(line).substr(
            start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return fields;
}

std::optional<double> parse_double(const std::string& s) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

bool labels_equal(const std::string& a, const std::string& b) {
    if (a == b) return true;
    const auto da = parse_double(a);
    const auto db = parse_double(b);
    return da && db && *da == *db;
}

bool label_in(const std::string& label, const std::vector<std::string>& set) {
    return std::any_of(set.begin(), set.end(),
                       [&](const std::string& s) { return labels_equal(label, s); });
}

int apply_rule(const LabelRule& rule, const std::string& label, std::size_t row) {
    if (label_in(label, rule.positive)) return 1;
    if (rule.negative.empty() || label_in(label, rule.negative)) return 0;
    throw DomainError("row " + std::to_string(row) + ": class label '" + label +
                      "' matches neither the positive nor the negative set");
}

} // namespace

LabeledDataset load_csv(const DatasetSpec& spec) {
    std::ifstream in(spec.source);
    if (!in) throw IoError("cannot open dataset file " + spec.source.string());
    if (spec.positive_rule.positive.empty()) {
        throw DomainError("dataset spec needs at least one positive label");
    }

    LabeledDataset ds;
    ds.name = spec.name.empty() ? spec.source.filename().string() : spec.name;

    std::vector<bool> skip; // per raw column
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = spec.has_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_fields(line, spec.delimiter);
        if (header_pending) {
            header_pending = false;
            for (int c = 0; c < static_cast<int>(fields.size()); ++c) {
                if (c != spec.target_column &&
                    std::find(spec.skip_columns.begin(), spec.skip_columns.end(), c) ==
                        spec.skip_columns.end()) {
                    ds.attribute_names.push_back(fields[static_cast<std::size_t>(c)]);
                }
            }
            continue;
        }
        if (skip.empty()) {
            // column layout fixed by the first data row
            const int ncols = static_cast<int>(fields.size());
            if (spec.target_column < 0 || spec.target_column >= ncols) {
                throw DomainError("target column " + std::to_string(spec.target_column) +
                                  " outside the " + std::to_string(ncols) + " columns of " +
                                  spec.source.string());
            }
            skip.assign(static_cast<std::size_t>(ncols), false);
            skip[static_cast<std::size_t>(spec.target_column)] = true;
            for (int c : spec.skip_columns) {
                if (c < 0 || c >= ncols) {
                    throw DomainError("skip column " + std::to_string(c) + " out of range");
                }
                skip[static_cast<std::size_t>(c)] = true;
            }
        }
        if (fields.size() != skip.size()) {
            throw DomainError("row " + std::to_string(line_no) + " has " +
                              std::to_string(fields.size()) + " fields, expected " +
                              std::to_string(skip.size()));
        }
        std::vector<double> row;
        row.reserve(skip.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (skip[c]) continue;
            const auto v = parse_double(fields[c]);
            if (!v) {
                throw DomainError("row " + std::to_string(line_no) + ", column " +
                                  std::to_string(c) + ": cannot parse '" + fields[c] +
                                  "' as a finite real");
            }
            row.push_back(*v);
        }
        ds.targets.push_back(
            apply_rule(spec.positive_rule, fields[static_cast<std::size_t>(spec.target_column)],
                       line_no));
        ds.features.push_back(std::move(row));
    }
    if (ds.features.empty()) throw DomainError("no data rows in " + spec.source.string());
    if (ds.attribute_names.empty()) {
        for (int c = 0; c < ds.cols(); ++c) ds.attribute_names.push_back("a" + std::to_string(c));
    }
    return ds;
}

DatasetSpec builtin_spec(const std::string& name, const std::filesystem::path& data_dir) {
    DatasetSpec spec;
    spec.name = name;
    if (name == "glass") {
        // Id, 9 chemistry attributes, type 1-7; types 1-4 are window glass.
        spec.source = data_dir / "glass.data";
        spec.delimiter = ',';
        spec.skip_columns = {0};
        spec.target_column = 10;
        spec.positive_rule = {{"1", "2", "3", "4"}, {"5", "6", "7"}};
    } else if (name == "thyroid") {
        // 21 clinical attributes then class; class 3 is normal functioning.
        spec.source = data_dir / "ann-thyroid.data";
        spec.delimiter = '\0';
        spec.target_column = 21;
        spec.positive_rule = {{"3"}, {"1", "2"}};
    } else if (name == "wine") {
        // class 1-3 first, then 13 constituents; vineyard 1 vs the others.
        spec.source = data_dir / "wine.data";
        spec.delimiter = ',';
        spec.target_column = 0;
        spec.positive_rule = {{"1"}, {"2", "3"}};
    } else {
        throw DomainError("unknown builtin dataset '" + name + "' (expected glass, thyroid or wine)");
    }
    return spec;
}

std::pair<LabeledDataset, std::vector<ColumnScaling>> normalize_minmax(const LabeledDataset& ds) {
    if (ds.rows() == 0) throw DomainError("cannot normalize an empty dataset");
    std::vector<ColumnScaling> table(static_cast<std::size_t>(ds.cols()));
    for (std::size_t c = 0; c < table.size(); ++c) {
        double lo = ds.features.front()[c], hi = lo;
        for (const auto& row : ds.features) {
            lo = std::min(lo, row[c]);
            hi = std::max(hi, row[c]);
        }
        table[c] = {lo, hi};
    }
    return {apply_scaling(ds, table), table};
}

LabeledDataset apply_scaling(const LabeledDataset& ds, const std::vector<ColumnScaling>& table) {
    if (table.size() != static_cast<std::size_t>(ds.cols())) {
        throw DomainError("scaling table has " + std::to_string(table.size()) +
                          " columns, dataset has " + std::to_string(ds.cols()));
    }
    LabeledDataset out = ds;
    for (auto& row : out.features) {
        for (std::size_t c = 0; c < table.size(); ++c) {
            const double span = table[c].max - table[c].min;
            row[c] = span == 0.0 ? 0.0 : (row[c] - table[c].min) / span;
        }
    }
    return out;
}

} // namespace netwidth
