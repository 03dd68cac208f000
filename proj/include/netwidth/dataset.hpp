#ifndef NETWIDTH_DATASET_HPP
#define NETWIDTH_DATASET_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace netwidth {

/// Feature matrix with binary targets. Immutable after ingestion; freely
/// shareable across parallel training runs.
struct LabeledDataset {
    std::string name;
    std::vector<std::vector<double>> features; // r rows x n columns
    std::vector<int> targets;                  // length r, values in {0, 1}
    std::vector<std::string> attribute_names;  // length n

    int rows() const { return static_cast<int>(features.size()); }
    int cols() const { return features.empty() ? 0 : static_cast<int>(features.front().size()); }
};

/// Maps raw class labels to {0, 1}. When `negative` is nonempty, a label
/// outside both sets is a load error; when it is empty, every non-positive
/// label is negative. Numeric labels compare by value ("3" == "3.0").
struct LabelRule {
    std::vector<std::string> positive;
    std::vector<std::string> negative;
};

struct DatasetSpec {
    std::string name;
    std::filesystem::path source;
    char delimiter = ',';        // '\0' means any run of whitespace
    int target_column = -1;      // column index before skips are applied
    LabelRule positive_rule;
    std::vector<int> skip_columns;
    bool has_header = false;
};

/// Parses the delimited text file named by the spec. Every feature field must
/// be a finite real; failures report the offending row and column.
LabeledDataset load_csv(const DatasetSpec& spec);

/// Specs for the three bundled dataset definitions (glass, thyroid, wine),
/// with sources resolved under data_dir.
DatasetSpec builtin_spec(const std::string& name,
                         const std::filesystem::path& data_dir = "data");

struct ColumnScaling {
    double min = 0.0;
    double max = 0.0;
};

/// Maps each feature column to [0, 1] via (x - min)/(max - min); constant
/// columns map to 0. Returns the per-column table so the same scaling can be
/// applied to held-out data.
std::pair<LabeledDataset, std::vector<ColumnScaling>> normalize_minmax(const LabeledDataset& ds);

/// Applies a previously computed scaling table.
LabeledDataset apply_scaling(const LabeledDataset& ds, const std::vector<ColumnScaling>& table);

} // namespace netwidth

#endif
