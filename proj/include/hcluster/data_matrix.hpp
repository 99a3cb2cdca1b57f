#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hcluster {

// Which axis of the frequency grid becomes the clustered items.
enum class Orientation { Courses, Respondents };

// Respondent x course frequency grid with labels on both axes.
// Rows are respondents, columns are course codes.
struct DataMatrix {
    std::vector<std::vector<double>> values;  // values[row][col]
    std::vector<std::string> row_labels;      // respondent ids
    std::vector<std::string> col_labels;      // course codes

    std::size_t rows() const { return values.size(); }
    std::size_t cols() const { return values.empty() ? 0 : values.front().size(); }
};

// Throws ValidationError / DimensionError if the matrix breaks an invariant:
// non-finite or negative values, label/shape mismatch, duplicate or empty
// labels, fewer than 1 row or 2 columns.
void validate(const DataMatrix& m);

// Items to be clustered: one vector per item, all of equal dimension.
struct FeatureSet {
    std::vector<std::vector<double>> vectors;
    std::vector<std::string> labels;
    Orientation orientation = Orientation::Courses;

    std::size_t size() const { return vectors.size(); }
    std::size_t dim() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

// Orientation::Courses turns each column into an item vector (values across
// respondents); Orientation::Respondents keeps rows as item vectors.
// Throws DimensionError when the chosen axis has fewer than 2 items.
FeatureSet extract_items(const DataMatrix& m, Orientation orientation);

// Shifts each coordinate dimension to mean 0 and scales it to unit standard
// deviation. Zero-variance dimensions become all-zeros.
FeatureSet standardize_zscore(const FeatureSet& f);

}  // namespace hcluster
