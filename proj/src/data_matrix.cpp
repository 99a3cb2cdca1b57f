#include "hcluster/data_matrix.hpp"

#include <cmath>
#include <unordered_set>

#include "hcluster/errors.hpp"

namespace hcluster {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* axis) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty())
            throw ValidationError(std::string("empty ") + axis + " label");
        if (!seen.insert(l).second)
            throw ValidationError(std::string("duplicate ") + axis + " label '" + l + "'");
    }
}

}  // namespace

void validate(const DataMatrix& m) {
    if (m.rows() < 1) throw ValidationError("matrix has no rows");
    if (m.cols() < 2) throw ValidationError("matrix needs at least 2 columns");
    if (m.row_labels.size() != m.rows())
        throw DimensionError("row label count does not match row count");
    if (m.col_labels.size() != m.cols())
        throw DimensionError("column label count does not match column count");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.values[r].size() != m.cols())
            throw DimensionError("ragged row " + std::to_string(r));
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const double v = m.values[r][c];
            if (!std::isfinite(v))
                throw ValidationError("non-finite value at row " + std::to_string(r) +
                                      ", column " + std::to_string(c));
            if (v < 0.0)
                throw ValidationError("negative frequency at row " + std::to_string(r) +
                                      ", column " + std::to_string(c));
        }
    }
    check_labels(m.row_labels, "row");
    check_labels(m.col_labels, "column");
}

FeatureSet extract_items(const DataMatrix& m, Orientation orientation) {
    validate(m);
    FeatureSet f;
    f.orientation = orientation;
    if (orientation == Orientation::Courses) {
        f.labels = m.col_labels;
        f.vectors.resize(m.cols(), std::vector<double>(m.rows()));
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (std::size_t r = 0; r < m.rows(); ++r)
                f.vectors[c][r] = m.values[r][c];
    } else {
        if (m.rows() < 2)
            throw DimensionError("need at least 2 respondents to cluster respondents");
        f.labels = m.row_labels;
        f.vectors = m.values;
    }
    return f;
}

FeatureSet standardize_zscore(const FeatureSet& f) {
    FeatureSet out = f;
    const std::size_t n = f.size();
    const std::size_t dim = f.dim();
    if (n == 0) return out;
    for (std::size_t d = 0; d < dim; ++d) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += f.vectors[i][d];
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dv = f.vectors[i][d] - mean;
            var += dv * dv;
        }
        var /= static_cast<double>(n);
        const double sd = std::sqrt(var);
        if (sd == 0.0) {
            for (std::size_t i = 0; i < n; ++i) out.vectors[i][d] = 0.0;
        } else {
            for (std::size_t i = 0; i < n; ++i)
                out.vectors[i][d] = (f.vectors[i][d] - mean) / sd;
        }
    }
    return out;
}

}  // namespace hcluster
