#include "hcluster/distance.hpp"

#include <cmath>

#include "hcluster/errors.hpp"

namespace hcluster {

std::size_t condensed_index(std::size_t i, std::size_t j, std::size_t n) {
    if (i >= j || j >= n)
        throw RangeError("condensed_index requires 0 <= i < j < n, got i=" +
                         std::to_string(i) + " j=" + std::to_string(j) +
                         " n=" + std::to_string(n));
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> condensed_decode(std::size_t flat, std::size_t n) {
    // walk rows; row i holds n-1-i entries
    std::size_t i = 0;
    std::size_t row_len = n - 1;
    while (flat >= row_len) {
        flat -= row_len;
        ++i;
        --row_len;
        if (row_len == 0) throw RangeError("flat index out of range");
    }
    return {i, i + 1 + flat};
}

double DistanceMatrix::at(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return condensed[condensed_index(i, j, n)];
}

double euclidean(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size())
        throw DimensionError("euclidean: dimension mismatch " +
                             std::to_string(u.size()) + " vs " + std::to_string(v.size()));
    double acc = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double d = u[k] - v[k];
        acc += d * d;
    }
    return std::sqrt(acc);
}

namespace {

DistanceMatrix pairwise_impl(const FeatureSet& f, bool parallel) {
    const std::size_t n = f.size();
    if (n < 2) throw DimensionError("pairwise needs at least 2 items");
    for (const auto& v : f.vectors)
        if (v.size() != f.dim())
            throw DimensionError("pairwise: inconsistent vector dimensions");

    DistanceMatrix d;
    d.n = n;
    d.labels = f.labels;
    d.condensed.resize(n * (n - 1) / 2);

    // rows shrink towards the end, dynamic schedule balances them
    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(n) - 1;
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const std::size_t ui = static_cast<std::size_t>(i);
        std::size_t flat = ui * n - ui * (ui + 1) / 2;
        for (std::size_t j = ui + 1; j < n; ++j, ++flat)
            d.condensed[flat] = euclidean(f.vectors[ui], f.vectors[j]);
    }
    return d;
}

}  // namespace

DistanceMatrix pairwise(const FeatureSet& f) { return pairwise_impl(f, true); }

DistanceMatrix pairwise_serial(const FeatureSet& f) { return pairwise_impl(f, false); }

}  // namespace hcluster
