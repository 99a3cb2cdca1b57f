#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hcluster/data_matrix.hpp"

namespace hcluster {

// Condensed symmetric pairwise-distance storage: the strict upper triangle
// in row-major order, n*(n-1)/2 entries.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<double> condensed;
    std::vector<std::string> labels;

    double at(std::size_t i, std::size_t j) const;  // full-matrix view, at(i,i)=0
};

// Flat index of pair (i,j), i < j < n. Throws RangeError otherwise.
std::size_t condensed_index(std::size_t i, std::size_t j, std::size_t n);

// Inverse of condensed_index.
std::pair<std::size_t, std::size_t> condensed_decode(std::size_t flat, std::size_t n);

// sqrt(sum_k (u_k - v_k)^2), summed in ascending dimension order.
// Throws DimensionError on mismatched dimensions.
double euclidean(std::span<const double> u, std::span<const double> v);

// All-pairs Euclidean distances. The default entry point parallelizes over
// pairs with OpenMP when available; each entry depends only on its own pair,
// so the output is byte-identical to the serial version.
DistanceMatrix pairwise(const FeatureSet& f);

// Serial reference kept for tests and the benchmark.
DistanceMatrix pairwise_serial(const FeatureSet& f);

}  // namespace hcluster
