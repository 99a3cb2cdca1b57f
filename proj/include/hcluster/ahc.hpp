#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hcluster/distance.hpp"

namespace hcluster {

enum class Linkage { Single, Complete };

const char* to_string(Linkage l);

// One agglomeration step. Cluster ids: leaves are 0..n-1, the merge at
// step t (0-based) creates cluster id n+t. left/right are ordered so the
// child containing the smallest leaf comes first.
struct Merge {
    std::size_t left = 0;
    std::size_t right = 0;
    double height = 0.0;
    std::size_t size = 0;  // leaf count of the merged cluster
};

struct Dendrogram {
    std::size_t n_leaves = 0;
    std::vector<Merge> merges;  // exactly n_leaves - 1, heights non-decreasing
    std::vector<std::string> labels;

    double root_height() const { return merges.empty() ? 0.0 : merges.back().height; }
};

// Inter-cluster distance update after merging clusters i and j:
// min(d_ik, d_jk) for single linkage, max for complete.
double lance_williams(double d_ik, double d_jk, Linkage l);

// O(n^3) direct implementation: at each step scan every active cluster pair
// for the global minimum. Ties broken by the lexicographically least
// (smaller id, larger id) tuple under current cluster ids, compared exactly.
// This is the serial reference the optimized engine is tested against.
Dendrogram cluster_naive(const DistanceMatrix& d, Linkage l);

// Nearest-neighbor-chain engine: O(n^2) time, O(n) auxiliary space beyond
// the (copied) condensed matrix. Merge heights match cluster_naive exactly;
// topology matches whenever all inter-cluster distances are distinct.
Dendrogram cluster_nn_chain(const DistanceMatrix& d, Linkage l);

}  // namespace hcluster
