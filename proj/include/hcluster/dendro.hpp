#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcluster/ahc.hpp"
#include "hcluster/data_matrix.hpp"

namespace hcluster {

// How a dendrogram was flattened into clusters.
struct CutRule {
    enum class Kind { ByCount, ByHeight, Default } kind = Kind::Default;
    std::size_t count = 0;   // ByCount
    double height = 0.0;     // ByHeight

    static CutRule by_count(std::size_t k) { return {Kind::ByCount, k, 0.0}; }
    static CutRule by_height(double h) { return {Kind::ByHeight, 0, h}; }
};

// Leaf -> cluster partition. Cluster indices run 0..k-1, ordered by the
// smallest member leaf id.
struct ClusterAssignment {
    std::vector<std::string> labels;
    std::vector<std::size_t> cluster_of;  // one entry per leaf
    std::size_t k = 0;
    CutRule cut;

    std::vector<std::vector<std::size_t>> members() const;
};

// Undoes the last k-1 merges; the k components become the clusters.
// Throws RangeError unless 1 <= k <= n_leaves.
ClusterAssignment cut_by_count(const Dendrogram& d, std::size_t k);

// Keeps exactly the merges with height <= h. Throws RangeError for h < 0.
ClusterAssignment cut_by_height(const Dendrogram& d, double h);

// Cophenetic distances: entry (i,j) is the height of the lowest merge
// containing both leaves. Always an ultrametric.
DistanceMatrix cophenetic(const Dendrogram& d);

// Pair-counting Rand agreement between two partitions over the same items,
// in [0,1]; 1 iff the partitions are identical.
double rand_index(const ClusterAssignment& a, const ClusterAssignment& b);

struct CourseScore {
    std::string label;
    double score = 0.0;  // aggregate column frequency
};

// Courses sorted by descending column sum; ties by ascending label.
std::vector<CourseScore> rank_strength(const DataMatrix& m);

// Per-linkage half of a comparison report.
struct LinkageResult {
    Linkage linkage = Linkage::Single;
    Dendrogram dendrogram;
    ClusterAssignment assignment;
    double effective_cut_height = 0.0;  // resolved height for Default cuts
};

struct ComparisonReport {
    std::string dataset_id;
    CutRule cut;
    LinkageResult single;
    LinkageResult complete;
    std::vector<CourseScore> ranking;     // full strength ranking
    std::vector<std::string> strongest;   // prefix of ranking
    std::vector<std::string> weakest;     // suffix of ranking, reversed
    double agreement = 0.0;               // Rand index between the two cuts
};

// Runs the full pipeline (extract Courses -> pairwise -> nn-chain) once per
// linkage, cuts both with the shared rule, and assembles the report.
// A Default cut resolves to ByHeight at 0.7 x that dendrogram's root height.
ComparisonReport compare_linkages(const DataMatrix& m, const CutRule& cut,
                                  const std::string& dataset_id = "");

}  // namespace hcluster
