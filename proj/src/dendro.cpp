#include "hcluster/dendro.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hcluster/distance.hpp"
#include "hcluster/errors.hpp"

namespace hcluster {

namespace {

// Applies the first `applied` merges and numbers the resulting components
// 0..k-1 by smallest member leaf id.
ClusterAssignment components_after(const Dendrogram& d, std::size_t applied, CutRule cut) {
    const std::size_t n = d.n_leaves;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    // rep[c] = a leaf inside cluster id c
    std::vector<std::size_t> rep(n + applied);
    std::iota(rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
    for (std::size_t t = 0; t < applied; ++t) {
        const Merge& m = d.merges[t];
        const std::size_t ra = find(rep[m.left]);
        const std::size_t rb = find(rep[m.right]);
        parent[rb] = ra;
        rep[n + t] = ra;
    }

    ClusterAssignment a;
    a.labels = d.labels;
    a.cut = cut;
    a.cluster_of.resize(n);
    std::vector<std::size_t> index_of_root(n, n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (index_of_root[r] == n) index_of_root[r] = next++;
        a.cluster_of[i] = index_of_root[r];
    }
    a.k = next;
    return a;
}

}  // namespace

std::vector<std::vector<std::size_t>> ClusterAssignment::members() const {
    std::vector<std::vector<std::size_t>> out(k);
    for (std::size_t i = 0; i < cluster_of.size(); ++i) out[cluster_of[i]].push_back(i);
    return out;
}

ClusterAssignment cut_by_count(const Dendrogram& d, std::size_t k) {
    if (k < 1 || k > d.n_leaves)
        throw RangeError("cut count " + std::to_string(k) + " outside [1, " +
                         std::to_string(d.n_leaves) + "]");
    return components_after(d, d.n_leaves - k, CutRule::by_count(k));
}

ClusterAssignment cut_by_height(const Dendrogram& d, double h) {
    if (!(h >= 0.0)) throw RangeError("cut height must be >= 0");
    // heights are non-decreasing, so the kept merges form a prefix
    std::size_t applied = 0;
    while (applied < d.merges.size() && d.merges[applied].height <= h) ++applied;
    return components_after(d, applied, CutRule::by_height(h));
}

DistanceMatrix cophenetic(const Dendrogram& d) {
    const std::size_t n = d.n_leaves;
    DistanceMatrix out;
    out.n = n;
    out.labels = d.labels;
    out.condensed.assign(n * (n - 1) / 2, 0.0);

    std::vector<std::vector<std::size_t>> members(n + d.merges.size());
    for (std::size_t i = 0; i < n; ++i) members[i] = {i};
    for (std::size_t t = 0; t < d.merges.size(); ++t) {
        const Merge& m = d.merges[t];
        for (std::size_t i : members[m.left])
            for (std::size_t j : members[m.right])
                out.condensed[condensed_index(std::min(i, j), std::max(i, j), n)] = m.height;
        auto& dst = members[n + t];
        dst = std::move(members[m.left]);
        dst.insert(dst.end(), members[m.right].begin(), members[m.right].end());
        members[m.right].clear();
        members[m.right].shrink_to_fit();
    }
    return out;
}

double rand_index(const ClusterAssignment& a, const ClusterAssignment& b) {
    const std::size_t n = a.cluster_of.size();
    if (b.cluster_of.size() != n)
        throw DimensionError("rand_index: partitions cover different item counts");
    if (n < 2) return 1.0;
    std::size_t agree = 0, total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool sa = a.cluster_of[i] == a.cluster_of[j];
            const bool sb = b.cluster_of[i] == b.cluster_of[j];
            agree += (sa == sb);
            ++total;
        }
    return static_cast<double>(agree) / static_cast<double>(total);
}

std::vector<CourseScore> rank_strength(const DataMatrix& m) {
    validate(m);
    std::vector<CourseScore> scores(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        scores[c].label = m.col_labels[c];
        double sum = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r) sum += m.values[r][c];
        scores[c].score = sum;
    }
    std::sort(scores.begin(), scores.end(), [](const CourseScore& x, const CourseScore& y) {
        if (x.score != y.score) return x.score > y.score;
        return x.label < y.label;
    });
    return scores;
}

namespace {

LinkageResult run_linkage(const FeatureSet& items, Linkage l, const CutRule& cut) {
    LinkageResult r;
    r.linkage = l;
    r.dendrogram = cluster_nn_chain(pairwise(items), l);
    switch (cut.kind) {
        case CutRule::Kind::ByCount:
            r.assignment = cut_by_count(r.dendrogram, cut.count);
            break;
        case CutRule::Kind::ByHeight:
            r.assignment = cut_by_height(r.dendrogram, cut.height);
            r.effective_cut_height = cut.height;
            break;
        case CutRule::Kind::Default:
            r.effective_cut_height = 0.7 * r.dendrogram.root_height();
            r.assignment = cut_by_height(r.dendrogram, r.effective_cut_height);
            break;
    }
    return r;
}

}  // namespace

ComparisonReport compare_linkages(const DataMatrix& m, const CutRule& cut,
                                  const std::string& dataset_id) {
    const FeatureSet items = extract_items(m, Orientation::Courses);

    ComparisonReport rep;
    rep.dataset_id = dataset_id;
    rep.cut = cut;
    rep.single = run_linkage(items, Linkage::Single, cut);
    rep.complete = run_linkage(items, Linkage::Complete, cut);
    rep.agreement = rand_index(rep.single.assignment, rep.complete.assignment);

    rep.ranking = rank_strength(m);
    const std::size_t take = std::min<std::size_t>(3, rep.ranking.size() / 2);
    for (std::size_t i = 0; i < take; ++i) rep.strongest.push_back(rep.ranking[i].label);
    for (std::size_t i = 0; i < take; ++i)
        rep.weakest.push_back(rep.ranking[rep.ranking.size() - 1 - i].label);
    return rep;
}

}  // namespace hcluster
