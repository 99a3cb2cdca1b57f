#include "hcluster/ahc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hcluster/errors.hpp"

namespace hcluster {

const char* to_string(Linkage l) {
    return l == Linkage::Single ? "single" : "complete";
}

double lance_williams(double d_ik, double d_jk, Linkage l) {
    return l == Linkage::Single ? std::min(d_ik, d_jk) : std::max(d_ik, d_jk);
}

namespace {

void check_input(const DistanceMatrix& d) {
    if (d.n < 2) throw DimensionError("clustering needs at least 2 items");
    if (d.condensed.size() != d.n * (d.n - 1) / 2)
        throw DimensionError("condensed length does not match item count");
    for (double v : d.condensed)
        if (!std::isfinite(v) || v < 0.0)
            throw ValidationError("distance matrix contains a non-finite or negative entry");
}

// Disjoint-set over leaves, tracking per-root cluster id, size, and the
// smallest contained leaf (used to order merge children).
struct LeafForest {
    std::vector<std::size_t> parent, cluster_id, size, min_leaf;

    explicit LeafForest(std::size_t n)
        : parent(n), cluster_id(n), size(n, 1), min_leaf(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        std::iota(cluster_id.begin(), cluster_id.end(), std::size_t{0});
        std::iota(min_leaf.begin(), min_leaf.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Joins the sets containing ra and rb (both roots), assigning the new
    // cluster id. Returns the merged root.
    std::size_t unite(std::size_t ra, std::size_t rb, std::size_t new_id) {
        parent[rb] = ra;
        cluster_id[ra] = new_id;
        size[ra] += size[rb];
        min_leaf[ra] = std::min(min_leaf[ra], min_leaf[rb]);
        return ra;
    }
};

}  // namespace

Dendrogram cluster_naive(const DistanceMatrix& d, Linkage l) {
    check_input(d);
    const std::size_t n = d.n;

    // full working matrix indexed by slot; slot i starts as leaf i
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            w[i][j] = w[j][i] = d.condensed[condensed_index(i, j, n)];

    std::vector<bool> alive(n, true);
    std::vector<std::size_t> id(n), size(n, 1), min_leaf(n);
    std::iota(id.begin(), id.end(), std::size_t{0});
    std::iota(min_leaf.begin(), min_leaf.end(), std::size_t{0});

    Dendrogram out;
    out.n_leaves = n;
    out.labels = d.labels;
    out.merges.reserve(n - 1);

    for (std::size_t t = 0; t < n - 1; ++t) {
        std::size_t best_a = n, best_b = n;
        double best = std::numeric_limits<double>::infinity();
        std::pair<std::size_t, std::size_t> best_key{0, 0};
        for (std::size_t a = 0; a < n; ++a) {
            if (!alive[a]) continue;
            for (std::size_t b = a + 1; b < n; ++b) {
                if (!alive[b]) continue;
                const double dist = w[a][b];
                const std::pair<std::size_t, std::size_t> key{std::min(id[a], id[b]),
                                                              std::max(id[a], id[b])};
                // exact comparison on ties, lexicographically least id pair wins
                if (dist < best || (dist == best && key < best_key)) {
                    best = dist;
                    best_key = key;
                    best_a = a;
                    best_b = b;
                }
            }
        }

        const std::size_t a = best_a, b = best_b;
        Merge m;
        m.height = best;
        m.size = size[a] + size[b];
        if (min_leaf[a] <= min_leaf[b]) {
            m.left = id[a];
            m.right = id[b];
        } else {
            m.left = id[b];
            m.right = id[a];
        }
        out.merges.push_back(m);

        for (std::size_t k = 0; k < n; ++k) {
            if (!alive[k] || k == a || k == b) continue;
            w[a][k] = w[k][a] = lance_williams(w[a][k], w[b][k], l);
        }
        alive[b] = false;
        id[a] = n + t;
        size[a] += size[b];
        min_leaf[a] = std::min(min_leaf[a], min_leaf[b]);
    }
    return out;
}

Dendrogram cluster_nn_chain(const DistanceMatrix& d, Linkage l) {
    check_input(d);
    const std::size_t n = d.n;

    std::vector<double> work = d.condensed;  // updated in place
    auto dist = [&](std::size_t i, std::size_t j) -> double& {
        if (i > j) std::swap(i, j);
        return work[condensed_index(i, j, n)];
    };

    std::vector<bool> alive(n, true);
    std::vector<std::size_t> size(n, 1);
    std::vector<std::size_t> chain;
    chain.reserve(n);

    struct RawMerge {
        std::size_t rep_a, rep_b;  // leaf representatives of the two clusters
        double height;
    };
    std::vector<RawMerge> raw;
    raw.reserve(n - 1);

    std::size_t next_start = 0;
    while (raw.size() < n - 1) {
        if (chain.empty()) {
            while (!alive[next_start]) ++next_start;
            chain.push_back(next_start);
        }
        const std::size_t a = chain.back();
        const std::size_t prev = chain.size() >= 2 ? chain[chain.size() - 2] : n;

        // nearest alive neighbor of a; on ties prefer the chain predecessor
        // (guarantees termination), then the smallest index
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        if (prev < n) {
            best = prev;
            best_d = dist(a, prev);
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (!alive[b] || b == a || b == best) continue;
            const double db = dist(a, b);
            if (best == n || db < best_d) {
                best_d = db;
                best = b;
            }
            // ascending scan already keeps the smallest index among equals
        }

        if (best == prev) {
            // mutual nearest neighbors: merge
            chain.pop_back();
            chain.pop_back();
            raw.push_back({std::min(a, best), std::max(a, best), best_d});
            const std::size_t keep = std::min(a, best);
            const std::size_t kill = std::max(a, best);
            for (std::size_t k = 0; k < n; ++k) {
                if (!alive[k] || k == keep || k == kill) continue;
                dist(keep, k) = lance_williams(dist(keep, k), dist(kill, k), l);
            }
            alive[kill] = false;
            size[keep] += size[kill];
        } else {
            chain.push_back(best);
        }
    }

    // merges come out of the chain in arbitrary height order; sorting them
    // is valid because single and complete linkage admit no inversions
    std::stable_sort(raw.begin(), raw.end(),
                     [](const RawMerge& x, const RawMerge& y) { return x.height < y.height; });

    LeafForest forest(n);
    Dendrogram out;
    out.n_leaves = n;
    out.labels = d.labels;
    out.merges.reserve(n - 1);
    for (std::size_t t = 0; t < raw.size(); ++t) {
        std::size_t ra = forest.find(raw[t].rep_a);
        std::size_t rb = forest.find(raw[t].rep_b);
        Merge m;
        m.height = raw[t].height;
        m.size = forest.size[ra] + forest.size[rb];
        if (forest.min_leaf[ra] <= forest.min_leaf[rb]) {
            m.left = forest.cluster_id[ra];
            m.right = forest.cluster_id[rb];
        } else {
            m.left = forest.cluster_id[rb];
            m.right = forest.cluster_id[ra];
        }
        out.merges.push_back(m);
        forest.unite(ra, rb, n + t);
    }
    return out;
}

}  // namespace hcluster
