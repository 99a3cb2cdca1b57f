// Compares the OpenMP pairwise kernel against the serial reference, and the
// nearest-neighbor-chain engine against the naive O(n^3) one.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "hcluster/ahc.hpp"
#include "hcluster/distance.hpp"

using namespace hcluster;

namespace {

FeatureSet random_items(std::size_t n, std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    FeatureSet f;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> v(dim);
        for (double& x : v) x = u(rng);
        f.vectors.push_back(std::move(v));
        f.labels.push_back("i" + std::to_string(i));
    }
    return f;
}

template <typename F>
double time_ms(F&& fn, int reps) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock::now();
        fn();
        const auto t1 = clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
    std::printf("pairwise: serial vs OpenMP (best of 3, ms)\n");
    std::printf("%8s %8s %12s %12s %8s\n", "n", "dim", "serial", "parallel", "speedup");
    for (auto [n, dim] : {std::pair<std::size_t, std::size_t>{500, 64},
                          {1000, 64},
                          {2000, 64},
                          {2000, 256}}) {
        const auto f = random_items(n, dim, 7);
        DistanceMatrix ds, dp;
        const double ts = time_ms([&] { ds = pairwise_serial(f); }, 3);
        const double tp = time_ms([&] { dp = pairwise(f); }, 3);
        const bool same = ds.condensed == dp.condensed;
        std::printf("%8zu %8zu %12.2f %12.2f %7.2fx%s\n", n, dim, ts, tp, ts / tp,
                    same ? "" : "  MISMATCH");
    }

    std::printf("\nclustering: naive vs nn-chain, complete linkage (best of 3, ms)\n");
    std::printf("%8s %12s %12s %8s\n", "n", "naive", "nn-chain", "speedup");
    for (std::size_t n : {100, 200, 400, 800}) {
        const auto d = pairwise(random_items(n, 8, 11));
        Dendrogram a, b;
        const double tn = time_ms([&] { a = cluster_naive(d, Linkage::Complete); }, 3);
        const double tc = time_ms([&] { b = cluster_nn_chain(d, Linkage::Complete); }, 3);
        bool same = a.merges.size() == b.merges.size();
        for (std::size_t t = 0; same && t < a.merges.size(); ++t)
            same = a.merges[t].height == b.merges[t].height;
        std::printf("%8zu %12.2f %12.2f %7.2fx%s\n", n, tn, tc, tn / tc,
                    same ? "" : "  MISMATCH");
    }
    return 0;
}
