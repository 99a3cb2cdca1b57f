#pragma once

#include <cstddef>
#include <cstdint>

#include "hcluster/data_matrix.hpp"

namespace hcluster {

// Synthetic survey generator. Four course blocks (SCU01xx: 14 columns,
// SCU02xx: 17, SCU03xx: 9, SCU04xx: 3); courses within a block share a
// frequency profile plus noise. Integer frequencies in [0, max_frequency].
// Fully determined by the seed.
struct GenerateConfig {
    std::uint64_t seed = 0;
    std::size_t respondents = 30;
    int max_frequency = 5;
};

DataMatrix generate_dataset(const GenerateConfig& cfg);

}  // namespace hcluster
