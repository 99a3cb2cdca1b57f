#include "hcluster/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hcluster {

namespace {

struct CourseBlock {
    const char* prefix;
    std::size_t count;
    double base;  // typical frequency level for the block
};

// university, faculty, study program, elective
constexpr CourseBlock kBlocks[] = {
    {"SCU01", 14, 4.2},
    {"SCU02", 17, 3.0},
    {"SCU03", 9, 2.0},
    {"SCU04", 3, 1.0},
};

}  // namespace

DataMatrix generate_dataset(const GenerateConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> offset_dist(-0.9, 0.9);
    std::normal_distribution<double> noise_dist(0.0, 0.9);

    DataMatrix m;
    std::vector<double> course_level;
    for (const CourseBlock& block : kBlocks) {
        for (std::size_t c = 1; c <= block.count; ++c) {
            char code[16];
            std::snprintf(code, sizeof(code), "%s%02zu", block.prefix, c);
            m.col_labels.emplace_back(code);
            course_level.push_back(block.base + offset_dist(rng));
        }
    }

    const double max_f = static_cast<double>(cfg.max_frequency);
    for (std::size_t r = 0; r < cfg.respondents; ++r) {
        m.row_labels.push_back("s" + std::to_string(r + 1));
        std::vector<double> row(course_level.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            const double raw = std::round(course_level[c] + noise_dist(rng));
            row[c] = std::clamp(raw, 0.0, max_f) + 0.0;  // normalize -0.0
        }
        m.values.push_back(std::move(row));
    }
    return m;
}

}  // namespace hcluster
