#pragma once

#include <cstdint>
#include <vector>

#include "otg/dataset.hpp"

namespace otg {

struct SplitSpec {
    std::vector<double> fractions;  // positive, sum to 1 within 1e-12
    std::uint64_t seed = 0;
};

// Seeded uniform permutation of the rows, partitioned by cumulative
// fractions. Part sizes are floor(n * f_i) with the remainder assigned to
// the first part; parts are disjoint and exhaustive.
std::vector<Dataset> split(const Dataset& ds, const SplitSpec& spec);

// Size allocation alone (exposed for tests and reporting).
std::vector<std::size_t> split_sizes(std::size_t n, const std::vector<double>& fractions);

}  // namespace otg
