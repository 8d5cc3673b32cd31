#include "otg/split.hpp"

#include <cmath>
#include <numeric>

#include "otg/rng.hpp"

namespace otg {

namespace {

void check_fractions(const std::vector<double>& fractions) {
    if (fractions.empty()) throw Error("split: no fractions given");
    double sum = 0.0;
    for (double f : fractions) {
        if (!(f > 0.0)) throw Error("split: fractions must be positive");
        sum += f;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw Error("split: fractions sum to " + std::to_string(sum) + ", expected 1");
    }
}

}  // namespace

std::vector<std::size_t> split_sizes(std::size_t n, const std::vector<double>& fractions) {
    check_fractions(fractions);
    std::vector<std::size_t> sizes(fractions.size());
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        sizes[i] = static_cast<std::size_t>(
            std::floor(fractions[i] * static_cast<double>(n)));
        assigned += sizes[i];
    }
    sizes[0] += n - assigned;  // remainder to the first part
    return sizes;
}

std::vector<Dataset> split(const Dataset& ds, const SplitSpec& spec) {
    if (ds.n_rows() == 0) throw Error("split: dataset is empty");
    const std::vector<std::size_t> sizes = split_sizes(ds.n_rows(), spec.fractions);

    std::vector<std::size_t> perm(ds.n_rows());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rng rng(spec.seed);
    rng.shuffle(perm);

    std::vector<Dataset> parts;
    parts.reserve(sizes.size());
    std::size_t offset = 0;
    for (std::size_t s : sizes) {
        Dataset part = Dataset::empty(ds.schema);
        part.reserve(s);
        for (std::size_t i = 0; i < s; ++i) {
            part.append_row_from(ds, perm[offset + i]);
        }
        offset += s;
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace otg
