#include "otg/impute.hpp"

#include <algorithm>
#include <cmath>

namespace otg {

Dataset impute_simple(const Dataset& train, const Dataset& apply_to) {
    if (!(train.schema == apply_to.schema)) {
        throw Error("impute: train and apply_to schemas differ");
    }
    Dataset out = apply_to;
    for (std::size_t c = 0; c < train.n_cols(); ++c) {
        const ColumnSpec& spec = train.schema.at(c);
        const Column& tcol = train.columns[c];
        Column& ocol = out.columns[c];

        bool any_missing = false;
        for (std::size_t r = 0; r < out.n_rows(); ++r) {
            if (ocol.missing[r]) { any_missing = true; break; }
        }
        if (!any_missing) continue;

        if (spec.is_categorical()) {
            std::vector<std::size_t> counts(spec.levels.size(), 0);
            std::size_t seen = 0;
            for (std::size_t r = 0; r < train.n_rows(); ++r) {
                if (tcol.missing[r]) continue;
                ++counts[static_cast<std::size_t>(tcol.cat[r])];
                ++seen;
            }
            if (seen == 0) {
                throw Error("impute: training column '" + spec.name + "' is all missing");
            }
            // Mode; on ties the lexicographically smallest level wins.
            std::size_t best = 0;
            for (std::size_t i = 1; i < counts.size(); ++i) {
                const bool better = counts[i] > counts[best] ||
                    (counts[i] == counts[best] && spec.levels[i] < spec.levels[best]);
                if (better) best = i;
            }
            for (std::size_t r = 0; r < out.n_rows(); ++r) {
                if (!ocol.missing[r]) continue;
                ocol.cat[r] = static_cast<std::int32_t>(best);
                ocol.missing[r] = 0;
            }
        } else {
            double sum = 0.0;
            std::size_t seen = 0;
            for (std::size_t r = 0; r < train.n_rows(); ++r) {
                if (tcol.missing[r]) continue;
                sum += tcol.num[r];
                ++seen;
            }
            if (seen == 0) {
                throw Error("impute: training column '" + spec.name + "' is all missing");
            }
            double fill = sum / static_cast<double>(seen);
            if (spec.type == FeatureType::Integer) {
                fill = std::floor(fill + 0.5);  // round half-up
                if (spec.range) {
                    fill = std::clamp(fill, spec.range->lo, spec.range->hi);
                }
            }
            for (std::size_t r = 0; r < out.n_rows(); ++r) {
                if (!ocol.missing[r]) continue;
                ocol.num[r] = fill;
                ocol.missing[r] = 0;
            }
        }
    }
    return out;
}

}  // namespace otg
