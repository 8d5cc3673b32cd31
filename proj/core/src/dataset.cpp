#include "otg/dataset.hpp"

#include <cmath>

namespace otg {

std::size_t Dataset::missing_cell_count() const {
    std::size_t n = 0;
    for (const Column& c : columns) {
        for (std::uint8_t m : c.missing) n += m;
    }
    return n;
}

Dataset Dataset::empty(Schema schema) {
    Dataset ds;
    ds.columns.resize(schema.size());
    ds.schema = std::move(schema);
    return ds;
}

void Dataset::reserve(std::size_t rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        columns[i].missing.reserve(rows);
        if (schema.at(i).is_categorical()) {
            columns[i].cat.reserve(rows);
        } else {
            columns[i].num.reserve(rows);
        }
    }
    row_ids.reserve(rows);
}

void Dataset::append_row_from(const Dataset& src, std::size_t row) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const Column& in = src.columns[c];
        Column& out = columns[c];
        if (schema.at(c).is_categorical()) {
            out.cat.push_back(in.cat[row]);
        } else {
            out.num.push_back(in.num[row]);
        }
        out.missing.push_back(in.missing[row]);
    }
    row_ids.push_back(src.row_ids[row]);
    if (src.has_school_ids()) school_ids.push_back(src.school_ids[row]);
}

std::vector<Violation> validate(const Dataset& ds) {
    std::vector<Violation> out;
    const std::size_t n = ds.n_rows();
    for (std::size_t c = 0; c < ds.n_cols(); ++c) {
        const ColumnSpec& spec = ds.schema.at(c);
        const Column& col = ds.columns[c];
        if (col.size(spec.type) != n || col.missing.size() != n) {
            out.push_back({0, c, spec.name, "column length mismatch"});
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (col.missing[r]) continue;
            if (spec.is_categorical()) {
                const std::int32_t idx = col.cat[r];
                if (idx < 0 || static_cast<std::size_t>(idx) >= spec.levels.size()) {
                    out.push_back({r, c, spec.name, "level index out of range"});
                }
            } else {
                const double v = col.num[r];
                if (!std::isfinite(v)) {
                    out.push_back({r, c, spec.name, "non-finite value"});
                    continue;
                }
                if (spec.type == FeatureType::Integer && v != std::floor(v)) {
                    out.push_back({r, c, spec.name, "non-integral value"});
                }
                if (spec.range && (v < spec.range->lo || v > spec.range->hi)) {
                    out.push_back({r, c, spec.name,
                                   "value " + std::to_string(v) + " outside [" +
                                       std::to_string(spec.range->lo) + ", " +
                                       std::to_string(spec.range->hi) + "]"});
                }
            }
        }
    }
    return out;
}

Dataset drop_missing(const Dataset& ds) {
    Dataset out = Dataset::empty(ds.schema);
    const std::size_t n = ds.n_rows();
    out.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        bool any = false;
        for (std::size_t c = 0; c < ds.n_cols() && !any; ++c) {
            any = ds.is_missing(c, r);
        }
        if (!any) out.append_row_from(ds, r);
    }
    return out;
}

}  // namespace otg
