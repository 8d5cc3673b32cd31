#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "otg/schema.hpp"

namespace otg {

// One column of values. Numeric/integer cells live in `num`, categorical
// cells in `cat` as level indices. Cells flagged in `missing` hold a
// placeholder and must not be read.
struct Column {
    std::vector<double> num;
    std::vector<std::int32_t> cat;
    std::vector<std::uint8_t> missing;

    std::size_t size(FeatureType t) const {
        return t == FeatureType::Categorical ? cat.size() : num.size();
    }
};

// Columnar table of student records. Treated as immutable once built; all
// operations return fresh datasets.
struct Dataset {
    Schema schema;
    std::vector<Column> columns;
    std::vector<std::int64_t> row_ids;
    // Auxiliary school assignment used to derive the relative-GPA features.
    // Not part of the schema and not serialized to CSV; empty when unknown.
    std::vector<std::int32_t> school_ids;

    std::size_t n_rows() const { return row_ids.size(); }
    std::size_t n_cols() const { return schema.size(); }
    bool has_school_ids() const { return !school_ids.empty(); }

    bool is_missing(std::size_t col, std::size_t row) const {
        return columns[col].missing[row] != 0;
    }
    double num_at(std::size_t col, std::size_t row) const {
        return columns[col].num[row];
    }
    std::int32_t cat_at(std::size_t col, std::size_t row) const {
        return columns[col].cat[row];
    }
    const std::string& level_at(std::size_t col, std::size_t row) const {
        return schema.at(col).levels[static_cast<std::size_t>(cat_at(col, row))];
    }

    std::size_t missing_cell_count() const;

    // Empty table with the given schema; reserve() sizes every column.
    static Dataset empty(Schema schema);
    void reserve(std::size_t rows);

    // Copies row `row` of `src` onto the end of this dataset (same schema).
    void append_row_from(const Dataset& src, std::size_t row);
};

struct Violation {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string column_name;
    std::string message;
};

// All invariant violations (range, level index, column length). Violations
// are data, not failures: an empty list means the dataset invariants hold.
std::vector<Violation> validate(const Dataset& ds);

// Rows with zero missing cells, original order and row ids retained.
Dataset drop_missing(const Dataset& ds);

}  // namespace otg
