#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "otg/dataset.hpp"

namespace otg {

enum class FeatureGroup { GroupI, GroupII };

const char* to_string(FeatureGroup g);

// Per-school mean high-school GPA and mean first-year GPA, with global
// fallbacks for schools unseen in training or smaller than min_n.
struct SchoolStats {
    struct Entry {
        double mean_hs_gpa = 0.0;
        double mean_first_year_gpa = 0.0;
        std::size_t n_students = 0;
    };
    std::map<std::int32_t, Entry> per_school;  // only schools with n >= min_n
    Entry global;                              // fallback over all training rows
    std::size_t min_n = 5;

    const Entry& lookup(std::int32_t school_id) const {
        auto it = per_school.find(school_id);
        return it == per_school.end() ? global : it->second;
    }
};

// hs_gpa / school mean high-school GPA.
double relative_student_gpa(double hs_gpa, double school_mean_hs_gpa);

// school mean first-year GPA / school mean high-school GPA.
double relative_school_gpa(double mean_first_year, double mean_hs);

// Arithmetic means per school over non-missing training rows; schools with
// fewer than min_n contributing rows fold into the global fallback.
SchoolStats compute_school_stats(const Dataset& train, std::size_t min_n = 5);

// Overwrites the Rel_Stud_GPA / Rel_School_GPA columns (missing flags
// cleared) from the dataset's school assignment and the given stats.
// Requires school ids.
Dataset apply_relative_gpa(const Dataset& ds, const SchoolStats& stats);

// Group I keeps all 17 predictors; Group II removes 1_YR_GPA and
// Rel_School_GPA. The target is always retained.
Dataset select_features(const Dataset& ds, FeatureGroup group);

// Frozen encoding: declared one-hot level lists, training mean/std per
// numeric column (population denominator), label map OTG N -> 1.
struct EncodingSpec {
    struct NumericStat {
        std::string column;
        double mean = 0.0;
        double std = 0.0;  // population
    };
    Schema schema;  // schema the spec was fitted on
    std::vector<NumericStat> numeric_stats;       // schema order
    std::vector<std::string> dropped_columns;     // zero-variance numerics
    std::size_t encoded_width = 0;

    int numeric_stat_index(const std::string& column) const;
};

struct EncodedMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row-major
    std::vector<int> labels;     // 1 = positive = not graduating on time
    struct ColumnOrigin {
        std::string source;
        std::string level;  // "numeric" for standardized numeric columns
    };
    std::vector<ColumnOrigin> origins;
    std::vector<std::int64_t> row_ids;

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    const double* row(std::size_t r) const { return values.data() + r * cols; }
};

EncodingSpec fit_encoding(const Dataset& train);
EncodedMatrix encode(const EncodingSpec& spec, const Dataset& ds);

}  // namespace otg
