#include "otg/features.hpp"

#include <cmath>

namespace otg {

const char* to_string(FeatureGroup g) {
    return g == FeatureGroup::GroupI ? "I" : "II";
}

double relative_student_gpa(double hs_gpa, double school_mean_hs_gpa) {
    if (!(school_mean_hs_gpa > 0.0)) {
        throw Error("relative_student_gpa: school mean must be positive");
    }
    return hs_gpa / school_mean_hs_gpa;
}

double relative_school_gpa(double mean_first_year, double mean_hs) {
    if (!(mean_hs > 0.0)) {
        throw Error("relative_school_gpa: school mean must be positive");
    }
    return mean_first_year / mean_hs;
}

SchoolStats compute_school_stats(const Dataset& train, std::size_t min_n) {
    if (train.n_rows() == 0) throw Error("school stats: empty training set");
    if (!train.has_school_ids()) throw Error("school stats: dataset has no school ids");

    const int hs = train.schema.find(col::kHighschoolGpa);
    const int fy = train.schema.find(col::kFirstYearGpa);
    if (hs < 0 || fy < 0) {
        throw Error("school stats: dataset lacks the GPA columns");
    }
    const std::size_t hs_c = static_cast<std::size_t>(hs);
    const std::size_t fy_c = static_cast<std::size_t>(fy);

    struct Acc {
        double hs_sum = 0.0, fy_sum = 0.0;
        std::size_t hs_n = 0, fy_n = 0, rows = 0;
    };
    std::map<std::int32_t, Acc> acc;
    Acc all;
    for (std::size_t r = 0; r < train.n_rows(); ++r) {
        Acc& a = acc[train.school_ids[r]];
        ++a.rows;
        ++all.rows;
        if (!train.is_missing(hs_c, r)) {
            a.hs_sum += train.num_at(hs_c, r);
            ++a.hs_n;
            all.hs_sum += train.num_at(hs_c, r);
            ++all.hs_n;
        }
        if (!train.is_missing(fy_c, r)) {
            a.fy_sum += train.num_at(fy_c, r);
            ++a.fy_n;
            all.fy_sum += train.num_at(fy_c, r);
            ++all.fy_n;
        }
    }
    if (all.hs_n == 0 || all.fy_n == 0) {
        throw Error("school stats: no non-missing GPA values in training set");
    }

    SchoolStats stats;
    stats.min_n = min_n;
    stats.global = {all.hs_sum / static_cast<double>(all.hs_n),
                    all.fy_sum / static_cast<double>(all.fy_n), all.rows};
    for (const auto& [school, a] : acc) {
        if (a.rows < min_n || a.hs_n == 0 || a.fy_n == 0) continue;
        stats.per_school[school] = {a.hs_sum / static_cast<double>(a.hs_n),
                                    a.fy_sum / static_cast<double>(a.fy_n), a.rows};
    }
    return stats;
}

Dataset apply_relative_gpa(const Dataset& ds, const SchoolStats& stats) {
    if (!ds.has_school_ids()) {
        throw Error("relative gpa: dataset has no school ids");
    }
    const int hs = ds.schema.find(col::kHighschoolGpa);
    const int rs = ds.schema.find(col::kRelStudGpa);
    const int rsc = ds.schema.find(col::kRelSchoolGpa);
    if (hs < 0 || rs < 0) throw Error("relative gpa: required columns absent");

    Dataset out = ds;
    Column& stud = out.columns[static_cast<std::size_t>(rs)];
    for (std::size_t r = 0; r < out.n_rows(); ++r) {
        const SchoolStats::Entry& e = stats.lookup(out.school_ids[r]);
        if (!out.is_missing(static_cast<std::size_t>(hs), r)) {
            stud.num[r] = relative_student_gpa(
                out.num_at(static_cast<std::size_t>(hs), r), e.mean_hs_gpa);
            stud.missing[r] = 0;
        } else {
            stud.num[r] = std::nan("");
            stud.missing[r] = 1;
        }
        if (rsc >= 0) {
            Column& school = out.columns[static_cast<std::size_t>(rsc)];
            school.num[r] = relative_school_gpa(e.mean_first_year_gpa, e.mean_hs_gpa);
            school.missing[r] = 0;
        }
    }
    return out;
}

Dataset select_features(const Dataset& ds, FeatureGroup group) {
    if (group == FeatureGroup::GroupI) return ds;

    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < ds.n_cols(); ++c) {
        const std::string& name = ds.schema.at(c).name;
        if (name == col::kFirstYearGpa || name == col::kRelSchoolGpa) continue;
        keep.push_back(c);
    }
    if (keep.size() == ds.n_cols()) return ds;  // already Group II shaped

    std::vector<ColumnSpec> specs;
    specs.reserve(keep.size());
    for (std::size_t c : keep) specs.push_back(ds.schema.at(c));

    Dataset out;
    out.schema = Schema(std::move(specs));
    out.columns.reserve(keep.size());
    for (std::size_t c : keep) out.columns.push_back(ds.columns[c]);
    out.row_ids = ds.row_ids;
    out.school_ids = ds.school_ids;
    return out;
}

int EncodingSpec::numeric_stat_index(const std::string& column) const {
    for (std::size_t i = 0; i < numeric_stats.size(); ++i) {
        if (numeric_stats[i].column == column) return static_cast<int>(i);
    }
    return -1;
}

EncodingSpec fit_encoding(const Dataset& train) {
    if (train.n_rows() == 0) throw Error("fit_encoding: empty training set");
    if (train.missing_cell_count() != 0) {
        throw Error("fit_encoding: training set has missing cells");
    }

    EncodingSpec spec;
    spec.schema = train.schema;
    const double n = static_cast<double>(train.n_rows());
    for (std::size_t c = 0; c < train.n_cols(); ++c) {
        const ColumnSpec& cs = train.schema.at(c);
        if (cs.role == Role::Target) continue;
        if (cs.is_categorical()) {
            spec.encoded_width += cs.levels.size();
            continue;
        }
        double sum = 0.0;
        for (double v : train.columns[c].num) sum += v;
        const double mean = sum / n;
        double ss = 0.0;
        for (double v : train.columns[c].num) ss += (v - mean) * (v - mean);
        const double sd = std::sqrt(ss / n);
        if (sd > 0.0) {
            spec.numeric_stats.push_back({cs.name, mean, sd});
            ++spec.encoded_width;
        } else {
            spec.dropped_columns.push_back(cs.name);
        }
    }
    return spec;
}

EncodedMatrix encode(const EncodingSpec& spec, const Dataset& ds) {
    if (!(spec.schema == ds.schema)) {
        throw Error("encode: dataset schema does not match the fitted encoding");
    }
    if (ds.missing_cell_count() != 0) {
        throw Error("encode: dataset has missing cells");
    }

    EncodedMatrix m;
    m.rows = ds.n_rows();
    m.cols = spec.encoded_width;
    m.row_ids = ds.row_ids;
    for (std::size_t c = 0; c < ds.n_cols(); ++c) {
        const ColumnSpec& cs = ds.schema.at(c);
        if (cs.role == Role::Target) continue;
        if (cs.is_categorical()) {
            for (const std::string& level : cs.levels) {
                m.origins.push_back({cs.name, level});
            }
        } else if (spec.numeric_stat_index(cs.name) >= 0) {
            m.origins.push_back({cs.name, "numeric"});
        }
    }

    m.values.assign(m.rows * m.cols, 0.0);
    m.labels.resize(m.rows);
    const std::size_t target = ds.schema.target_index();
    const int n_level = ds.schema.at(target).level_index("N");

    for (std::size_t r = 0; r < m.rows; ++r) {
        double* row = m.values.data() + r * m.cols;
        std::size_t j = 0;
        for (std::size_t c = 0; c < ds.n_cols(); ++c) {
            const ColumnSpec& cs = ds.schema.at(c);
            if (cs.role == Role::Target) continue;
            if (cs.is_categorical()) {
                const std::int32_t idx = ds.cat_at(c, r);
                if (idx < 0 || static_cast<std::size_t>(idx) >= cs.levels.size()) {
                    throw Error("encode: unseen level index in column '" + cs.name + "'");
                }
                row[j + static_cast<std::size_t>(idx)] = 1.0;
                j += cs.levels.size();
            } else {
                const int si = spec.numeric_stat_index(cs.name);
                if (si < 0) continue;  // dropped zero-variance column
                const EncodingSpec::NumericStat& st =
                    spec.numeric_stats[static_cast<std::size_t>(si)];
                row[j++] = (ds.num_at(c, r) - st.mean) / st.std;
            }
        }
        // Positive class is failure to graduate on time (OTG = N).
        m.labels[r] = ds.cat_at(target, r) == n_level ? 1 : 0;
    }
    return m;
}

}  // namespace otg
