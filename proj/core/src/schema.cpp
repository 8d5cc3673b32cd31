#include "otg/schema.hpp"

#include <algorithm>
#include <unordered_set>

namespace otg {

int ColumnSpec::level_index(const std::string& level) const {
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] == level) return static_cast<int>(i);
    }
    return -1;
}

Schema::Schema(std::vector<ColumnSpec> columns) : columns_(std::move(columns)) {
    std::unordered_set<std::string> names;
    int target = -1;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        const ColumnSpec& c = columns_[i];
        if (!names.insert(c.name).second) {
            throw Error("schema: duplicate column name '" + c.name + "'");
        }
        if (c.is_categorical()) {
            if (c.levels.empty()) {
                throw Error("schema: categorical column '" + c.name + "' has no levels");
            }
            std::unordered_set<std::string> lv(c.levels.begin(), c.levels.end());
            if (lv.size() != c.levels.size()) {
                throw Error("schema: duplicate level in column '" + c.name + "'");
            }
        } else if (!c.levels.empty()) {
            throw Error("schema: non-categorical column '" + c.name + "' declares levels");
        }
        if (c.role == Role::Target) {
            if (target >= 0) throw Error("schema: more than one target column");
            target = static_cast<int>(i);
        }
    }
    if (target < 0) throw Error("schema: no target column");
    target_index_ = static_cast<std::size_t>(target);
}

int Schema::find(const std::string& name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

bool Schema::operator==(const Schema& other) const {
    if (columns_.size() != other.columns_.size()) return false;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        const ColumnSpec& a = columns_[i];
        const ColumnSpec& b = other.columns_[i];
        if (a.name != b.name || a.type != b.type || a.role != b.role ||
            a.levels != b.levels)
            return false;
    }
    return true;
}

namespace {

std::vector<std::string> numbered_levels(const std::string& prefix, int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::string s = std::to_string(i);
        if (s.size() < 2) s.insert(0, "0");
        out.push_back(prefix + s);
    }
    return out;
}

Schema make_canonical() {
    const ValueRange score{200.0, 800.0};
    const ValueRange gpa{0.0, 4.3};
    std::vector<ColumnSpec> cols;

    cols.push_back({col::kMajor, FeatureType::Categorical, Role::Predictor,
                    numbered_levels("MAJ", 54), std::nullopt});
    cols.push_back({col::kFaculty, FeatureType::Categorical, Role::Predictor,
                    {"Agricultural_Sciences", "Arts", "Sciences", "Engineering",
                     "Business_Administration"},
                    std::nullopt});
    cols.push_back({col::kGender, FeatureType::Categorical, Role::Predictor,
                    {"F", "M"}, std::nullopt});
    {
        std::vector<std::string> years;
        for (int y = 1999; y <= 2010; ++y) years.push_back(std::to_string(y));
        cols.push_back({col::kYear, FeatureType::Categorical, Role::Predictor,
                        years, std::nullopt});
    }
    cols.push_back({col::kSchoolType, FeatureType::Categorical, Role::Predictor,
                    {"Private", "Public", "Other"}, std::nullopt});
    cols.push_back({col::kHighschoolGpa, FeatureType::Numeric, Role::Predictor,
                    {}, gpa});
    cols.push_back({col::kFamilyIncome, FeatureType::Categorical, Role::Predictor,
                    {"lt_12499", "12500_19999", "20000_29999", "30000_49999",
                     "gt_50000"},
                    std::nullopt});
    for (const char* name : {col::kAptVerbal, col::kAprovMath, col::kAptMath,
                             col::kAprovSpanish, col::kAprovEnglish}) {
        cols.push_back({name, FeatureType::Integer, Role::Predictor, {}, score});
    }
    const std::vector<std::string> educ = {"No_education", "Less_than_HS",
                                           "HS_degree", "Associate_or_less",
                                           "College_degree", "Graduate_degree"};
    cols.push_back({col::kEducFather, FeatureType::Categorical, Role::Predictor,
                    educ, std::nullopt});
    cols.push_back({col::kEducMother, FeatureType::Categorical, Role::Predictor,
                    educ, std::nullopt});
    cols.push_back({col::kFirstYearGpa, FeatureType::Numeric, Role::Predictor,
                    {}, gpa});
    // Ratio features; no fixed validity range.
    cols.push_back({col::kRelStudGpa, FeatureType::Numeric, Role::Predictor,
                    {}, std::nullopt});
    cols.push_back({col::kRelSchoolGpa, FeatureType::Numeric, Role::Predictor,
                    {}, std::nullopt});
    cols.push_back({col::kOtg, FeatureType::Categorical, Role::Target,
                    {"Y", "N"}, std::nullopt});
    return Schema(std::move(cols));
}

}  // namespace

const Schema& Schema::canonical() {
    static const Schema schema = make_canonical();
    return schema;
}

}  // namespace otg
