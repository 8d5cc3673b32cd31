#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace otg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FeatureType { Numeric, Integer, Categorical };
enum class Role { Predictor, Target };

struct ValueRange {
    double lo = 0.0;
    double hi = 0.0;
};

struct ColumnSpec {
    std::string name;
    FeatureType type = FeatureType::Numeric;
    Role role = Role::Predictor;
    std::vector<std::string> levels;   // categorical only; non-empty, duplicate-free
    std::optional<ValueRange> range;   // numeric/integer validity bounds

    bool is_categorical() const { return type == FeatureType::Categorical; }

    // Index of a level name, -1 if undeclared.
    int level_index(const std::string& level) const;
};

class Schema {
public:
    Schema() = default;
    explicit Schema(std::vector<ColumnSpec> columns);

    const std::vector<ColumnSpec>& columns() const { return columns_; }
    std::size_t size() const { return columns_.size(); }
    const ColumnSpec& at(std::size_t i) const { return columns_[i]; }

    // -1 when absent.
    int find(const std::string& name) const;
    std::size_t target_index() const { return target_index_; }
    const ColumnSpec& target() const { return columns_[target_index_]; }

    bool operator==(const Schema& other) const;

    // The 18-column student-record schema: 17 predictors plus the OTG target.
    static const Schema& canonical();

private:
    std::vector<ColumnSpec> columns_;
    std::size_t target_index_ = 0;
};

// Canonical column names, in CSV order.
namespace col {
inline constexpr const char* kMajor = "Major";
inline constexpr const char* kFaculty = "Faculty";
inline constexpr const char* kGender = "Gender";
inline constexpr const char* kYear = "Year";
inline constexpr const char* kSchoolType = "School_Type";
inline constexpr const char* kHighschoolGpa = "Highschool.GPA";
inline constexpr const char* kFamilyIncome = "FAMILY_INCOME";
inline constexpr const char* kAptVerbal = "Apt_Verbal";
inline constexpr const char* kAprovMath = "Aprov_Math";
inline constexpr const char* kAptMath = "Apt_Math";
inline constexpr const char* kAprovSpanish = "Aprov_Spanish";
inline constexpr const char* kAprovEnglish = "Aprov_English";
inline constexpr const char* kEducFather = "EDUC_FATHER";
inline constexpr const char* kEducMother = "EDUC_MOTHER";
inline constexpr const char* kFirstYearGpa = "1_YR_GPA";
inline constexpr const char* kRelStudGpa = "Rel_Stud_GPA";
inline constexpr const char* kRelSchoolGpa = "Rel_School_GPA";
inline constexpr const char* kOtg = "OTG";
}  // namespace col

}  // namespace otg
