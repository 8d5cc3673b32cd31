#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace otg {

// Counts with positive class = not graduating on time.
struct ConfusionMatrix {
    long long tp = 0;
    long long fp = 0;
    long long fn = 0;
    long long tn = 0;

    long long total() const { return tp + fp + fn + tn; }
};

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred);

// Undefined ratios are reported as NaN, never silently coerced; the single
// stated exception is f1 = 0 when precision = recall = 0.
double recall(const ConfusionMatrix& cm);
double precision(const ConfusionMatrix& cm);
double f1(const ConfusionMatrix& cm);

// Minority-class (graduated on time) recall: tn / (tn + fp).
double minority_recall(const ConfusionMatrix& cm);

// Fraction of all test students wrongly predicted to graduate on time:
// fn / total. Equals (1 - recall) * prevalence.
double p_incorrect_graduated(const ConfusionMatrix& cm);

struct IdentityRow {
    double recall = 0.0;
    double p_err = 0.0;
};

struct IdentityResult {
    double expected = 0.0;  // (1 - recall) * prevalence
    double residual = 0.0;  // |p_err - expected|
    bool pass = false;
};

// Consistency check used against the published result tables:
// |p_err - (1 - recall) * prevalence| <= tol.
std::vector<IdentityResult> verify_table_identity(std::span<const IdentityRow> rows,
                                                  double prevalence = 0.888,
                                                  double tol = 0.002);

}  // namespace otg
