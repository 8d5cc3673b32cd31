#include "otg/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "otg/schema.hpp"

namespace otg {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred) {
    if (y_true.size() != y_pred.size()) {
        throw Error("confusion: label vectors differ in length");
    }
    if (y_true.empty()) throw Error("confusion: empty label vectors");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        if (y_true[i] == 1) {
            y_pred[i] == 1 ? ++cm.tp : ++cm.fn;
        } else {
            y_pred[i] == 1 ? ++cm.fp : ++cm.tn;
        }
    }
    return cm;
}

double recall(const ConfusionMatrix& cm) {
    const long long denom = cm.tp + cm.fn;
    if (denom == 0) return kNaN;
    return static_cast<double>(cm.tp) / static_cast<double>(denom);
}

double precision(const ConfusionMatrix& cm) {
    const long long denom = cm.tp + cm.fp;
    if (denom == 0) return kNaN;
    return static_cast<double>(cm.tp) / static_cast<double>(denom);
}

double f1(const ConfusionMatrix& cm) {
    // Harmonic form 2tp / (2tp + fp + fn); equals 2PR/(P+R) when both are
    // defined and yields the stated f1 = 0 when P = R = 0.
    const long long denom = 2 * cm.tp + cm.fp + cm.fn;
    if (denom == 0) return kNaN;
    return 2.0 * static_cast<double>(cm.tp) / static_cast<double>(denom);
}

double minority_recall(const ConfusionMatrix& cm) {
    const long long denom = cm.tn + cm.fp;
    if (denom == 0) return kNaN;
    return static_cast<double>(cm.tn) / static_cast<double>(denom);
}

double p_incorrect_graduated(const ConfusionMatrix& cm) {
    const long long total = cm.total();
    if (total == 0) throw Error("p_incorrect_graduated: empty confusion matrix");
    return static_cast<double>(cm.fn) / static_cast<double>(total);
}

std::vector<IdentityResult> verify_table_identity(std::span<const IdentityRow> rows,
                                                  double prevalence, double tol) {
    if (rows.empty()) throw Error("verify_table_identity: no rows");
    std::vector<IdentityResult> out;
    out.reserve(rows.size());
    for (const IdentityRow& r : rows) {
        IdentityResult res;
        res.expected = (1.0 - r.recall) * prevalence;
        res.residual = std::fabs(r.p_err - res.expected);
        res.pass = res.residual <= tol;
        out.push_back(res);
    }
    return out;
}

}  // namespace otg
