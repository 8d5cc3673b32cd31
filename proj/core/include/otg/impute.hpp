#pragma once

#include "otg/dataset.hpp"

namespace otg {

// Single-pass mean/mode imputation. Numeric and integer cells take the
// training-column mean (integers rounded half-up and clamped to the column
// range); categorical cells take the training-column mode, ties resolved to
// the lexicographically smallest level. Non-missing cells are left alone.
Dataset impute_simple(const Dataset& train, const Dataset& apply_to);

}  // namespace otg
