#pragma once

#include <string>

#include "otg/dataset.hpp"

namespace otg {

// Canonical CSV: comma separated, header row with exact schema column names,
// "." decimal separator, empty cell or "NA" marks a missing value. Fields
// must not contain commas. Row ids are assigned in file order starting at 0.
Dataset load_csv(const std::string& path, const Schema& schema);
Dataset load_csv_string(const std::string& text, const Schema& schema);

// Bit-reproducible writer: numerics use the shortest round-trip decimal
// form, missing cells are written empty.
std::string write_csv_string(const Dataset& ds);
void write_csv(const Dataset& ds, const std::string& path);

}  // namespace otg
