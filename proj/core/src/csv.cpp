#include "otg/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

namespace otg {

namespace {

bool is_missing_token(std::string_view s) { return s.empty() || s == "NA"; }

std::vector<std::string_view> split_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_number(std::string_view s, std::size_t row, const std::string& column) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error("csv: unparseable cell '" + std::string(s) + "' at row " +
                    std::to_string(row) + ", column " + column);
    }
    return v;
}

void format_number(std::string& out, double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

}  // namespace

Dataset load_csv_string(const std::string& text, const Schema& schema) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw Error("csv: empty input, header row required");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split_line(line);
    if (header.size() != schema.size()) {
        throw Error("csv: header has " + std::to_string(header.size()) +
                    " columns, schema expects " + std::to_string(schema.size()));
    }
    for (std::size_t c = 0; c < schema.size(); ++c) {
        if (header[c] != schema.at(c).name) {
            throw Error("csv: header column " + std::to_string(c + 1) + " is '" +
                        std::string(header[c]) + "', schema expects '" +
                        schema.at(c).name + "'");
        }
    }

    Dataset ds = Dataset::empty(schema);
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.eof()) break;
        ++row;
        const auto fields = split_line(line);
        if (fields.size() != schema.size()) {
            throw Error("csv: row " + std::to_string(row) + " has " +
                        std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(schema.size()));
        }
        for (std::size_t c = 0; c < schema.size(); ++c) {
            const ColumnSpec& spec = schema.at(c);
            Column& col = ds.columns[c];
            const std::string_view cell = fields[c];
            if (is_missing_token(cell)) {
                col.missing.push_back(1);
                if (spec.is_categorical()) {
                    col.cat.push_back(-1);
                } else {
                    col.num.push_back(std::nan(""));
                }
                continue;
            }
            col.missing.push_back(0);
            if (spec.is_categorical()) {
                const int idx = spec.level_index(std::string(cell));
                if (idx < 0) {
                    throw Error("csv: undeclared level '" + std::string(cell) +
                                "' at row " + std::to_string(row) + ", column " +
                                spec.name);
                }
                col.cat.push_back(idx);
            } else {
                const double v = parse_number(cell, row, spec.name);
                if (spec.type == FeatureType::Integer && v != std::floor(v)) {
                    throw Error("csv: non-integral value '" + std::string(cell) +
                                "' at row " + std::to_string(row) + ", column " +
                                spec.name);
                }
                if (spec.range && (v < spec.range->lo || v > spec.range->hi)) {
                    throw Error("csv: value " + std::string(cell) +
                                " outside valid range at row " + std::to_string(row) +
                                ", column " + spec.name);
                }
                col.num.push_back(v);
            }
        }
        ds.row_ids.push_back(static_cast<std::int64_t>(row - 1));
    }
    return ds;
}

Dataset load_csv(const std::string& path, const Schema& schema) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("csv: cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return load_csv_string(buf.str(), schema);
}

std::string write_csv_string(const Dataset& ds) {
    std::string out;
    for (std::size_t c = 0; c < ds.n_cols(); ++c) {
        if (c) out.push_back(',');
        out += ds.schema.at(c).name;
    }
    out.push_back('\n');
    for (std::size_t r = 0; r < ds.n_rows(); ++r) {
        for (std::size_t c = 0; c < ds.n_cols(); ++c) {
            if (c) out.push_back(',');
            if (ds.is_missing(c, r)) continue;
            const ColumnSpec& spec = ds.schema.at(c);
            if (spec.is_categorical()) {
                out += ds.level_at(c, r);
            } else if (spec.type == FeatureType::Integer) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%lld",
                              static_cast<long long>(ds.num_at(c, r)));
                out += buf;
            } else {
                format_number(out, ds.num_at(c, r));
            }
        }
        out.push_back('\n');
    }
    return out;
}

void write_csv(const Dataset& ds, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("csv: cannot open file for writing '" + path + "'");
    const std::string text = write_csv_string(ds);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw Error("csv: write failed for '" + path + "'");
}

}  // namespace otg
