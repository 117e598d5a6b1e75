// Copyright 2026 The spectator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spectator/table.hpp"

#include <cstdio>

#include "spectator/errors.hpp"

namespace spectator {

std::string format_float(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void SweepTable::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) {
        throw ValidationError("table row has " + std::to_string(row.size()) + " values for " +
                              std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::vector<double> SweepTable::column(std::string_view name) const {
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c] == name) {
            std::vector<double> out;
            for (const auto &r : rows) {
                out.push_back(r[c]);
            }
            return out;
        }
    }
    throw ValidationError("table has no column '" + std::string(name) + "'");
}

std::string SweepTable::to_csv() const {
    std::string out;
    for (size_t c = 0; c < columns.size(); c++) {
        out += (c ? "," : "") + columns[c];
    }
    out += '\n';
    for (const auto &r : rows) {
        for (size_t c = 0; c < r.size(); c++) {
            out += (c ? "," : "") + format_float(r[c]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace spectator
