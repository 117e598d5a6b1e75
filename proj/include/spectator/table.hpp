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

#ifndef SPECTATOR_TABLE_HPP
#define SPECTATOR_TABLE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace spectator {

/// 12 significant digits, fixed across platforms ("%.12g").
std::string format_float(double value);

/// Rows of numbers under named columns; the CSV form is what the CLI writes.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);
    std::vector<double> column(std::string_view name) const;
    std::string to_csv() const;
};

}  // namespace spectator

#endif
