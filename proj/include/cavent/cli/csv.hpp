// Copyright 2026 The cavent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cavent::cli {

// Shortest representation that parses back to the same double.
std::string format_double(double v);

// Undefined values are written as empty fields.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> trailer; // summary comment lines after the data
};

// Comment header lines `# key = value`, the column row, data rows, then the
// trailer lines prefixed with `# `.
void write_csv(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& header,
               const Table& table);

// Writes to a file; throws ErrorKind::Io when the path is not writable.
void write_csv_file(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& header,
                    const Table& table);

struct ParsedCsv {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

ParsedCsv read_csv(std::istream& is);

} // namespace cavent::cli
