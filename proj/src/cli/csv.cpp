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

#include "cavent/cli/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "cavent/errors.hpp"

namespace cavent::cli {

std::string format_double(double v)
{
    if (v == 0.0) return "0"; // also folds -0
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) throw Error(ErrorKind::Range, "cannot format floating-point value");
    return std::string(buf.data(), ptr);
}

namespace {

struct CellWriter {
    std::ostream& os;
    void operator()(std::monostate) const {}
    void operator()(double v) const { os << format_double(v); }
    void operator()(long long v) const { os << v; }
    void operator()(const std::string& v) const { os << v; }
};

} // namespace

void write_csv(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& header,
               const Table& table)
{
    for (const auto& [k, v] : header) os << "# " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ",";
        os << table.columns[i];
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            std::visit(CellWriter{os}, row[i]);
        }
        os << "\n";
    }
    for (const auto& line : table.trailer) os << "# " << line << "\n";
}

void write_csv_file(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& header,
                    const Table& table)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    write_csv(out, header, table);
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "failed while writing '" + path + "'");
}

ParsedCsv read_csv(std::istream& is)
{
    ParsedCsv parsed;
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.front() == '#') {
            parsed.comments.push_back(line);
            continue;
        }
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const auto next = line.find(',', pos);
            fields.push_back(line.substr(pos, next - pos));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (!have_header) {
            parsed.columns = std::move(fields);
            have_header = true;
        } else {
            parsed.rows.push_back(std::move(fields));
        }
    }
    return parsed;
}

} // namespace cavent::cli
