// Copyright 2026 The mlgd Authors.
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

#include "mlgd/state_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "mlgd/errors.h"

namespace mlgd {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

GarbageState ParseInitialState(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::vector<double> row;
    std::size_t field_start = 0;
    while (true) {
      std::size_t comma = line.find(',', field_start);
      const std::string_view field = Trim(line.substr(
          field_start, comma == std::string_view::npos ? std::string_view::npos
                                                       : comma - field_start));
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size() || !std::isfinite(value)) {
        throw ParseError(line_no, "invalid number '" + std::string(field) + "'");
      }
      if (value < 0.0) {
        throw ParseError(line_no, "negative garbage amount " + std::string(field));
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      field_start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(line_no, "expected " + std::to_string(rows.front().size()) +
                                    " columns, found " +
                                    std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(0, "initial state has no rows");

  Matrix values(rows.size(), rows.front().size());
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < rows[j].size(); ++i) values(j, i) = rows[j][i];
  return GarbageState(std::move(values));
}

GarbageState ReadInitialStateFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open initial-state file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseInitialState(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path, e.line(), e.message());
  }
}

std::string FormatNumber(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void WriteTraceCsv(std::ostream& out, const SimulationTrace& trace) {
  out << "t,layer,agent,value\n";
  for (const auto& s : trace.states) {
    for (std::size_t j = 0; j < s.layer_count(); ++j) {
      for (std::size_t i = 0; i < s.agent_count(); ++i) {
        out << s.time() << ',' << j + 1 << ',' << i + 1 << ','
            << FormatNumber(s.values()(j, i)) << '\n';
      }
    }
  }
}

}  // namespace mlgd
