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

#include "mlgd/graph_io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "mlgd/errors.h"

namespace mlgd {
namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ParseCount(std::string_view token, std::size_t& value) {
  if (token.empty() || token[0] == '-' || token[0] == '+') return false;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool ParseKeyValue(std::string_view token, std::string_view key,
                   std::size_t& value) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    return false;
  }
  return ParseCount(token.substr(key.size() + 1), value);
}

}  // namespace

LayeredGraph ParseLayeredGraph(std::string_view text) {
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<std::vector<Edge>> layers;
  std::vector<std::size_t> layer_lines;
  std::set<Edge> current;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    const auto tokens = SplitWhitespace(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (!have_header) {
      if (tokens.size() != 2 || !ParseKeyValue(tokens[0], "n", n) ||
          !ParseKeyValue(tokens[1], "m", m)) {
        throw ParseError(line_no, "expected header 'n=<int> m=<int>'");
      }
      if (n == 0) throw ParseError(line_no, "n must be positive");
      if (m == 0) throw ParseError(line_no, "m must be positive");
      have_header = true;
    } else if (tokens[0] == "layer") {
      std::size_t k = 0;
      if (tokens.size() != 2 || !ParseCount(tokens[1], k)) {
        throw ParseError(line_no, "expected 'layer <k>'");
      }
      if (k != layers.size() + 1) {
        throw ParseError(line_no, "expected layer " +
                                      std::to_string(layers.size() + 1) +
                                      ", found layer " + std::to_string(k));
      }
      if (k > m) {
        throw ParseError(line_no, "layer " + std::to_string(k) +
                                      " exceeds m=" + std::to_string(m));
      }
      if (!layers.empty() && layers.back().empty()) {
        throw ParseError(layer_lines.back(),
                         "layer " + std::to_string(layers.size()) +
                             " has no edges");
      }
      layers.emplace_back();
      layer_lines.push_back(line_no);
      current.clear();
    } else {
      if (layers.empty()) {
        throw ParseError(line_no, "edge before any 'layer' line");
      }
      std::size_t a = 0;
      std::size_t b = 0;
      if (tokens.size() != 2 || !ParseCount(tokens[0], a) ||
          !ParseCount(tokens[1], b)) {
        throw ParseError(line_no, "malformed edge line, expected '<i> <j>'");
      }
      if (a < 1 || a > n || b < 1 || b > n) {
        throw ParseError(line_no, "vertex out of range [1, " +
                                      std::to_string(n) + "]");
      }
      if (a == b) {
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
      }
      const Edge e(a - 1, b - 1);
      if (!current.insert(e).second) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(a) +
                                      " " + std::to_string(b) + " in layer " +
                                      std::to_string(layers.size()));
      }
      layers.back().push_back(e);
    }
    if (end == text.size()) break;
  }

  if (!have_header) throw ParseError(line_no, "missing 'n=<int> m=<int>' header");
  if (!layers.empty() && layers.back().empty()) {
    throw ParseError(layer_lines.back(),
                     "layer " + std::to_string(layers.size()) + " has no edges");
  }
  if (layers.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " layers, found " +
                                  std::to_string(layers.size()));
  }
  return LayeredGraph(n, std::move(layers));
}

std::string FormatLayeredGraph(const LayeredGraph& g) {
  std::ostringstream out;
  out << "n=" << g.agent_count() << " m=" << g.layer_count() << "\n";
  for (std::size_t k = 0; k < g.layer_count(); ++k) {
    out << "layer " << k + 1 << "\n";
    for (const auto& e : g.edges(k)) out << e.u + 1 << " " << e.v + 1 << "\n";
  }
  return out.str();
}

LayeredGraph ReadLayeredGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open graph file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseLayeredGraph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path, e.line(), e.message());
  }
}

}  // namespace mlgd
