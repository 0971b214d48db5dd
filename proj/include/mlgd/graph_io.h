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

#ifndef MLGD_GRAPH_IO_H_
#define MLGD_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "mlgd/graph.h"

namespace mlgd {

// Graph file format:
//
//   # comment lines start with '#'
//   n=<agents> m=<layers>
//   layer 1
//   <i> <j>          one 1-based edge per line
//   layer 2
//   ...
//
// Layers appear exactly once each, in ascending order. Blank lines are
// ignored. Throws ParseError carrying the offending line number.
LayeredGraph ParseLayeredGraph(std::string_view text);

// Inverse of ParseLayeredGraph (edges sorted, no comments).
std::string FormatLayeredGraph(const LayeredGraph& g);

// Reads and parses `path`; I/O failures surface as ParseError with line 0.
LayeredGraph ReadLayeredGraphFile(const std::string& path);

}  // namespace mlgd

#endif  // MLGD_GRAPH_IO_H_
