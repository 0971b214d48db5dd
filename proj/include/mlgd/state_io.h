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

#ifndef MLGD_STATE_IO_H_
#define MLGD_STATE_IO_H_

#include <ostream>
#include <string>
#include <string_view>

#include "mlgd/dynamics.h"

namespace mlgd {

// Initial-state CSV: m rows of n comma-separated nonnegative decimals, row j
// holding layer j. Blank lines and '#' comment lines are skipped.
GarbageState ParseInitialState(std::string_view text);
GarbageState ReadInitialStateFile(const std::string& path);

// 17 significant digits, enough to round-trip any double.
std::string FormatNumber(double x);

// Long-format CSV with header `t,layer,agent,value`, 1-based indices.
void WriteTraceCsv(std::ostream& out, const SimulationTrace& trace);

}  // namespace mlgd

#endif  // MLGD_STATE_IO_H_
