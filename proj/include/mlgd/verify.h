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

#ifndef MLGD_VERIFY_H_
#define MLGD_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace mlgd {

enum class FaultInjection {
  kNone,
  // Flips the sign of the (1, 2) off-diagonal pair of every Laplacian the
  // suite assembles, to prove the suite notices broken inputs.
  kLaplacianSign,
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  FaultInjection fault = FaultInjection::kNone;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Seeded invariant suite over random instances. Each property draws from its
// own generator derived from (seed, property), so results do not depend on
// evaluation order.
std::vector<PropertyResult> RunPropertySuite(const VerifyOptions& options);

}  // namespace mlgd

#endif  // MLGD_VERIFY_H_
