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

#ifndef MLGD_EIGEN_SYM_H_
#define MLGD_EIGEN_SYM_H_

#include <cstddef>
#include <span>

#include "mlgd/linalg.h"

namespace mlgd {

struct EigenDecomposition {
  // Ascending: eigenvalues[0] is the smallest.
  Vector eigenvalues;
  // Column k is the unit eigenvector paired with eigenvalues[k].
  Matrix eigenvectors;
  int sweeps = 0;

  std::size_t order() const { return eigenvalues.size(); }
  Vector eigenvector(std::size_t k) const;
};

struct JacobiOptions {
  // Stop once the off-diagonal Frobenius norm drops below
  // relative_tolerance * ||A||_F.
  double relative_tolerance = 1e-12;
  int max_sweeps = 100;
};

// Cyclic Jacobi eigendecomposition of a dense symmetric matrix. Output is
// deterministic for identical input; equal eigenvalues keep the order in
// which the sweeps left them.
//
// Throws NumericalError on non-finite entries or when `max_sweeps` is
// exhausted.
EigenDecomposition EigenSym(const SymmetricMatrix& a,
                            const JacobiOptions& options = {});

// Ascending spectrum of c1*I - c2*A obtained from the spectrum of A alone:
// for c2 >= 0 the order reverses, for c2 < 0 it is preserved.
Vector ShiftScaleSpectrum(double c1, double c2, const EigenDecomposition& eig);

// True iff every Weyl inequality
//   lambda_i(A+B) <= lambda_{i+j}(A) + lambda_{n-j}(B),  j = 0..n-i
//   lambda_i(A+B) >= lambda_{i-j+1}(A) + lambda_j(B),    j = 1..i
// holds for all i within `slack`.
bool WeylBoundsHold(const SymmetricMatrix& a, const SymmetricMatrix& b,
                    double slack = 1e-9);

// Largest amount by which any of the inequalities above is violated given
// precomputed ascending spectra; <= 0 when all hold.
double WeylMaxViolation(std::span<const double> spec_a,
                        std::span<const double> spec_b,
                        std::span<const double> spec_sum);

}  // namespace mlgd

#endif  // MLGD_EIGEN_SYM_H_
