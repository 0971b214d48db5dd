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

#include "mlgd/eigen_sym.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mlgd/errors.h"

namespace mlgd {
namespace {

double OffDiagonalNorm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Zeroes a(p, q) by the two-sided rotation J^T A J and accumulates V <- V J.
void Rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::hypot(1.0, t);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

Vector EigenDecomposition::eigenvector(std::size_t k) const {
  Vector out(eigenvectors.rows());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = eigenvectors(r, k);
  return out;
}

EigenDecomposition EigenSym(const SymmetricMatrix& sym,
                            const JacobiOptions& options) {
  const std::size_t n = sym.order();
  Matrix a = sym.matrix();
  for (double x : a.data()) {
    if (!std::isfinite(x)) {
      throw NumericalError("eigen_sym: matrix has non-finite entries");
    }
  }
  Matrix v = Matrix::Identity(n);
  const double threshold = options.relative_tolerance * a.FrobeniusNorm();

  int sweeps = 0;
  while (OffDiagonalNorm(a) > threshold) {
    if (sweeps == options.max_sweeps) {
      throw NumericalError("eigen_sym: no convergence after " +
                           std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) Rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i) < a(j, j);
  });

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(perm[k], perm[k]);
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, perm[k]);
  }
  return out;
}

Vector ShiftScaleSpectrum(double c1, double c2, const EigenDecomposition& eig) {
  const std::size_t n = eig.order();
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = c2 >= 0.0 ? eig.eigenvalues[n - 1 - k] : eig.eigenvalues[k];
    out[k] = c1 - c2 * lam;
  }
  return out;
}

double WeylMaxViolation(std::span<const double> spec_a,
                        std::span<const double> spec_b,
                        std::span<const double> spec_sum) {
  const std::size_t n = spec_sum.size();
  if (spec_a.size() != n || spec_b.size() != n) {
    throw DimensionError("weyl: spectra have different lengths");
  }
  // 1-based accessors keep the index arithmetic identical to the inequalities.
  auto la = [&](std::size_t k) { return spec_a[k - 1]; };
  auto lb = [&](std::size_t k) { return spec_b[k - 1]; };
  auto ls = [&](std::size_t k) { return spec_sum[k - 1]; };

  double worst = -INFINITY;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j <= n - i; ++j)
      worst = std::max(worst, ls(i) - (la(i + j) + lb(n - j)));
    for (std::size_t j = 1; j <= i; ++j)
      worst = std::max(worst, (la(i - j + 1) + lb(j)) - ls(i));
  }
  return worst;
}

bool WeylBoundsHold(const SymmetricMatrix& a, const SymmetricMatrix& b,
                    double slack) {
  if (a.order() != b.order()) {
    throw DimensionError("weyl_bounds_hold: orders differ (" +
                         std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
  }
  const std::vector<Matrix> terms = {a.matrix(), b.matrix()};
  const double ones[] = {1.0, 1.0};
  const SymmetricMatrix sum(WeightedSum(ones, terms));
  const auto ea = EigenSym(a);
  const auto eb = EigenSym(b);
  const auto es = EigenSym(sum);
  return WeylMaxViolation(ea.eigenvalues, eb.eigenvalues, es.eigenvalues) <=
         slack;
}

}  // namespace mlgd
