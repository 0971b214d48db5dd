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

#include "mlgd/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mlgd/errors.h"

namespace mlgd {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::Identity(std::size_t order) {
  Matrix id(order, order);
  for (std::size_t i = 0; i < order; ++i) id(i, i) = 1.0;
  return id;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Matrix::MaxAbs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::FrobeniusNorm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

SymmetricMatrix::SymmetricMatrix(Matrix m, double tolerance) : m_(std::move(m)) {
  if (!m_.is_square()) {
    throw DimensionError("symmetric matrix must be square, got " +
                         std::to_string(m_.rows()) + "x" +
                         std::to_string(m_.cols()));
  }
  const double limit = tolerance * m_.MaxAbs();
  const std::size_t n = m_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = m_(i, j);
      const double b = m_(j, i);
      if (std::abs(a - b) > limit) {
        throw std::invalid_argument("matrix is not symmetric at (" +
                                    std::to_string(i + 1) + ", " +
                                    std::to_string(j + 1) + ")");
      }
      const double avg = a == b ? a : 0.5 * (a + b);
      m_(i, j) = avg;
      m_(j, i) = avg;
    }
  }
}

Vector MatVec(const Matrix& a, std::span<const double> v) {
  if (a.cols() != v.size()) {
    throw DimensionError("mat_vec: matrix has " + std::to_string(a.cols()) +
                         " columns, vector has " + std::to_string(v.size()) +
                         " entries");
  }
  Vector out(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto row = a.row(r);
    double s = 0.0;
    for (std::size_t c = 0; c < row.size(); ++c) s += row[c] * v[c];
    out[r] = s;
  }
  return out;
}

Matrix MatMat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mat: inner dimensions differ (" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix WeightedSum(std::span<const double> coeffs,
                   std::span<const Matrix> matrices) {
  if (coeffs.size() != matrices.size()) {
    throw DimensionError("weighted_sum: " + std::to_string(coeffs.size()) +
                         " coefficients for " +
                         std::to_string(matrices.size()) + " matrices");
  }
  if (matrices.empty()) throw DimensionError("weighted_sum: no matrices");
  Matrix out(matrices[0].rows(), matrices[0].cols());
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const Matrix& m = matrices[k];
    if (m.rows() != out.rows() || m.cols() != out.cols()) {
      throw DimensionError("weighted_sum: matrix " + std::to_string(k) +
                           " has a different shape");
    }
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) += coeffs[k] * m(r, c);
  }
  return out;
}

double MaxAbsDiff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k)
    m = std::max(m, std::abs(da[k] - db[k]));
  return m;
}

double Norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace mlgd
