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

#ifndef MLGD_LINALG_H_
#define MLGD_LINALG_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mlgd {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  // Throws DimensionError on ragged input.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix Identity(std::size_t order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> data() const { return data_; }

  Matrix Transposed() const;
  double MaxAbs() const;
  double FrobeniusNorm() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Square matrix with entries(i, j) == entries(j, i) bit for bit.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  // Rejects non-square input and asymmetry larger than
  // `tolerance * max|a_ij|`; surviving pairs are averaged so the stored
  // matrix is exactly symmetric.
  explicit SymmetricMatrix(Matrix m, double tolerance = 1e-12);

  std::size_t order() const { return m_.rows(); }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

Vector MatVec(const Matrix& a, std::span<const double> v);
Matrix MatMat(const Matrix& a, const Matrix& b);
// sum_k coeffs[k] * matrices[k]; all matrices must share a shape.
Matrix WeightedSum(std::span<const double> coeffs,
                   std::span<const Matrix> matrices);

double MaxAbsDiff(const Matrix& a, const Matrix& b);
double Norm2(std::span<const double> v);

}  // namespace mlgd

#endif  // MLGD_LINALG_H_
