// Copyright 2026 The wep Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wep/error.hpp"
#include "wep/graph.hpp"

namespace wep {

/// Dense row-major matrix of doubles. Desk-scale sizes only (n <= ~1000).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& other) {
    check_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& other) {
    check_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
  }

  Matrix& operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    detail::require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch,
                    "matrix product " + a.shape() + " * " + b.shape());
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<double> operator*(std::span<const double> x) const {
    detail::require(static_cast<int>(x.size()) == cols_, ErrorKind::DimensionMismatch,
                    "matrix-vector product " + shape() + " * " + std::to_string(x.size()));
    std::vector<double> y(rows_, 0.0);
    for (int i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

  /// Largest absolute entry.
  double max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  void check_same_shape(const Matrix& other) const {
    detail::require(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::DimensionMismatch,
                    "shapes " + shape() + " and " + other.shape());
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Largest absolute entry of a - b.
inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

inline Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.order(), g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u)) a(u, v) = 1.0;
  return a;
}

/// A * M computed from neighbor lists, without forming A.
inline Matrix adjacency_times(const Graph& g, const Matrix& m) {
  detail::require(m.rows() == g.order(), ErrorKind::DimensionMismatch,
                  "adjacency product with " + m.shape());
  Matrix out(m.rows(), m.cols());
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      for (int j = 0; j < m.cols(); ++j) out(u, j) += m(v, j);
  return out;
}

/// M * A computed from neighbor lists.
inline Matrix times_adjacency(const Matrix& m, const Graph& g) {
  detail::require(m.cols() == g.order(), ErrorKind::DimensionMismatch,
                  "adjacency product with " + m.shape());
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int v = 0; v < g.order(); ++v) {
      double s = 0.0;
      for (int w : g.neighbors(v)) s += m(i, w);
      out(i, v) = s;
    }
  return out;
}

}  // namespace wep
