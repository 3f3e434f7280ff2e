#pragma once
#include <cstddef>
#include <vector>

#include "aleib/scalar.hpp"

namespace aleib {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, Field f);
Vec unit_vec(std::size_t n, std::size_t i, Field f);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::Q());
  static Matrix identity(std::size_t n, Field f = Field::Q());
  // Columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return f_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix a);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field f_{};
  std::vector<Scalar> a_;
};

// Linear combination sum_i c[i] * ms[i]; ms must be non-empty.
Matrix combine(const std::vector<Matrix>& ms, const Vec& c);

// Exact inverse; fraction-free Gauss-Jordan over Q, plain elimination over GF(p).
// Throws NotInvertible carrying the rank.
Matrix solve_invert(const Matrix& m);
std::vector<Vec> kernel(const Matrix& m);
std::size_t rank(const Matrix& m);

} // namespace aleib
