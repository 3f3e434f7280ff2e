#pragma once
#include <cstddef>
#include <vector>

#include "aleib/matrix.hpp"

namespace aleib {

// Dense 3-tensor indexed [i][j][k].
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t n1, std::size_t n2, std::size_t n3, Field f = Field::Q());
  static Tensor3 cube(std::size_t n, Field f) { return Tensor3(n, n, n, f); }

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t n3() const { return n3_; }
  Field field() const { return f_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n2_ + j) * n3_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * n2_ + j) * n3_ + k]; }

  // Fibre along the last index, and the matrix slice at fixed first index.
  Vec fibre(std::size_t i, std::size_t j) const;
  void set_fibre(std::size_t i, std::size_t j, const Vec& v);
  Matrix slice(std::size_t i) const;
  void set_slice(std::size_t i, const Matrix& m);

  bool is_zero() const;
  // First nonzero position as (i,j,k), or false.
  bool first_nonzero(std::size_t& i, std::size_t& j, std::size_t& k) const;

  // Result r with r[p0][p1][p2] = t[i0][i1][i2] where p = perm(i).
  Tensor3 permuted(int a, int b, int c) const;
  Tensor3 tau12() const { return permuted(1, 0, 2); }
  Tensor3 tau13() const { return permuted(2, 1, 0); }
  Tensor3 tau23() const { return permuted(0, 2, 1); }

  const std::vector<Scalar>& data() const { return a_; }

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator-(const Tensor3& a);
  friend Tensor3 operator*(const Scalar& c, Tensor3 a);
  friend bool operator==(const Tensor3& a, const Tensor3& b);

 private:
  std::size_t n1_ = 0, n2_ = 0, n3_ = 0;
  Field f_{};
  std::vector<Scalar> a_;
};

// (X (x) Y (x) Z) t on a 3-tensor of the triple tensor space.
Tensor3 apply3(const Matrix& x, const Matrix& y, const Matrix& z, const Tensor3& t);
// (X (x) Y) T for T an element of V (x) W stored as a matrix: X T Y^t.
Matrix apply2(const Matrix& x, const Matrix& y, const Matrix& t);
// t (x) v: the 3-tensor m[i][j] v[k].
Tensor3 outer(const Matrix& m, const Vec& v);
// v (x) t: the 3-tensor v[i] m[j][k].
Tensor3 outer(const Vec& v, const Matrix& m);

} // namespace aleib
