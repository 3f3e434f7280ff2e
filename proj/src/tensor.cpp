#include "aleib/tensor.hpp"

#include <array>

namespace aleib {

namespace {
void need(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}
} // namespace

Tensor3::Tensor3(std::size_t n1, std::size_t n2, std::size_t n3, Field f)
    : n1_(n1), n2_(n2), n3_(n3), f_(f), a_(n1 * n2 * n3, Scalar(f)) {}

Vec Tensor3::fibre(std::size_t i, std::size_t j) const {
  auto it = a_.begin() + (i * n2_ + j) * n3_;
  return Vec(it, it + n3_);
}

void Tensor3::set_fibre(std::size_t i, std::size_t j, const Vec& v) {
  need(v.size() == n3_, "fibre length");
  for (std::size_t k = 0; k < n3_; ++k) (*this)(i, j, k) = v[k];
}

Matrix Tensor3::slice(std::size_t i) const {
  Matrix m(n2_, n3_, f_);
  for (std::size_t j = 0; j < n2_; ++j)
    for (std::size_t k = 0; k < n3_; ++k) m(j, k) = (*this)(i, j, k);
  return m;
}

void Tensor3::set_slice(std::size_t i, const Matrix& m) {
  need(m.rows() == n2_ && m.cols() == n3_, "slice shape");
  for (std::size_t j = 0; j < n2_; ++j)
    for (std::size_t k = 0; k < n3_; ++k) (*this)(i, j, k) = m(j, k);
}

bool Tensor3::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Tensor3::first_nonzero(std::size_t& i, std::size_t& j, std::size_t& k) const {
  for (std::size_t p = 0; p < a_.size(); ++p)
    if (!a_[p].is_zero()) {
      k = p % n3_;
      j = (p / n3_) % n2_;
      i = p / (n2_ * n3_);
      return true;
    }
  return false;
}

Tensor3 Tensor3::permuted(int a, int b, int c) const {
  std::array<std::size_t, 3> ext{n1_, n2_, n3_}, out{};
  out[a] = ext[0];
  out[b] = ext[1];
  out[c] = ext[2];
  Tensor3 r(out[0], out[1], out[2], f_);
  std::array<std::size_t, 3> p{};
  for (std::size_t i = 0; i < n1_; ++i)
    for (std::size_t j = 0; j < n2_; ++j)
      for (std::size_t k = 0; k < n3_; ++k) {
        p[a] = i;
        p[b] = j;
        p[c] = k;
        r(p[0], p[1], p[2]) = (*this)(i, j, k);
      }
  return r;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  need(n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_, "tensor shapes differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  need(n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_, "tensor shapes differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Tensor3 operator-(const Tensor3& a) {
  Tensor3 r = a;
  for (auto& x : r.a_) x = -x;
  return r;
}

Tensor3 operator*(const Scalar& c, Tensor3 a) {
  for (auto& x : a.a_) x *= c;
  return a;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.n3_ == b.n3_ && a.a_ == b.a_;
}

Tensor3 apply3(const Matrix& x, const Matrix& y, const Matrix& z, const Tensor3& t) {
  need(x.cols() == t.n1() && y.cols() == t.n2() && z.cols() == t.n3(), "operator does not fit tensor");
  // Contract one index at a time.
  Tensor3 s1(x.rows(), t.n2(), t.n3(), t.field());
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t i = 0; i < t.n1(); ++i) {
      if (x(a, i).is_zero()) continue;
      for (std::size_t j = 0; j < t.n2(); ++j)
        for (std::size_t k = 0; k < t.n3(); ++k)
          if (!t(i, j, k).is_zero()) s1(a, j, k) += x(a, i) * t(i, j, k);
    }
  Tensor3 s2(x.rows(), y.rows(), t.n3(), t.field());
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < y.rows(); ++b)
      for (std::size_t j = 0; j < t.n2(); ++j) {
        if (y(b, j).is_zero()) continue;
        for (std::size_t k = 0; k < t.n3(); ++k)
          if (!s1(a, j, k).is_zero()) s2(a, b, k) += y(b, j) * s1(a, j, k);
      }
  Tensor3 s3(x.rows(), y.rows(), z.rows(), t.field());
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t b = 0; b < y.rows(); ++b)
      for (std::size_t c = 0; c < z.rows(); ++c)
        for (std::size_t k = 0; k < t.n3(); ++k)
          if (!z(c, k).is_zero() && !s2(a, b, k).is_zero()) s3(a, b, c) += z(c, k) * s2(a, b, k);
  return s3;
}

Matrix apply2(const Matrix& x, const Matrix& y, const Matrix& t) { return x * t * y.transpose(); }

Tensor3 outer(const Matrix& m, const Vec& v) {
  Tensor3 r(m.rows(), m.cols(), v.size(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        for (std::size_t k = 0; k < v.size(); ++k) r(i, j, k) = m(i, j) * v[k];
  return r;
}

Tensor3 outer(const Vec& v, const Matrix& m) {
  Tensor3 r(v.size(), m.rows(), m.cols(), m.field());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t k = 0; k < m.cols(); ++k) r(i, j, k) = v[i] * m(j, k);
  return r;
}

} // namespace aleib
