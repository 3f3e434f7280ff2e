#include "aleib/matrix.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace aleib {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar s = m(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

// Fraction-free Gauss-Jordan on the integer matrix [D*M | D], D the row
// denominators. Every division by the previous pivot is exact; at the end the
// left block is det*I and the right block det*M^-1.
Matrix bareiss_inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class d = 1;
    for (std::size_t j = 0; j < n; ++j) d = lcm(d, m(i, j).rational().get_den());
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m(i, j).rational();
      a[i][j] = q.get_num() * (d / q.get_den());
    }
    a[i][n + i] = d;
  }
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw NotInvertible(rank(m));
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = Scalar(m.field(), mpq_class(a[i][n + j], a[i][i]));
  return inv;
}

} // namespace

Vec zero_vec(std::size_t n, Field f) { return Vec(n, Scalar(f)); }

Vec unit_vec(std::size_t n, std::size_t i, Field f) {
  Vec v = zero_vec(n, f);
  v.at(i) = Scalar(f, 1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  need(a.size() == b.size(), "vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  need(a.size() == b.size(), "vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), f_(f), a_(rows * cols, Scalar(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, Field f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    need(cols[j].size() == rows, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, f_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  need(rows_ == o.rows_ && cols_ == o.cols_, "matrix shapes differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  need(rows_ == o.rows_ && cols_ == o.cols_, "matrix shapes differ");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix operator-(const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.a_) x = -x;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  need(a.cols_ == b.rows_, "matrix product shapes do not chain");
  Matrix r(a.rows_, b.cols_, a.f_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& c, Matrix a) {
  for (auto& x : a.a_) x *= c;
  return a;
}

Vec operator*(const Matrix& a, const Vec& v) {
  need(a.cols_ == v.size(), "matrix-vector shapes differ");
  Vec r = zero_vec(a.rows_, a.f_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!v[j].is_zero() && !a(i, j).is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix combine(const std::vector<Matrix>& ms, const Vec& c) {
  need(!ms.empty() && ms.size() == c.size(), "coefficient count differs from matrix count");
  Matrix r(ms[0].rows(), ms[0].cols(), ms[0].field());
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (!c[i].is_zero()) r += c[i] * ms[i];
  return r;
}

Matrix solve_invert(const Matrix& m) {
  need(m.is_square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (m.field().rational()) return bareiss_inverse(m);
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(m.field(), 1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw NotInvertible(rank(m));
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Vec> kernel(const Matrix& m) {
  Matrix r = m;
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec v = unit_vec(m.cols(), free, m.field());
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return rref(r).size();
}

} // namespace aleib
