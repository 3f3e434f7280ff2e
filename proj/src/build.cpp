#include "aleib/build.hpp"

namespace aleib {

namespace {
std::size_t index(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) throw DimensionMismatch("basis index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return i - 1;
}
} // namespace

Algebra make_algebra(std::size_t n, const std::vector<ProductEntry>& table, Field f) {
  Tensor3 sc = Tensor3::cube(n, f);
  for (const auto& e : table) {
    if (e.out.size() != n) throw DimensionMismatch("product row length differs from dimension");
    for (std::size_t k = 0; k < n; ++k) sc(index(e.i, n), index(e.j, n), k) += Scalar(f, e.out[k]);
  }
  return Algebra(std::move(sc));
}

Coalgebra make_coalgebra(std::size_t n, const std::vector<CoproductEntry>& table, Field f) {
  Tensor3 cc = Tensor3::cube(n, f);
  for (const auto& e : table)
    for (const auto& t : e.out) cc(index(e.k, n), index(t.i, n), index(t.j, n)) += Scalar(f, t.c);
  return Coalgebra(std::move(cc));
}

Matrix make_tensor2(std::size_t n, const std::vector<TensorEntry>& entries, Field f) {
  Matrix m(n, n, f);
  for (const auto& t : entries) m(index(t.i, n), index(t.j, n)) += Scalar(f, t.c);
  return m;
}

Matrix make_matrix(const std::vector<std::vector<mpq_class>>& rows, Field f) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Vec make_vec(const std::vector<mpq_class>& v, Field f) {
  Vec r;
  for (const auto& x : v) r.emplace_back(f, x);
  return r;
}

} // namespace aleib
