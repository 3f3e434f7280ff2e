#include "aleib/random.hpp"

#include "aleib/catalog.hpp"

namespace aleib {

Matrix random_sparse_matrix(Rng& rng, std::size_t rows, std::size_t cols, Field f) {
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(f, rng.sparse());
  return m;
}

Tensor3 random_sparse_tensor(Rng& rng, std::size_t n, Field f) {
  Tensor3 t = Tensor3::cube(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = Scalar(f, rng.sparse());
  return t;
}

Matrix random_unimodular(Rng& rng, std::size_t n, Field f) {
  Matrix g = Matrix::identity(n, f);
  if (n < 2) return g;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::size_t i = rng.below(n), j = rng.below(n - 1);
    if (j >= i) ++j;
    Scalar c(f, rng.chance(0.5) ? 1 : -1);
    for (std::size_t k = 0; k < n; ++k) g(i, k) += c * g(j, k);
  }
  // A random row swap keeps the permutation part from always being trivial.
  if (rng.chance(0.5)) {
    std::size_t i = rng.below(n), j = rng.below(n);
    for (std::size_t k = 0; k < n; ++k) std::swap(g(i, k), g(j, k));
  }
  return g;
}

namespace {

// Products of the first n-1 basis vectors land on the last one, which annihilates everything.
Algebra square_zero(Rng& rng, std::size_t n, Field f) {
  Tensor3 sc = Tensor3::cube(n, f);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) sc(i, j, n - 1) = Scalar(f, rng.sparse());
  return Algebra(std::move(sc));
}

mpq_class small_param(Rng& rng, Field f) {
  // 2 is skipped in characteristic 2, where it is zero.
  const long opts[] = {1, -1, 2};
  long v = opts[rng.below(f.p == 2 ? 2 : 3)];
  return v;
}

Algebra draw(Rng& rng, std::size_t n, Field f) {
  CatalogParams p;
  p.field = f;
  if (n == 2) {
    switch (rng.below(4)) {
      case 0: return catalog("Lambda2_1", p).alg;
      case 1:
        p.a = small_param(rng, f);
        p.b = small_param(rng, f);
        return catalog("Lambda2_2", p).alg;
      case 2: return square_zero(rng, 2, f);
      default: return Algebra::zero(2, f);
    }
  }
  if (n == 1) return Algebra::zero(1, f);
  switch (rng.below(5)) {
    case 0:
      if (n == 3) return catalog("Noncomm3", p).alg;
      return direct_sum(catalog("Noncomm3", p).alg, Algebra::zero(n - 3, f));
    case 1: return square_zero(rng, n, f);
    case 2: return direct_sum(catalog("Lambda2_1", p).alg, Algebra::zero(n - 2, f));
    case 3: return direct_sum(draw(rng, 2, f), draw(rng, n - 2, f));
    default: return Algebra::zero(n, f);
  }
}

} // namespace

Algebra random_anti_leibniz(Rng& rng, std::size_t n, Field f) {
  Algebra a = draw(rng, n, f);
  if (rng.chance(0.7)) a = change_basis(a, random_unimodular(rng, n, f));
  return certified_anti_leibniz(std::move(a));
}

Coalgebra random_coalgebra(Rng& rng, std::size_t n, Field f) { return dual_coalgebra(random_anti_leibniz(rng, n, f)); }

} // namespace aleib
