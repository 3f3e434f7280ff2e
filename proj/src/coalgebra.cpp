#include "aleib/coalgebra.hpp"

namespace aleib {

Coalgebra::Coalgebra(Tensor3 cc) : cc_(std::move(cc)) {
  if (cc_.n1() != cc_.n2() || cc_.n2() != cc_.n3()) throw DimensionMismatch("costructure constants must be a cube");
}

Coalgebra Coalgebra::zero(std::size_t n, Field f) { return Coalgebra(Tensor3::cube(n, f)); }

Matrix Coalgebra::coproduct(const Vec& x) const {
  if (x.size() != dim()) throw DimensionMismatch("coproduct: vector length");
  Matrix m(dim(), dim(), field());
  for (std::size_t k = 0; k < dim(); ++k)
    if (!x[k].is_zero()) m += x[k] * coproduct(k);
  return m;
}

Tensor3 delta_then_left(const Coalgebra& c, std::size_t a) {
  const std::size_t n = c.dim();
  Tensor3 t = Tensor3::cube(n, c.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = c.cc()(a, i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (!c.cc()(i, p, q).is_zero()) t(p, q, j) += x * c.cc()(i, p, q);
    }
  return t;
}

Tensor3 delta_then_right(const Coalgebra& c, std::size_t a) {
  const std::size_t n = c.dim();
  Tensor3 t = Tensor3::cube(n, c.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = c.cc()(a, i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (!c.cc()(j, p, q).is_zero()) t(i, p, q) += x * c.cc()(j, p, q);
    }
  return t;
}

Tensor3 anti_leibniz_coassociator(const Coalgebra& c, std::size_t k) {
  Tensor3 r = delta_then_right(c, k);
  return delta_then_left(c, k) + r + r.tau12();
}

Report check_coalgebra(const Coalgebra& c) {
  Report r;
  Clause& cl = r.add("anti-Leibniz coalgebra", "(D(x)id)D + (id(x)D)D + (t(x)id)(id(x)D)D = 0");
  for (std::size_t k = 0; k < c.dim(); ++k)
    if (!anti_leibniz_coassociator(c, k).is_zero()) {
      cl.holds = false;
      cl.witness = {k + 1};
      break;
    }
  return r;
}

void require_coalgebra(const Coalgebra& c, const char* who) {
  if (!check_coalgebra(c).holds()) throw PreconditionViolated(std::string(who) + ": not an anti-Leibniz coalgebra");
}

Algebra dual_algebra(const Coalgebra& c) { return Algebra(c.cc().permuted(2, 0, 1)); }

Coalgebra dual_coalgebra(const Algebra& a) { return Coalgebra(a.sc().permuted(1, 2, 0)); }

} // namespace aleib
