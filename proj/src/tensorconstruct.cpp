#include "aleib/tensorconstruct.hpp"

#include <algorithm>
#include <numeric>

namespace aleib {

namespace {

Tensor3 leibniz_coassociator(const Coalgebra& c, std::size_t k) {
  Tensor3 r = delta_then_right(c, k);
  return delta_then_left(c, k) + r.tau12() - r;
}

} // namespace

Report check_leibniz_coalgebra(const Coalgebra& c) {
  Report r;
  Clause& cl = r.add("Leibniz coalgebra", "(d(x)id)d + (t(x)id)(id(x)d)d - (id(x)d)d = 0");
  for (std::size_t k = 0; k < c.dim(); ++k)
    if (!leibniz_coassociator(c, k).is_zero()) {
      cl.holds = false;
      cl.witness = {k + 1};
      break;
    }
  return r;
}

Report leibniz_bialgebra_identities(const Algebra& l, const Coalgebra& d) {
  if (l.dim() != d.dim()) throw DimensionMismatch("Leibniz bialgebra: algebra and coalgebra dimensions differ");
  const std::size_t n = l.dim();
  Report rep;
  rep.add("Leibniz compatibility (twist)", "t((r(y)(x)id)d(x)) = (r(x)(x)id)d(y)");
  rep.add("Leibniz compatibility (bracket)",
          "d([x,y]) = (id(x)r(y) + (l+r)(y)(x)id)(id + t)d(x) + (id(x)l(x) + l(x)(x)id)d(y)");
  Clause* tw = &rep.clauses[0];
  Clause* br = &rep.clauses[1];
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Matrix ds = d.coproduct(s), dt = d.coproduct(t);
      Matrix Rx = right_mult(l, s), Ry = right_mult(l, t), Ly = left_mult(l, t), Lx = left_mult(l, s);
      Matrix e1 = (Ry * ds).transpose() - Rx * dt;
      Matrix S = ds + ds.transpose();
      Matrix e2 = d.coproduct(l.product(s, t)) - (S * Ry.transpose() - (Ly + Ry) * S) - (dt * Lx.transpose() + Lx * dt);
      if (tw->holds && !e1.is_zero()) {
        tw->holds = false;
        tw->witness = {s + 1, t + 1};
      }
      if (br->holds && !e2.is_zero()) {
        br->holds = false;
        br->witness = {s + 1, t + 1};
      }
    }
  return rep;
}

Report check_leibniz_bialgebra(const LeibnizBialgebra& b) {
  if (!check_leibniz(b.alg).holds()) throw PreconditionViolated("check_leibniz_bialgebra: bracket is not Leibniz");
  if (!check_leibniz_coalgebra(b.coa).holds())
    throw PreconditionViolated("check_leibniz_bialgebra: coproduct is not a Leibniz coalgebra");
  return leibniz_bialgebra_identities(b.alg, b.coa);
}

Algebra tensor_product_algebra(const Algebra& l, const Algebra& b) {
  if (!(l.field() == b.field())) throw FieldMismatch("tensor product over different fields");
  const std::size_t n = l.dim(), m = b.dim(), N = n * m;
  Tensor3 sc = Tensor3::cube(N, l.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        const Scalar& x = l.sc()(i, j, p);
        if (x.is_zero()) continue;
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t c = 0; c < m; ++c)
            for (std::size_t q = 0; q < m; ++q)
              if (!b.sc()(a, c, q).is_zero()) sc(i * m + a, j * m + c, p * m + q) += x * b.sc()(a, c, q);
      }
  return Algebra(std::move(sc));
}

Algebra tensor_algebra(const Algebra& l, const Algebra& b) {
  if (!check_leibniz(l).holds()) throw PreconditionViolated("tensor_algebra: first factor is not Leibniz");
  if (!check_anticomm_antiassoc(b).holds())
    throw PreconditionViolated("tensor_algebra: second factor is not anti-commutative anti-associative");
  return certified_anti_leibniz(tensor_product_algebra(l, b));
}

Coalgebra tensor_product_coalgebra(const Coalgebra& d, const Coalgebra& db) {
  if (!(d.field() == db.field())) throw FieldMismatch("tensor coproduct over different fields");
  const std::size_t n = d.dim(), m = db.dim(), N = n * m;
  Tensor3 cc = Tensor3::cube(N, d.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& x = d.cc()(i, p, q);
        if (x.is_zero()) continue;
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v)
              if (!db.cc()(a, u, v).is_zero()) cc(i * m + a, p * m + u, q * m + v) += x * db.cc()(a, u, v);
      }
  return Coalgebra(std::move(cc));
}

Report check_quadratic_aa(const QuadraticAA& q) {
  Report r = check_anticomm_antiassoc(q.alg);
  FormProperties p = form_properties(q.alg, BilinearForm{q.form});
  r.add("form symmetric", "w(a,b) = w(b,a)", p.symmetric);
  r.add("form nondegenerate", "det w != 0", p.nondegenerate);
  r.add("form invariant", "w(ab,c) = w(a,bc)", p.invariant_sym_style);
  return r;
}

Report check_anticocomm_anticoassoc(const Coalgebra& c) { return check_anticomm_antiassoc(dual_algebra(c)); }

Coalgebra quadratic_dual_coalgebra(const QuadraticAA& q) {
  if (!check_quadratic_aa(q).holds()) throw PreconditionViolated("quadratic_dual_coalgebra: (B, w) is not certified");
  const std::size_t n = q.alg.dim();
  const Field f = q.alg.field();
  // G^t D(b) G = t(b) with t(b)[c][d] = w(b, e_c e_d).
  Matrix gi = solve_invert(q.form);
  Matrix git = gi.transpose();
  Coalgebra out = Coalgebra::zero(n, f);
  for (std::size_t a = 0; a < n; ++a) {
    Matrix t(n, n, f);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t k = 0; k < n; ++k) t(c, d) += q.alg.sc()(c, d, k) * q.form(a, k);
    out.set_coproduct(a, git * t * gi);
  }
  return out;
}

bool quadratic_coproduct_identity(const QuadraticAA& q) {
  Coalgebra d = quadratic_dual_coalgebra(q);
  const std::size_t n = q.alg.dim();
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      // sum b(1)c (x) b(2) = (R_c (x) id) Delta(b).
      Matrix rhs = right_mult(q.alg, c) * d.coproduct(b);
      if (!(d.coproduct(q.alg.product(b, c)) == -rhs)) return false;
    }
  return true;
}

Bialgebra induced_bialgebra_raw(const LeibnizBialgebra& lb, const QuadraticAA& q) {
  return {tensor_product_algebra(lb.alg, q.alg), tensor_product_coalgebra(lb.coa, quadratic_dual_coalgebra(q))};
}

Bialgebra induced_bialgebra(const LeibnizBialgebra& lb, const QuadraticAA& q) {
  if (!check_leibniz_bialgebra(lb).holds()) throw PreconditionViolated("induced_bialgebra: not a Leibniz bialgebra");
  Bialgebra b{tensor_algebra(lb.alg, q.alg), tensor_product_coalgebra(lb.coa, quadratic_dual_coalgebra(q))};
  if (!check_bialgebra(b).holds()) throw PreconditionViolated("induced_bialgebra: output failed the bialgebra check");
  return b;
}

std::optional<std::vector<std::size_t>> match_permutation(const Bialgebra& ours, const Bialgebra& theirs) {
  const std::size_t n = ours.alg.dim();
  if (theirs.alg.dim() != n || ours.coa.dim() != n || theirs.coa.dim() != n) return std::nullopt;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  const Tensor3 &s1 = ours.alg.sc(), &s2 = theirs.alg.sc(), &c1 = ours.coa.cc(), &c2 = theirs.coa.cc();
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = 0; ok && j < n; ++j)
        for (std::size_t k = 0; ok && k < n; ++k)
          ok = s1(i, j, k) == s2(p[i], p[j], p[k]) && c1(k, i, j) == c2(p[k], p[i], p[j]);
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

} // namespace aleib
