#include "aleib/bialgebra.hpp"

namespace aleib {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

} // namespace

Matrix product_compatibility(const Algebra& a, const Coalgebra& c, std::size_t s, std::size_t t) {
  need(a.dim() == c.dim(), "algebra and coalgebra dimensions differ");
  Matrix Rt = right_mult(a, t), Lt = left_mult(a, t), Ls = left_mult(a, s);
  Matrix Ds = c.coproduct(s), Dt = c.coproduct(t);
  Matrix T = Ds - Ds.transpose();
  return c.coproduct(a.product(s, t)) + T * Rt.transpose() - Rt * T + Lt * T + Dt * Ls.transpose() + Ls * Dt;
}

Matrix product_compatibility_expanded(const Algebra& a, const Coalgebra& c, std::size_t s, std::size_t t) {
  need(a.dim() == c.dim(), "algebra and coalgebra dimensions differ");
  Matrix Rt = right_mult(a, t), Lt = left_mult(a, t), Ls = left_mult(a, s);
  Matrix d1 = c.coproduct(s), d2 = c.coproduct(t);
  return c.coproduct(a.product(s, t)) + d1 * Rt.transpose() + d2 * Ls.transpose() + Ls * d2 -
         (Rt * d1).transpose() + Lt * d1 - (d1 * Lt.transpose()).transpose() - Rt * d1 +
         (d1 * Rt.transpose()).transpose();
}

Matrix twist_compatibility(const Algebra& a, const Coalgebra& c, std::size_t s, std::size_t t) {
  need(a.dim() == c.dim(), "algebra and coalgebra dimensions differ");
  return right_mult(a, s) * c.coproduct(t) - (right_mult(a, t) * c.coproduct(s)).transpose();
}

Report bialgebra_identities(const Algebra& a, const Coalgebra& c) {
  Report rep;
  rep.add("compatibility I",
          "D(a1a2) + (id(x)r(a2) - r(a2)(x)id + l(a2)(x)id)(id - t)D(a1) + (id(x)l(a1) + l(a1)(x)id)D(a2) = 0");
  rep.add("compatibility I, expanded form", "nine-term expansion agrees with the factored operator");
  rep.add("compatibility II", "(r(a1)(x)id)D(a2) - t(r(a2)(x)id)D(a1) = 0");
  for (std::size_t s = 0; s < a.dim(); ++s)
    for (std::size_t t = 0; t < a.dim(); ++t) {
      Matrix p = product_compatibility(a, c, s, t);
      bool ok[3] = {p.is_zero(), p == product_compatibility_expanded(a, c, s, t),
                    twist_compatibility(a, c, s, t).is_zero()};
      for (int e = 0; e < 3; ++e)
        if (rep.clauses[e].holds && !ok[e]) {
          rep.clauses[e].holds = false;
          rep.clauses[e].witness = {s + 1, t + 1};
        }
    }
  return rep;
}

Report check_bialgebra(const Bialgebra& b) {
  require_anti_leibniz(b.alg, "check_bialgebra");
  require_coalgebra(b.coa, "check_bialgebra");
  return bialgebra_identities(b.alg, b.coa);
}

Bialgebra dual_bialgebra(const Bialgebra& b) {
  if (!check_bialgebra(b).holds()) throw PreconditionViolated("dual_bialgebra: input is not a bialgebra");
  return {dual_algebra(b.coa), dual_coalgebra(b.alg)};
}

EquivalenceTriple bialgebra_equivalence_crosscheck(const Algebra& a, const Coalgebra& c) {
  require_anti_leibniz(a, "bialgebra_equivalence_crosscheck");
  require_anti_leibniz(dual_algebra(c), "bialgebra_equivalence_crosscheck");
  EquivalenceTriple r{};
  r.bialgebra = bialgebra_identities(a, c).holds();
  r.matched_pair = check_matched_pair(coregular_pair(a, c)).holds();
  r.manin = standard_manin_triple(a, c).report.holds();
  return r;
}

} // namespace aleib
