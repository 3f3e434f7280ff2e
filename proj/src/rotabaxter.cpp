#include "aleib/rotabaxter.hpp"

namespace aleib {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

void need_weight(const Scalar& lambda, const char* who) {
  if (lambda.is_zero()) throw ZeroWeight(std::string(who) + ": weight must be nonzero");
}

Vec e(std::size_t n, std::size_t i, Field f) { return unit_vec(n, i, f); }

// First failing basis pair of a bilinear identity, recorded into the clause.
template <class Fn>
void pair_check(Clause& c, std::size_t n, Fn&& zero_at) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!zero_at(i, j)) {
        c.holds = false;
        c.witness = {i + 1, j + 1};
        return;
      }
}

bool rb_identity(const Algebra& a, const LinearMap& R, const Scalar& lambda) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x = e(n, i, f), y = e(n, j, f), rx = R * x, ry = R * y;
      Vec rhs = R * (multiply(a, rx, y) + multiply(a, x, ry) + lambda * a.product(i, j));
      if (multiply(a, rx, ry) != rhs) return false;
    }
  return true;
}

bool form_usable(const Algebra& a, const Matrix& g) {
  FormProperties p = form_properties(a, BilinearForm{g});
  return p.nondegenerate && p.skew_symmetric && p.invariant_skew_style;
}

// S x1 . S x2 = S(l*(r# x1) x2 + (l* - r*)(t(r)# x2) x1) with S = t(r)#.
bool tau_sharp_criterion(const Algebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  Matrix rs = sharp(r), trs = sharp(tau(r));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x1 = e(n, i, f), x2 = e(n, j, f), t2 = trs * x2;
      Vec inner = left_mult(a, rs * x1).transpose() * x2 +
                  (left_mult(a, t2).transpose() - right_mult(a, t2).transpose()) * x1;
      if (multiply(a, trs * x1, trs * x2) != trs * inner) return false;
    }
  return true;
}

// r# x1 . r# x2 = r#(l*(r# x1) x2 + (l* - r*)(r# x2) x1 - l*((r# - t(r)#) x1) x2).
bool sharp_criterion(const Algebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  Matrix rs = sharp(r), trs = sharp(tau(r));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x1 = e(n, i, f), x2 = e(n, j, f), s2 = rs * x2;
      Vec inner = left_mult(a, rs * x1).transpose() * x2 +
                  (left_mult(a, s2).transpose() - right_mult(a, s2).transpose()) * x1 -
                  left_mult(a, (rs - trs) * x1).transpose() * x2;
      if (multiply(a, rs * x1, rs * x2) != rs * inner) return false;
    }
  return true;
}

// R_r(a1)R_r(a2) = R_r(R_r(a1)a2 + a1 t(r)#(phi a2)) with R_r = r# phi.
bool form_invariant_criterion(const Algebra& a, const Matrix& phi, const Tensor2& r) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  Matrix Rr = sharp(r) * phi, T = sharp(tau(r)) * phi;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x1 = e(n, i, f), x2 = e(n, j, f);
      if (multiply(a, Rr * x1, Rr * x2) != Rr * (multiply(a, Rr * x1, x2) + multiply(a, x1, T * x2))) return false;
    }
  return true;
}

void add_equivalence(Report& rep, const std::string& name, const std::string& anchor, bool value, bool bracket) {
  Clause& c = rep.add(name, anchor, value);
  c.advisory = true;
  Clause& agree = rep.add(name + " agrees with the bracket", "criterion <=> [[r, r]] = 0", value == bracket);
  if (!agree.holds) agree.detail = value ? "criterion holds but the bracket does not vanish" : "bracket vanishes but the criterion fails";
}

} // namespace

Report check_relative_rb(const RelativeRB& x) {
  const Bimodule& m = x.bimodule;
  need(x.R.rows() == m.base.dim() && x.R.cols() == m.mdim, "relative Rota-Baxter operator shape");
  if (!check_bimodule(m).holds()) throw PreconditionViolated("check_relative_rb: not a bimodule");
  const Field f = m.base.field();
  Report rep;
  Clause& c = rep.add("relative Rota-Baxter", "R(m1)R(m2) = R(l(R m1) m2 + r(R m2) m1)");
  pair_check(c, m.mdim, [&](std::size_t i, std::size_t j) {
    Vec m1 = e(m.mdim, i, f), m2 = e(m.mdim, j, f), a1 = x.R * m1, a2 = x.R * m2;
    return multiply(m.base, a1, a2) == x.R * (m.l(a1) * m2 + m.r(a2) * m1);
  });
  return rep;
}

Report check_rb_weight(const WeightedRB& x) {
  require_anti_leibniz(x.alg, "check_rb_weight");
  const std::size_t n = x.alg.dim();
  need(x.R.rows() == n && x.R.cols() == n, "Rota-Baxter operator shape");
  const Field f = x.alg.field();
  Report rep;
  Clause& c = rep.add("Rota-Baxter of weight lambda", "R(a1)R(a2) = R(R(a1)a2 + a1R(a2) + lambda a1a2)");
  pair_check(c, n, [&](std::size_t i, std::size_t j) {
    Vec a1 = e(n, i, f), a2 = e(n, j, f), r1 = x.R * a1, r2 = x.R * a2;
    return multiply(x.alg, r1, r2) ==
           x.R * (multiply(x.alg, r1, a2) + multiply(x.alg, a1, r2) + x.lambda * x.alg.product(i, j));
  });
  return rep;
}

Algebra descendent_product(const WeightedRB& x) {
  require_anti_leibniz(x.alg, "descendent_product");
  const std::size_t n = x.alg.dim();
  need(x.R.rows() == n && x.R.cols() == n, "Rota-Baxter operator shape");
  const Field f = x.alg.field();
  Tensor3 sc = Tensor3::cube(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec a1 = e(n, i, f), a2 = e(n, j, f);
      sc.set_fibre(i, j,
                   multiply(x.alg, x.R * a1, a2) + multiply(x.alg, a1, x.R * a2) + x.lambda * x.alg.product(i, j));
    }
  return Algebra(std::move(sc));
}

Report check_skew_quadratic(const SkewQuadraticRB& x) {
  const std::size_t n = x.alg.dim();
  need(x.form.rows() == n && x.form.cols() == n, "form shape");
  Report rep = check_rb_weight({x.alg, x.R, x.lambda});
  FormProperties p = form_properties(x.alg, BilinearForm{x.form});
  rep.add("form nondegenerate", "det B != 0", p.nondegenerate);
  rep.add("form skew-symmetric", "B(a1,a2) = -B(a2,a1)", p.skew_symmetric);
  rep.add("form invariant", "B(a1a2,a3) = B(a1, a2a3 - a3a2)", p.invariant_skew_style);
  // B(R a1, a2) + B(a1, R a2) + lambda B(a1, a2) = 0, i.e. R^t G + G R + lambda G = 0.
  Matrix adj = x.R.transpose() * x.form + x.form * x.R + x.lambda * x.form;
  Clause& c = rep.add("R adjoint with weight", "B(R a1, a2) + B(a1, R a2) + lambda B(a1, a2) = 0", true);
  pair_check(c, n, [&](std::size_t i, std::size_t j) { return adj(i, j).is_zero(); });
  return rep;
}

SkewQuadraticRB rb_involution(const SkewQuadraticRB& x) {
  if (!check_skew_quadratic(x).holds()) throw PreconditionViolated("rb_involution: input is not certified");
  const Field f = x.alg.field();
  return {x.alg, -(x.lambda * Matrix::identity(x.alg.dim(), f) + x.R), x.lambda, -x.form};
}

SkewQuadraticRB factorizable_to_rb(const Algebra& a, const Tensor2& r, const Scalar& lambda) {
  RClassification c = classify_r(a, r);
  if (!c.factorizable) throw NotFactorizable("factorizable_to_rb: r is not factorizable");
  need_weight(lambda, "factorizable_to_rb");
  Matrix Ii = solve_invert(c.calI);
  return {a, lambda * (c.tau_sharp * Ii), lambda, Ii.transpose()};
}

Tensor2 rb_to_factorizable(const SkewQuadraticRB& x) {
  need_weight(x.lambda, "rb_to_factorizable");
  if (!check_skew_quadratic(x).holds()) throw PreconditionViolated("rb_to_factorizable: input is not certified");
  const std::size_t n = x.alg.dim();
  const Field f = x.alg.field();
  Matrix IB = solve_invert(x.form.transpose());
  Matrix rs = x.lambda.inv() * ((x.R + x.lambda * Matrix::identity(n, f)) * IB);
  Tensor2 r = rs.transpose();
  RClassification c = classify_r(x.alg, r);
  if (!c.factorizable || !(c.calI == IB))
    throw PreconditionViolated("rb_to_factorizable: output is not factorizable with I = I_B");
  return r;
}

SemidirectSolution relative_rb_to_semidirect_solution(const RelativeRB& x) {
  const Bimodule& m = x.bimodule;
  need(x.R.rows() == m.base.dim() && x.R.cols() == m.mdim, "relative Rota-Baxter operator shape");
  if (!check_bimodule(m).holds()) throw PreconditionViolated("relative_rb_to_semidirect_solution: not a bimodule");
  const std::size_t n = m.base.dim(), N = n + m.mdim;
  const Field f = m.base.field();
  SemidirectSolution out{semidirect_product(dual_bimodule(m)), Tensor2(N, N, f), false, false, std::nullopt};
  Tensor2 p(N, N, f);
  for (std::size_t i = 0; i < m.mdim; ++i)
    for (std::size_t a = 0; a < n; ++a) p(a, n + i) = x.R(a, i);
  out.r = p + tau(p);
  out.bracket_zero = ybe_bracket(out.ambient, out.r).is_zero();
  out.relative_rb = check_relative_rb(x).holds();
  if (out.bracket_zero) {
    Bialgebra b{out.ambient, delta_r(out.ambient, out.r)};
    if (!(check_coalgebra(b.coa).holds() && bialgebra_identities(b.alg, b.coa).holds()))
      throw PreconditionViolated("relative_rb_to_semidirect_solution: symmetric solution did not give a bialgebra");
    out.bialgebra = std::move(b);
  }
  return out;
}

Report sharp_rb_criteria(const Algebra& a, const std::optional<Matrix>& form, const Tensor2& r) {
  require_anti_leibniz(a, "sharp_rb_criteria");
  const std::size_t n = a.dim();
  need(r.rows() == n && r.cols() == n, "r-matrix size differs from algebra");
  if (form && !form_usable(a, *form))
    throw PreconditionViolated("sharp_rb_criteria: form is not nondegenerate skew-symmetric invariant");
  const Field f = a.field();
  const bool bracket = ybe_bracket(a, r).is_zero();
  const bool symmetric = r == tau(r);
  Report rep;
  rep.add("bracket vanishes", "[[r, r]] = 0", bracket).advisory = true;
  add_equivalence(rep, "t(r)# criterion", "t(r)#x1 t(r)#x2 = t(r)#(l*(r#x1)x2 + (l*-r*)(t(r)#x2)x1)",
                  tau_sharp_criterion(a, r), bracket);
  if (is_invariant(a, r - tau(r)))
    add_equivalence(rep, "r# criterion, invariant skew part",
                    "r#x1 r#x2 = r#(l*(r#x1)x2 + (l*-r*)(r#x2)x1 - l*((r#-t(r)#)x1)x2)", sharp_criterion(a, r), bracket);
  if (symmetric) {
    Bimodule co = dual_bimodule(regular_bimodule(a));
    add_equivalence(rep, "r# relative Rota-Baxter on the coregular bimodule", "r#x1 r#x2 = r#(l*(r#x1)x2 + (l*-r*)(r#x2)x1)",
                    check_relative_rb({co, sharp(r)}).holds(), bracket);
  }
  if (form) {
    // phi(a) = B(a, -), so the matrix of phi is the transposed Gram.
    Matrix phi = form->transpose();
    Matrix Rr = sharp(r) * phi;
    if (symmetric) {
      Bimodule co = dual_bimodule(regular_bimodule(a));
      bool rel = check_relative_rb({co, sharp(r)}).holds();
      bool rb0 = rb_identity(a, Rr, Scalar(f, 0));
      add_equivalence(rep, "R_r Rota-Baxter of weight 0", "R_r(a1)R_r(a2) = R_r(R_r(a1)a2 + a1R_r(a2))", rb0, bracket);
      rep.add("relative Rota-Baxter <=> R_r Rota-Baxter", "r# relative RB <=> r# phi RB of weight 0", rel == rb0);
    }
    if (is_invariant(a, r))
      add_equivalence(rep, "R_r criterion, invariant r", "R_r(a1)R_r(a2) = R_r(R_r(a1)a2 + a1 t(r)#(phi a2))",
                      form_invariant_criterion(a, phi, r), bracket);
  }
  return rep;
}

OmegaForm omega_form(const Algebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  need(r.rows() == n && r.cols() == n, "r-matrix size differs from algebra");
  if (!(r == tau(r))) throw NotSymmetric("omega_form: r is not symmetric");
  Matrix w = solve_invert(sharp(r)).transpose();
  OmegaForm out{BilinearForm{w}, true};
  const Field f = a.field();
  for (std::size_t i = 0; i < n && out.cocycle_holds; ++i)
    for (std::size_t j = 0; j < n && out.cocycle_holds; ++j)
      for (std::size_t k = 0; k < n && out.cocycle_holds; ++k) {
        Vec a1 = e(n, i, f), a2 = e(n, j, f), a3 = e(n, k, f);
        const BilinearForm& o = out.omega;
        Scalar v = o(a.product(j, k), a1) + o(a.product(i, k), a2) - o(a.product(k, i), a2) - o(a.product(j, i), a3);
        out.cocycle_holds = v.is_zero();
      }
  return out;
}

DeltaIBialgebra delta_I_bialgebra(const Algebra& a, const Tensor2& r, const Scalar& lambda) {
  SkewQuadraticRB x = factorizable_to_rb(a, r, lambda);
  const std::size_t n = a.dim();
  const Field f = a.field();
  Matrix I = sharp(r) - sharp(tau(r)), Ii = solve_invert(I);
  DeltaIBialgebra out;
  out.descendent = descendent_product({a, x.R, lambda});
  // Delta_I^*(x1 (x) x2) = -(1/lambda) I^-1(I x1 . I x2).
  Tensor3 sd = Tensor3::cube(n, f);
  Scalar c = -lambda.inv();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sd.set_fibre(i, j, c * (Ii * multiply(a, I.column(i), I.column(j))));
  out.delta_I = dual_coalgebra(Algebra(std::move(sd)));
  Matrix phi = lambda.inv() * I;
  Algebra dr = dual_product_r(a, r);
  out.algebra_iso = is_homomorphism(phi, dr, out.descendent);
  Coalgebra dA = dual_coalgebra(a);
  out.coalgebra_iso = true;
  for (std::size_t k = 0; k < n && out.coalgebra_iso; ++k)
    out.coalgebra_iso = apply2(phi, phi, dA.coproduct(k)) == out.delta_I.coproduct(phi.column(k));
  out.bialgebra_holds = check_anti_leibniz(out.descendent).holds() && check_coalgebra(out.delta_I).holds() &&
                        bialgebra_identities(out.descendent, out.delta_I).holds();
  out.complement_rb = rb_identity(a, -(lambda * Matrix::identity(n, f)) - x.R, lambda);
  return out;
}

} // namespace aleib
