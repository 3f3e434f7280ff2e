#include "aleib/yangbaxter.hpp"

namespace aleib {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

void fits(const Algebra& a, const Tensor2& r) {
  need(r.rows() == a.dim() && r.cols() == a.dim(), "r-matrix size differs from algebra");
}

// V(x) = ((r - l)(x) (x) id + id (x) r(x))(r - t(r)).
Matrix skew_defect(const Algebra& a, const Tensor2& r, const Vec& x) { return invariance_defect(a, r - tau(r), x); }

bool all_zero(const std::vector<Matrix>& ms) {
  for (const auto& m : ms)
    if (!m.is_zero()) return false;
  return true;
}

} // namespace

Tensor2 tau(const Tensor2& r) { return r.transpose(); }

Tensor3 tau13(const Tensor3& t) { return t.tau13(); }

LinearMap sharp(const Tensor2& r) { return r.transpose(); }

Tensor3 ybe_bracket(const Algebra& a, const Tensor2& r) {
  fits(a, r);
  const std::size_t n = a.dim();
  const Tensor3& sc = a.sc();
  Tensor3 out = Tensor3::cube(n, a.field());
  // r = sum x (x) y; the four terms of the expansion, one pair of r-entries at a time.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (r(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (r(k, l).is_zero()) continue;
          Scalar c = r(i, j) * r(k, l);
          for (std::size_t p = 0; p < n; ++p) {
            if (!sc(i, k, p).is_zero()) out(p, j, l) += c * sc(i, k, p);
            if (!sc(j, k, p).is_zero()) out(i, p, l) += c * sc(j, k, p);
            if (!sc(i, l, p).is_zero()) out(k, p, j) -= c * sc(i, l, p);
            if (!sc(j, l, p).is_zero()) out(k, i, p) -= c * sc(j, l, p);
          }
        }
    }
  return out;
}

Tensor2 invariance_defect(const Algebra& a, const Tensor2& r, const Vec& x) {
  fits(a, r);
  Matrix R = right_mult(a, x), L = left_mult(a, x);
  return (R - L) * r + r * R.transpose();
}

bool is_invariant(const Algebra& a, const Tensor2& r) {
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!invariance_defect(a, r, unit_vec(a.dim(), k, a.field())).is_zero()) return false;
  return true;
}

bool skew_intertwining_holds(const Algebra& a, const Tensor2& r) {
  fits(a, r);
  Matrix I = sharp(r) - sharp(tau(r));
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Matrix L = left_mult(a, k), R = right_mult(a, k);
    if (!(I * (L.transpose() - R.transpose()) == R * I)) return false;
  }
  return true;
}

Coalgebra delta_r(const Algebra& a, const Tensor2& r) {
  fits(a, r);
  Coalgebra c = Coalgebra::zero(a.dim(), a.field());
  for (std::size_t k = 0; k < a.dim(); ++k) c.set_coproduct(k, invariance_defect(a, r, unit_vec(a.dim(), k, a.field())));
  return c;
}

RClassification classify_r(const Algebra& a, const Tensor2& r) {
  require_anti_leibniz(a, "classify_r");
  RClassification c;
  c.is_solution = ybe_bracket(a, r).is_zero();
  c.is_symmetric = r == tau(r);
  c.skew_part_invariant = is_invariant(a, r - tau(r));
  c.quasi_triangular = c.is_solution && c.skew_part_invariant;
  c.triangular = c.is_solution && c.is_symmetric;
  c.sharp = sharp(r);
  c.tau_sharp = sharp(tau(r));
  c.calI = c.sharp - c.tau_sharp;
  c.factorizable = c.quasi_triangular && rank(c.calI) == a.dim();
  if (c.quasi_triangular) {
    Coalgebra d = delta_r(a, r);
    c.coboundary_bialgebra = check_coalgebra(d).holds() && bialgebra_identities(a, d).holds();
  }
  return c;
}

Algebra dual_product_r(const Algebra& a, const Tensor2& r) {
  fits(a, r);
  const std::size_t n = a.dim();
  const Field f = a.field();
  Matrix rs = sharp(r), trs = sharp(tau(r));
  Tensor3 sc = Tensor3::cube(n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec x1 = unit_vec(n, i, f), x2 = unit_vec(n, j, f);
      Vec t2 = trs * x2;
      Vec v = left_mult(a, rs * x1).transpose() * x2 + left_mult(a, t2).transpose() * x1 -
              right_mult(a, t2).transpose() * x1;
      sc.set_fibre(i, j, v);
    }
  return Algebra(std::move(sc));
}

HomomorphismCriteria homomorphism_criteria(const Algebra& a, const Tensor2& r) {
  require_anti_leibniz(a, "homomorphism_criteria");
  if (!is_invariant(a, r - tau(r))) throw PreconditionViolated("homomorphism_criteria: r - t(r) is not invariant");
  Algebra d = dual_product_r(a, r);
  return {is_homomorphism(sharp(r), d, a), is_homomorphism(sharp(tau(r)), d, a), check_anti_leibniz(d).holds()};
}

DoubleResult double_bialgebra(const Bialgebra& b) {
  if (!check_bialgebra(b).holds()) throw PreconditionViolated("double_bialgebra: input is not a bialgebra");
  const std::size_t n = b.alg.dim(), N = 2 * n;
  const Field f = b.alg.field();
  ManinTriple mt = standard_manin_triple(b.alg, b.coa);
  Tensor2 rt(N, N, f);
  for (std::size_t i = 0; i < n; ++i) rt(i, n + i) = Scalar(f, 1);
  DoubleResult out{{mt.total, delta_r(mt.total, rt)}, rt, {}};
  Report& rep = out.report;
  rep.merge(mt.report);
  rep.add("r~ solves the Yang-Baxter equation", "[[r~, r~]] = 0", ybe_bracket(mt.total, rt).is_zero());
  rep.add("r~ - t(r~) invariant", "((r - l)(x) (x) id + id (x) r(x))(r~ - t(r~)) = 0", is_invariant(mt.total, rt - tau(rt)));
  // Injections: A -> A (+) A* carries Delta, A* -> A (+) A* carries the coproduct dual to A.
  Coalgebra dA = dual_coalgebra(b.alg);
  bool inj_a = true, inj_d = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        const Scalar& va = out.dbl.coa.cc()(k, i, j);
        const Scalar& vd = out.dbl.coa.cc()(n + k, i, j);
        Scalar ea = (i < n && j < n) ? b.coa.cc()(k, i, j) : Scalar(f);
        Scalar ed = (i >= n && j >= n) ? dA.cc()(k, i - n, j - n) : Scalar(f);
        inj_a = inj_a && va == ea;
        inj_d = inj_d && vd == ed;
      }
  rep.add("A -> double is a coalgebra map", "Delta_r~(e_j) = Delta(e_j)", inj_a);
  rep.add("A* -> double is a coalgebra map", "Delta_r~(f_j) = dual of the product of A", inj_d);
  rep.add("double is a bialgebra", "compatibility identities for (A (+) A*, *, Delta_r~)",
          check_coalgebra(out.dbl.coa).holds() && bialgebra_identities(out.dbl.alg, out.dbl.coa).holds());
  return out;
}

std::pair<Vec, Vec> factorization_decompose(const Algebra& a, const Tensor2& r, const Vec& x) {
  need(x.size() == a.dim(), "factorization_decompose: vector length");
  RClassification c = classify_r(a, r);
  if (!c.factorizable) throw NotFactorizable("factorization_decompose: r is not factorizable");
  Vec xi = solve_invert(c.calI) * x;
  return {c.sharp * xi, -Scalar(a.field(), 1) * (c.tau_sharp * xi)};
}

bool CoboundaryResiduals::coalg_zero() const {
  for (const auto& t : coalg)
    if (!t.is_zero()) return false;
  return true;
}
bool CoboundaryResiduals::product_zero() const { return all_zero(product_identity); }
bool CoboundaryResiduals::twist_zero() const { return all_zero(twist_identity); }

CoboundaryResiduals coboundary_residuals(const Algebra& a, const Tensor2& r) {
  fits(a, r);
  const std::size_t n = a.dim();
  const Field f = a.field();
  const Matrix Id = Matrix::identity(n, f);
  Tensor3 B = ybe_bracket(a, r), Bt = B.tau12();
  // W = sum r(i,j) V(e_i) (x) e_j.
  Tensor3 W = Tensor3::cube(n, f);
  std::vector<Matrix> V;
  for (std::size_t i = 0; i < n; ++i) V.push_back(skew_defect(a, r, unit_vec(n, i, f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r(i, j).is_zero()) W += r(i, j) * outer(V[i], unit_vec(n, j, f));
  CoboundaryResiduals out;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix L = left_mult(a, k), R = right_mult(a, k);
    Tensor3 t12 = apply3(L - R, Id, Id, B) + apply3(Id, Id, R, Bt) + apply3(Id, L - R, Id, Bt);
    Tensor3 w3 = apply3(Id, Id, R, W), wmid = apply3(Id, L - R, Id, W);
    Tensor3 t4 = Tensor3::cube(n, f);
    Matrix Vt = V[k].transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!r(i, j).is_zero())
          t4 += r(i, j) * apply3(left_mult(a, i) - right_mult(a, i), Id, Id, outer(Vt, unit_vec(n, j, f)));
    out.coalg.push_back(t12 + w3 + wmid + t4);
    out.coalg_as_printed.push_back(t12 - w3 + wmid + t4);
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Matrix R1 = right_mult(a, s), R2 = right_mult(a, t), L2 = left_mult(a, t);
      Matrix Y = R2 * V[s];
      out.product_identity.push_back((R2 - L2) * V[s].transpose() + Y - Y.transpose() + (R1 * V[t]).transpose());
      out.twist_identity.push_back(R1 * V[t]);
    }
  return out;
}

} // namespace aleib
