#include "aleib/pairs.hpp"

#include <functional>
#include <string>

namespace aleib {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

std::vector<Matrix> transposes(const std::vector<Matrix>& ms) {
  std::vector<Matrix> out;
  for (const auto& m : ms) out.push_back(m.transpose());
  return out;
}

std::vector<Matrix> differences(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

void check_actions(const Algebra& base, std::size_t mdim, const std::vector<Matrix>& l, const std::vector<Matrix>& r) {
  need(l.size() == base.dim() && r.size() == base.dim(), "one action matrix per base basis vector");
  for (const auto* side : {&l, &r})
    for (const auto& m : *side) need(m.rows() == mdim && m.cols() == mdim, "action matrix shape");
}

// The three identities with A acting on B and B acting on A; shift names them 1..3 or 4..6.
void matched_pair_half(Report& rep, const Algebra& A, const Algebra& B, const std::vector<Matrix>& lA,
                       const std::vector<Matrix>& rA, const std::vector<Matrix>& lB, const std::vector<Matrix>& rB,
                       int shift) {
  const std::size_t n = A.dim(), m = B.dim();
  const Field f = A.field();
  static const char* anchors[3] = {
      "rA(a)(b1b2) + b1 rA(a)b2 + b2 rA(a)b1 + rA(lB(b2)a)b1 + rA(lB(b1)a)b2 = 0",
      "lA(a)(b1b2) + (lA(a)b1)b2 + b1 lA(a)b2 + lA(rB(b1)a)b2 + rA(rB(b2)a)b1 = 0",
      "(lA(a)b1)b2 + lA(rB(b1)a)b2 - (rA(a)b1)b2 - lA(lB(b1)a)b2 = 0"};
  const std::size_t base = rep.clauses.size();
  for (int e = 0; e < 3; ++e) {
    std::string anchor = anchors[e];
    if (shift) {
      // Same identity with the roles of A and B exchanged.
      for (auto& ch : anchor) ch = ch == 'A' ? 'B' : ch == 'B' ? 'A' : ch;
    }
    rep.add("matched pair identity " + std::to_string(e + 1 + shift), anchor);
  }
  Clause* cl[3] = {&rep.clauses[base], &rep.clauses[base + 1], &rep.clauses[base + 2]};
  for (std::size_t a = 0; a < n; ++a) {
    Vec ea = unit_vec(n, a, f);
    const Matrix& La = lA[a];
    const Matrix& Ra = rA[a];
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        Vec b1 = unit_vec(m, p, f), b2 = unit_vec(m, q, f);
        Vec b12 = B.product(p, q);
        Vec e1 = Ra * b12 + multiply(B, b1, Ra * b2) + multiply(B, b2, Ra * b1) + combine(rA, lB[q] * ea) * b1 +
                 combine(rA, lB[p] * ea) * b2;
        Vec e2 = La * b12 + multiply(B, La * b1, b2) + multiply(B, b1, La * b2) + combine(lA, rB[p] * ea) * b2 +
                 combine(rA, rB[q] * ea) * b1;
        Vec e3 = multiply(B, La * b1, b2) + combine(lA, rB[p] * ea) * b2 - multiply(B, Ra * b1, b2) -
                 combine(lA, lB[p] * ea) * b2;
        const Vec* es[3] = {&e1, &e2, &e3};
        for (int e = 0; e < 3; ++e)
          if (cl[e]->holds && !is_zero(*es[e])) {
            cl[e]->holds = false;
            cl[e]->witness = {a + 1, p + 1, q + 1};
          }
      }
  }
}

} // namespace

Report check_bimodule(const Bimodule& mod) {
  require_anti_leibniz(mod.base, "check_bimodule");
  check_actions(mod.base, mod.mdim, mod.lact, mod.ract);
  const Algebra& A = mod.base;
  Report rep;
  rep.add("bimodule left-left", "l(a1a2) + l(a1)l(a2) + l(a2)l(a1) = 0");
  rep.add("bimodule left-right", "l(a1)r(a2) + r(a2)l(a1) + r(a1a2) = 0");
  rep.add("bimodule right-right", "r(a1a2) + r(a2)r(a1) + l(a1)r(a2) = 0");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const Vec p = A.product(i, j);
      const Matrix &li = mod.lact[i], &lj = mod.lact[j], &ri = mod.ract[i], &rj = mod.ract[j];
      Matrix lp = mod.l(p), rp = mod.r(p);
      Clause* cs[3] = {&rep.clauses[0], &rep.clauses[1], &rep.clauses[2]};
      Matrix es[3] = {lp + li * lj + lj * li, li * rj + rj * li + rp, rp + rj * ri + li * rj};
      for (int e = 0; e < 3; ++e)
        if (cs[e]->holds && !es[e].is_zero()) {
          cs[e]->holds = false;
          cs[e]->witness = {i + 1, j + 1};
        }
    }
  return rep;
}

Bimodule regular_bimodule(const Algebra& a) {
  require_anti_leibniz(a, "regular_bimodule");
  return {a, a.dim(), left_mults(a), right_mults(a)};
}

Bimodule zero_bimodule(const Algebra& a, std::size_t mdim) {
  std::vector<Matrix> z(a.dim(), Matrix(mdim, mdim, a.field()));
  return {a, mdim, z, z};
}

Bimodule dual_bimodule(const Bimodule& m) {
  require_anti_leibniz(m.base, "dual_bimodule");
  check_actions(m.base, m.mdim, m.lact, m.ract);
  auto lt = transposes(m.lact);
  return {m.base, m.mdim, lt, differences(lt, transposes(m.ract))};
}

bool bimodule_consequence_check(const Bimodule& m) {
  for (std::size_t i = 0; i < m.base.dim(); ++i)
    for (std::size_t j = 0; j < m.base.dim(); ++j)
      if (!(m.ract[i] * m.ract[j] == m.ract[i] * m.lact[j])) return false;
  return true;
}

Algebra semidirect_product(const Bimodule& mod) {
  check_actions(mod.base, mod.mdim, mod.lact, mod.ract);
  const std::size_t n = mod.base.dim(), N = n + mod.mdim;
  Tensor3 sc = Tensor3::cube(N, mod.base.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sc(i, j, k) = mod.base.sc()(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < mod.mdim; ++j)
      for (std::size_t k = 0; k < mod.mdim; ++k) {
        sc(i, n + j, n + k) = mod.lact[i](k, j);
        sc(n + j, i, n + k) = mod.ract[i](k, j);
      }
  return Algebra(std::move(sc));
}

Report check_matched_pair(const MatchedPairData& d) {
  require_anti_leibniz(d.A, "check_matched_pair");
  require_anti_leibniz(d.B, "check_matched_pair");
  if (!check_bimodule({d.A, d.B.dim(), d.lA, d.rA}).holds())
    throw PreconditionViolated("check_matched_pair: (B, lA, rA) is not a bimodule");
  if (!check_bimodule({d.B, d.A.dim(), d.lB, d.rB}).holds())
    throw PreconditionViolated("check_matched_pair: (A, lB, rB) is not a bimodule");
  Report rep;
  matched_pair_half(rep, d.A, d.B, d.lA, d.rA, d.lB, d.rB, 0);
  matched_pair_half(rep, d.B, d.A, d.lB, d.rB, d.lA, d.rA, 3);
  return rep;
}

Algebra crossed_product(const MatchedPairData& d) {
  const std::size_t n = d.A.dim(), m = d.B.dim(), N = n + m;
  check_actions(d.A, m, d.lA, d.rA);
  check_actions(d.B, n, d.lB, d.rB);
  if (!(d.A.field() == d.B.field())) throw FieldMismatch("crossed product over different fields");
  Tensor3 sc = Tensor3::cube(N, d.A.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sc(i, j, k) = d.A.sc()(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) sc(n + i, n + j, n + k) = d.B.sc()(i, j, k);
  // (a,0)(0,b) = (rB(b)a, lA(a)b) and (0,b)(a,0) = (lB(b)a, rA(a)b).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        sc(i, n + j, k) = d.rB[j](k, i);
        sc(n + j, i, k) = d.lB[j](k, i);
      }
      for (std::size_t k = 0; k < m; ++k) {
        sc(i, n + j, n + k) = d.lA[i](k, j);
        sc(n + j, i, n + k) = d.rA[i](k, j);
      }
    }
  return Algebra(std::move(sc));
}

MatchedPairData coregular_pair(const Algebra& a, const Coalgebra& c) {
  need(a.dim() == c.dim(), "algebra and coalgebra dimensions differ");
  Algebra ad = dual_algebra(c);
  auto la = transposes(left_mults(a)), lad = transposes(left_mults(ad));
  return {a, ad, la, differences(la, transposes(right_mults(a))), lad, differences(lad, transposes(right_mults(ad)))};
}

Matrix natural_skew_gram(std::size_t n, Field f) {
  Matrix g(2 * n, 2 * n, f);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = Scalar(f, -1);
    g(n + i, i) = Scalar(f, 1);
  }
  return g;
}

ManinTriple standard_manin_triple(const Algebra& a, const Coalgebra& c) {
  require_anti_leibniz(a, "standard_manin_triple");
  require_anti_leibniz(dual_algebra(c), "standard_manin_triple");
  const std::size_t n = a.dim();
  ManinTriple mt{crossed_product(coregular_pair(a, c)), {natural_skew_gram(n, a.field())}, {}};
  Report& rep = mt.report;
  Report al = check_anti_leibniz(mt.total);
  Clause& total = rep.add("total algebra anti-Leibniz", "x(yz) + (xy)z + y(xz) = 0 on A (+) A*", al.holds());
  if (!al.holds()) total.witness = al.first_failure()->witness;
  auto closed = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = lo; j < hi; ++j)
        for (std::size_t k = 0; k < 2 * n; ++k)
          if ((k < lo || k >= hi) && !mt.total.sc()(i, j, k).is_zero()) return false;
    return true;
  };
  rep.add("A subalgebra", "A * A lies in A", closed(0, n));
  rep.add("A* subalgebra", "A* * A* lies in A*", closed(n, 2 * n));
  FormProperties fp = form_properties(mt.total, mt.bd);
  rep.add("Bd nondegenerate", "Bd has trivial kernel", fp.nondegenerate);
  rep.add("Bd skew-symmetric", "Bd(x,y) = -Bd(y,x)", fp.skew_symmetric);
  Clause& sym = rep.add("Bd symmetric", "Bd(x,y) = Bd(y,x)", fp.symmetric);
  sym.advisory = true;
  sym.detail = "the pairing <x1,a2> - <x2,a1> is skew; the symmetric wording is not used";
  rep.add("Bd invariant", "Bd(xy,z) = Bd(x, yz - zy)", fp.invariant_skew_style);
  return mt;
}

} // namespace aleib
