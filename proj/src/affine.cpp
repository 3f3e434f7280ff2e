#include "aleib/affine.hpp"

#include <cstdlib>
#include <string>

namespace aleib {

namespace {

bool inside(const GradedContext& g, int d) { return std::abs(d) <= g.window; }

void check_context(const GradedContext& g) {
  if (g.window < 1) throw BadParameter("window must be at least 1");
}

void guard(const GradedContext& g, std::initializer_list<int> degs) {
  for (int d : degs)
    if (!inside(g, d)) throw WindowOverflow("degree " + std::to_string(d) + " outside the window");
}

std::string degrees(std::initializer_list<int> ds) {
  std::string s = "degrees (";
  bool first = true;
  for (int d : ds) {
    s += (first ? "" : ", ") + std::to_string(d);
    first = false;
  }
  return s + ")";
}

void fail(Clause& c, std::vector<std::size_t> witness, std::string detail) {
  if (!c.holds) return;
  c.holds = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
}

} // namespace

Homogeneous affine_multiply(const GradedContext& g, const Homogeneous& x, const Homogeneous& y) {
  check_context(g);
  guard(g, {x.deg, y.deg, x.deg + y.deg});
  return {multiply(g.base.alg, x.a, y.a), x.deg + y.deg};
}

Scalar laurent_form(int i, int j, Field f) { return Scalar(f, i + j == 0 ? 1 : 0); }
Scalar laurent_form_printed(int i, int j, Field f) { return Scalar(f, i == j ? 1 : 0); }

bool laurent_form_invariant(int n, bool printed) {
  auto w = printed ? laurent_form_printed : laurent_form;
  for (int a = -n; a <= n; ++a)
    for (int b = -n; b <= n; ++b)
      for (int c = -n; c <= n; ++c)
        if (w(a + b, c, Field::Q()) != w(a, b + c, Field::Q())) return false;
  return true;
}

Scalar laurent_dual_coproduct(int k, int i, int j, Field f) { return Scalar(f, i + j == k ? 1 : 0); }

bool laurent_duality_holds(int n) {
  const Field f = Field::Q();
  for (int k = -n; k <= n; ++k)
    for (int a = -n; a <= n; ++a)
      for (int b = -n; b <= n; ++b) {
        if (std::abs(a + b) > n) continue;
        Scalar lhs(f);
        for (int i = -n; i <= n; ++i)
          for (int j = -n; j <= n; ++j) lhs += laurent_dual_coproduct(k, i, j, f) * laurent_form(i, a, f) * laurent_form(j, b, f);
        if (lhs != laurent_form(k, a + b, f)) return false;
      }
  return true;
}

CompletedTensor2 completed_coproduct(const GradedContext& g, const Homogeneous& x) {
  check_context(g);
  guard(g, {x.deg});
  const Field f = g.base.alg.field();
  Matrix d = g.base.coa.coproduct(x.a);
  const int k = x.deg;
  return CompletedTensor2(
      g.base.alg.dim(), f, [d, k, f](int i, int j) { return laurent_dual_coproduct(k, i, j, f) * d; },
      [k](int i, int j) { return i + j == k; });
}

Tensor3 completed_coassociator(const GradedContext& g, std::size_t s, int k, int p, int q, int r) {
  check_context(g);
  guard(g, {k, p, q, r, p + q, q + r, p + r});
  const std::size_t n = g.base.alg.dim();
  const Field f = g.base.alg.field();
  auto gen = [&](std::size_t a, int d) { return completed_coproduct(g, {unit_vec(n, a, f), d}); };
  CompletedTensor2 top = gen(s, k);
  Tensor3 left = Tensor3::cube(n, f);
  // (D (x) id)D at (p,q,r): expand the first leg of the (p+q, r) coefficient.
  Matrix c1 = top(p + q, r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!c1(a, b).is_zero()) left += c1(a, b) * outer(gen(a, p + q)(p, q), unit_vec(n, b, f));
  // (id (x) D)D at (p,q,r) and at (q,p,r); the second feeds the twisted term.
  auto right_at = [&](int x, int y, int z) {
    Tensor3 t = Tensor3::cube(n, f);
    Matrix c = top(x, y + z);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!c(a, b).is_zero()) t += c(a, b) * outer(unit_vec(n, a, f), gen(b, y + z)(y, z));
    return t;
  };
  return left + right_at(p, q, r) + right_at(q, p, r).tau12();
}

WindowReport check_completed_bialgebra_window(const GradedContext& g) {
  check_context(g);
  const Algebra& A = g.base.alg;
  const std::size_t n = A.dim();
  const Field f = A.field();
  const int N = g.window;
  WindowReport out;
  Report& rep = out.report;
  rep.add("graded anti-Leibniz (window)", "x<>(y<>z) + (x<>y)<>z + y<>(x<>z) = 0 on homogeneous generators");
  rep.add("completed anti-Leibniz coalgebra (window)", "(D(x)id)D + (id(x)D)D + (t(x)id)(id(x)D)D = 0 coefficientwise");
  rep.add("completed compatibility I (window)",
          "D(a1a2) + ((id(x)r(a2) + (l-r)(a2)(x)id)(id - t))D(a1) + (id(x)l(a1) + l(a1)(x)id)D(a2) = 0");
  rep.add("completed compatibility II (window)", "(r(a1)(x)id)D(a2) - t((r(a2)(x)id)D(a1)) = 0");
  Clause* prod = &rep.clauses[0];
  Clause* coal = &rep.clauses[1];
  Clause* c1 = &rep.clauses[2];
  Clause* c2 = &rep.clauses[3];
  auto e = [&](std::size_t a) { return unit_vec(n, a, f); };
  auto in = [&](int d) { return inside(g, d); };

  for (int i = -N; i <= N; ++i)
    for (int j = -N; j <= N; ++j)
      for (int k = -N; k <= N; ++k) {
        if (!in(i + j) || !in(j + k) || !in(i + k) || !in(i + j + k)) continue;
        out.product_probes.push_back({i, j, k});
        for (std::size_t a = 0; a < n && prod->holds; ++a)
          for (std::size_t b = 0; b < n && prod->holds; ++b)
            for (std::size_t c = 0; c < n && prod->holds; ++c) {
              Homogeneous x{e(a), i}, y{e(b), j}, z{e(c), k};
              Vec v = affine_multiply(g, x, affine_multiply(g, y, z)).a + affine_multiply(g, affine_multiply(g, x, y), z).a +
                      affine_multiply(g, y, affine_multiply(g, x, z)).a;
              if (!is_zero(v)) fail(*prod, {a + 1, b + 1, c + 1}, degrees({i, j, k}));
            }
      }

  for (int k = -N; k <= N; ++k)
    for (int p = -N; p <= N; ++p)
      for (int q = -N; q <= N; ++q)
        for (int r = -N; r <= N; ++r) {
          if (!in(p + q) || !in(q + r) || !in(p + r) || p + q + r != k) continue;
          out.coalgebra_probes.push_back({k, p, q, r});
          for (std::size_t s = 0; s < n && coal->holds; ++s)
            if (!completed_coassociator(g, s, k, p, q, r).is_zero()) fail(*coal, {s + 1}, degrees({k, p, q, r}));
        }

  for (int i = -N; i <= N; ++i)
    for (int j = -N; j <= N; ++j) {
      if (!in(i + j)) continue;
      for (int p = -N; p <= N; ++p)
        for (int q = -N; q <= N; ++q) {
          if (!in(p - i) || !in(q - i) || !in(p - j) || !in(q - j)) continue;
          out.compatibility_probes.push_back({i, j, p, q});
          for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
              CompletedTensor2 D1 = completed_coproduct(g, {e(s), i}), D2 = completed_coproduct(g, {e(t), j});
              CompletedTensor2 D12 = completed_coproduct(g, {A.product(s, t), i + j});
              Matrix Ls = left_mult(A, s), Lt = left_mult(A, t), Rs = right_mult(A, s), Rt = right_mult(A, t);
              auto T = [&](int x, int y) { return D1(x, y) - D1(y, x).transpose(); };
              Matrix v1 = D12(p, q) + T(p, q - j) * Rt.transpose() + (Lt - Rt) * T(p - j, q) +
                          D2(p, q - i) * Ls.transpose() + Ls * D2(p - i, q);
              if (!v1.is_zero()) fail(*c1, {s + 1, t + 1}, degrees({i, j, p, q}));
              Matrix v2 = Rs * D2(p - i, q) - (Rt * D1(q - j, p)).transpose();
              if (!v2.is_zero()) fail(*c2, {s + 1, t + 1}, degrees({i, j, p, q}));
            }
        }
    }
  prod->detail = prod->holds ? std::to_string(out.product_probes.size()) + " degree triples" : prod->detail;
  coal->detail = coal->holds ? std::to_string(out.coalgebra_probes.size()) + " degree tuples" : coal->detail;
  if (c1->holds) c1->detail = std::to_string(out.compatibility_probes.size()) + " degree tuples";
  if (c2->holds) c2->detail = std::to_string(out.compatibility_probes.size()) + " degree tuples";
  return out;
}

} // namespace aleib
