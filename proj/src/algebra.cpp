#include "aleib/algebra.hpp"

#include <functional>


namespace aleib {

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

// e_i * v and v * e_j.
Vec lmul(const Tensor3& sc, std::size_t i, const Vec& v) {
  Vec r = zero_vec(sc.n3(), sc.field());
  for (std::size_t m = 0; m < v.size(); ++m)
    if (!v[m].is_zero())
      for (std::size_t k = 0; k < sc.n3(); ++k) r[k] += v[m] * sc(i, m, k);
  return r;
}

Vec rmul(const Tensor3& sc, const Vec& v, std::size_t j) {
  Vec r = zero_vec(sc.n3(), sc.field());
  for (std::size_t m = 0; m < v.size(); ++m)
    if (!v[m].is_zero())
      for (std::size_t k = 0; k < sc.n3(); ++k) r[k] += v[m] * sc(m, j, k);
  return r;
}

using TripleFn = std::function<Vec(std::size_t, std::size_t, std::size_t)>;
using PairFn = std::function<Vec(std::size_t, std::size_t)>;

void triple_law(Report& rep, const std::string& name, const std::string& anchor, std::size_t n, const TripleFn& f) {
  Clause& c = rep.add(name, anchor);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(f(i, j, k))) {
          c.holds = false;
          c.witness = {i + 1, j + 1, k + 1};
          return;
        }
}

void pair_law(Report& rep, const std::string& name, const std::string& anchor, std::size_t n, bool off_diagonal,
              const PairFn& f) {
  Clause& c = rep.add(name, anchor);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (off_diagonal && i == j) continue;
      if (!is_zero(f(i, j))) {
        c.holds = false;
        c.witness = {i + 1, j + 1};
        return;
      }
    }
}


} // namespace

Algebra::Algebra(Tensor3 sc, std::vector<std::string> labels) : sc_(std::move(sc)), labels_(std::move(labels)) {
  need(sc_.n1() == sc_.n2() && sc_.n2() == sc_.n3(), "structure constants must be a cube");
  need(labels_.empty() || labels_.size() == dim(), "one label per basis vector");
}

Algebra Algebra::zero(std::size_t n, Field f) { return Algebra(Tensor3::cube(n, f)); }

void Algebra::set_product(std::size_t i, std::size_t j, const Vec& out) {
  sc_.set_fibre(i, j, out);
  certs_.clear();
}

bool Algebra::certified(const std::string& law) const {
  auto it = certs_.find(law);
  return it != certs_.end() && it->second == fingerprint(sc_);
}

void Algebra::certify(const std::string& law) { certs_[law] = fingerprint(sc_); }

std::size_t fingerprint(const Tensor3& t) {
  std::size_t h = std::hash<std::string>{}(t.field().name());
  for (const auto& x : t.data()) h = h * 1000003u ^ std::hash<std::string>{}(x.str());
  return h ^ ((t.n1() * 31 + t.n2()) * 31 + t.n3());
}

Scalar BilinearForm::operator()(const Vec& x, const Vec& y) const {
  need(x.size() == gram.rows() && y.size() == gram.cols(), "form arguments");
  Scalar s(gram.field());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero())
      for (std::size_t j = 0; j < y.size(); ++j)
        if (!y[j].is_zero()) s += x[i] * gram(i, j) * y[j];
  return s;
}

Report check_anti_leibniz(const Algebra& a) {
  const Tensor3& sc = a.sc();
  Report r;
  triple_law(r, "anti-Leibniz", "a1(a2a3) + (a1a2)a3 + a2(a1a3) = 0", a.dim(),
             [&](std::size_t i, std::size_t j, std::size_t k) {
               return lmul(sc, i, sc.fibre(j, k)) + rmul(sc, sc.fibre(i, j), k) + lmul(sc, j, sc.fibre(i, k));
             });
  return r;
}

Report check_right_anti_leibniz(const Algebra& a) {
  const Tensor3& sc = a.sc();
  Report r;
  triple_law(r, "right anti-Leibniz", "a1(a2a3) + (a1a2)a3 + (a1a3)a2 = 0", a.dim(),
             [&](std::size_t i, std::size_t j, std::size_t k) {
               return lmul(sc, i, sc.fibre(j, k)) + rmul(sc, sc.fibre(i, j), k) + rmul(sc, sc.fibre(i, k), j);
             });
  return r;
}

Report check_commutative(const Algebra& a) {
  const Tensor3& sc = a.sc();
  Report r;
  pair_law(r, "commutative", "a1a2 = a2a1", a.dim(), false,
           [&](std::size_t i, std::size_t j) { return sc.fibre(i, j) - sc.fibre(j, i); });
  return r;
}

Report check_mock_lie(const Algebra& a) {
  const Tensor3& sc = a.sc();
  Report r = check_commutative(a);
  triple_law(r, "Jacobi", "[v1,[v2,v3]] + [v2,[v3,v1]] + [v3,[v1,v2]] = 0", a.dim(),
             [&](std::size_t i, std::size_t j, std::size_t k) {
               return lmul(sc, i, sc.fibre(j, k)) + lmul(sc, j, sc.fibre(k, i)) + lmul(sc, k, sc.fibre(i, j));
             });
  return r;
}

Report check_leibniz(const Algebra& a) {
  const Tensor3& sc = a.sc();
  Report r;
  triple_law(r, "Leibniz", "[x1,[x2,x3]] = [[x1,x2],x3] + [x2,[x1,x3]]", a.dim(),
             [&](std::size_t i, std::size_t j, std::size_t k) {
               return lmul(sc, i, sc.fibre(j, k)) - rmul(sc, sc.fibre(i, j), k) - lmul(sc, j, sc.fibre(i, k));
             });
  return r;
}

Report check_anticomm_antiassoc(const Algebra& a) {
  const Tensor3& sc = a.sc();
  Report r;
  auto anti = [&](std::size_t i, std::size_t j) { return sc.fibre(i, j) + sc.fibre(j, i); };
  pair_law(r, "anti-commutative (literal)", "b1b2 = -b2b1 for all basis pairs", a.dim(), false, anti);
  r.clauses.back().advisory = true;
  pair_law(r, "anti-commutative (distinct basis pairs)", "b1b2 = -b2b1 for b1 != b2", a.dim(), true, anti);
  triple_law(r, "anti-associative", "b1(b2b3) = -(b1b2)b3", a.dim(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return lmul(sc, i, sc.fibre(j, k)) + rmul(sc, sc.fibre(i, j), k);
  });
  return r;
}

void require_anti_leibniz(const Algebra& a, const char* who) {
  if (a.certified("anti-Leibniz")) return;
  Report r = check_anti_leibniz(a);
  if (!r.holds()) throw PreconditionViolated(std::string(who) + ": algebra is not anti-Leibniz");
}

Algebra certified_anti_leibniz(Algebra a) {
  if (!check_anti_leibniz(a).holds()) throw PreconditionViolated("algebra is not anti-Leibniz");
  a.certify("anti-Leibniz");
  return a;
}

Algebra opposite(const Algebra& a) { return Algebra(a.sc().tau12(), a.labels()); }

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct sum over different fields");
  const std::size_t n = a.dim(), m = b.dim();
  Tensor3 sc = Tensor3::cube(n + m, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sc(i, j, k) = a.sc()(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) sc(n + i, n + j, n + k) = b.sc()(i, j, k);
  return Algebra(std::move(sc));
}

Algebra change_basis(const Algebra& a, const Matrix& g) {
  need(g.rows() == a.dim() && g.is_square(), "basis change shape");
  Matrix gi = solve_invert(g);
  const std::size_t n = a.dim();
  Tensor3 sc = Tensor3::cube(n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sc.set_fibre(i, j, gi * multiply(a, g.column(i), g.column(j)));
  return Algebra(std::move(sc));
}

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) {
  need(x.size() == a.dim() && y.size() == a.dim(), "multiply: vector length");
  Vec r = zero_vec(a.dim(), a.field());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!x[i].is_zero()) r = r + x[i] * lmul(a.sc(), i, y);
  return r;
}

Matrix left_mult(const Algebra& a, std::size_t i) {
  const std::size_t n = a.dim();
  Matrix m(n, n, a.field());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = a.sc()(i, j, k);
  return m;
}

Matrix right_mult(const Algebra& a, std::size_t i) {
  const std::size_t n = a.dim();
  Matrix m(n, n, a.field());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = a.sc()(j, i, k);
  return m;
}

std::vector<Matrix> left_mults(const Algebra& a) {
  std::vector<Matrix> v;
  for (std::size_t i = 0; i < a.dim(); ++i) v.push_back(left_mult(a, i));
  return v;
}

std::vector<Matrix> right_mults(const Algebra& a) {
  std::vector<Matrix> v;
  for (std::size_t i = 0; i < a.dim(); ++i) v.push_back(right_mult(a, i));
  return v;
}

Matrix left_mult(const Algebra& a, const Vec& x) {
  need(x.size() == a.dim(), "left_mult: vector length");
  return combine(left_mults(a), x);
}

Matrix right_mult(const Algebra& a, const Vec& x) {
  need(x.size() == a.dim(), "right_mult: vector length");
  return combine(right_mults(a), x);
}

FormProperties form_properties(const Algebra& a, const BilinearForm& b) {
  const std::size_t n = a.dim();
  need(b.gram.rows() == n && b.gram.cols() == n, "form size differs from algebra");
  const Matrix& g = b.gram;
  FormProperties p{};
  p.nondegenerate = kernel(g).empty();
  p.symmetric = g == g.transpose();
  p.skew_symmetric = (g + g.transpose()).is_zero();
  p.invariant_skew_style = p.invariant_sym_style = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ei = unit_vec(n, i, a.field()), ek = unit_vec(n, k, a.field());
        Scalar lhs = b(a.product(i, j), ek);
        if (lhs != b(ei, a.product(j, k) - a.product(k, j))) p.invariant_skew_style = false;
        if (lhs != b(ei, a.product(j, k))) p.invariant_sym_style = false;
      }
  return p;
}

bool is_homomorphism(const LinearMap& f, const Algebra& a, const Algebra& b) {
  need(f.cols() == a.dim() && f.rows() == b.dim(), "homomorphism shape");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (f * a.product(i, j) != multiply(b, f.column(i), f.column(j))) return false;
  return true;
}

bool left_triple_collapse_check(const Algebra& a) {
  require_anti_leibniz(a, "left_triple_collapse_check");
  const Tensor3& sc = a.sc();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (rmul(sc, sc.fibre(i, j), k) != rmul(sc, sc.fibre(j, i), k)) return false;
  return true;
}

} // namespace aleib
