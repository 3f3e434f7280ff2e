#include "aleib/build.hpp"
#include "aleib/catalog.hpp"
#include "aleib/random.hpp"
#include "aleib/rotabaxter.hpp"
#include "doctest.h"

using namespace aleib;

namespace {
Algebra lambda21() { return make_algebra(2, {{1, 1, {0, 1}}}); }
Scalar q(long v) { return Scalar(Field::Q(), v); }
struct Dbl {
  Algebra a;
  Tensor2 r;
};
Dbl dbl() {
  Fixture f = catalog("Double4");
  return {f.alg, *f.r};
}
Matrix id(std::size_t n) { return Matrix::identity(n, Field::Q()); }
} // namespace

TEST_CASE("relative Rota-Baxter operators") {
  Bimodule reg = regular_bimodule(lambda21());
  CHECK(check_relative_rb({reg, Matrix(2, 2, Field::Q())}).holds());
  Matrix P = make_matrix({{0, 0}, {1, 0}});
  CHECK(check_relative_rb({reg, P}).holds());
  CHECK_FALSE(check_relative_rb({reg, id(2)}).holds());
  Tensor2 r = make_tensor2(2, {{1, 2, 1}, {2, 1, 1}});
  CHECK(check_relative_rb({dual_bimodule(reg), sharp(r)}).holds());
  Bimodule broken = reg;
  broken.lact[0](0, 0) = q(1);
  CHECK_THROWS_AS(check_relative_rb({broken, P}), PreconditionViolated);
}

TEST_CASE("weighted Rota-Baxter operators and the descendent product") {
  Algebra a = lambda21();
  WeightedRB z{a, Matrix(2, 2, Field::Q()), q(0)};
  CHECK(check_rb_weight(z).holds());
  CHECK(descendent_product(z) == Algebra::zero(2));
  for (long l : {1, -1, 2, 5}) {
    WeightedRB x{a, q(-l) * id(2), q(l)};
    CHECK(check_rb_weight(x).holds());
  }
  Dbl d = dbl();
  // R(a, xi) = (-a, 0) at weight 1.
  Matrix R = make_matrix({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  WeightedRB x{d.a, R, q(1)};
  CHECK(check_rb_weight(x).holds());
  Algebra desc = descendent_product(x);
  CHECK(check_anti_leibniz(desc).holds());
  CHECK(is_homomorphism(R, desc, d.a));
  CHECK_FALSE(check_rb_weight({d.a, id(4), q(1)}).holds());
  CHECK_THROWS_AS(check_rb_weight({make_algebra(1, {{1, 1, {1}}}), id(1), q(1)}), PreconditionViolated);
}

TEST_CASE("factorizable bialgebra to Rota-Baxter and back") {
  Dbl d = dbl();
  SkewQuadraticRB x = factorizable_to_rb(d.a, d.r, q(1));
  CHECK(x.R == make_matrix({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  CHECK(x.form == make_matrix({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(check_skew_quadratic(x).holds());
  for (long l : {1, -1, 2}) {
    CAPTURE(l);
    SkewQuadraticRB y = factorizable_to_rb(d.a, d.r, q(l));
    CHECK(check_skew_quadratic(y).holds());
    CHECK(y.R == q(l) * x.R);
    Tensor2 back = rb_to_factorizable(y);
    CHECK(back == d.r);
    SkewQuadraticRB again = factorizable_to_rb(d.a, back, q(l));
    CHECK(again.R == y.R);
    CHECK(again.form == y.form);
    // Feeding t(r) gives the involution of the output.
    SkewQuadraticRB t = factorizable_to_rb(d.a, tau(d.r), q(l));
    SkewQuadraticRB inv = rb_involution(y);
    CHECK(t.R == inv.R);
    CHECK(t.form == inv.form);
  }
  CHECK_THROWS_AS(factorizable_to_rb(d.a, d.r, q(0)), ZeroWeight);
  CHECK_THROWS_AS(factorizable_to_rb(lambda21(), make_tensor2(2, {{1, 2, 1}, {2, 1, 1}}), q(1)), NotFactorizable);
}

TEST_CASE("skew-quadratic checks and the involution") {
  Dbl d = dbl();
  SkewQuadraticRB x = factorizable_to_rb(d.a, d.r, q(1));
  SkewQuadraticRB zero_form{x.alg, x.R, x.lambda, Matrix(4, 4, Field::Q())};
  CHECK_FALSE(check_skew_quadratic(zero_form).find("form nondegenerate")->holds);
  SkewQuadraticRB flipped{x.alg, -x.R, x.lambda, x.form};
  CHECK_FALSE(check_skew_quadratic(flipped).find("R adjoint with weight")->holds);
  SkewQuadraticRB y = rb_involution(x);
  CHECK(y.R == make_matrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}));
  CHECK(check_skew_quadratic(y).holds());
  SkewQuadraticRB yy = rb_involution(y);
  CHECK(yy.R == x.R);
  CHECK(yy.form == x.form);
  CHECK_THROWS_AS(rb_involution(flipped), PreconditionViolated);
}

TEST_CASE("converse error paths and homogeneity") {
  Dbl d = dbl();
  SkewQuadraticRB x = factorizable_to_rb(d.a, d.r, q(1));
  // R = -lambda id is never adjoint for a nondegenerate form.
  CHECK_THROWS_AS(rb_to_factorizable({x.alg, -id(4), q(1), x.form}), PreconditionViolated);
  CHECK_THROWS_AS(rb_to_factorizable({x.alg, x.R, q(0), x.form}), ZeroWeight);
  SkewQuadraticRB scaled{x.alg, x.R, x.lambda, q(3) * x.form};
  Tensor2 r3 = rb_to_factorizable(scaled);
  CHECK(r3 == Scalar(Field::Q(), mpq_class(1, 3)) * d.r);
  CHECK(ybe_bracket(d.a, r3).is_zero());
}

TEST_CASE("Delta_I bialgebra") {
  Dbl d = dbl();
  for (long l : {1, -1, 2}) {
    CAPTURE(l);
    DeltaIBialgebra b = delta_I_bialgebra(d.a, d.r, q(l));
    CHECK(b.iso_check());
    CHECK(b.bialgebra_holds);
    CHECK(b.complement_rb);
  }
  CHECK_THROWS_AS(delta_I_bialgebra(lambda21(), make_tensor2(2, {{1, 2, 1}, {2, 1, 1}}), q(1)), NotFactorizable);
}

TEST_CASE("semidirect solutions from relative Rota-Baxter operators") {
  Bimodule reg = regular_bimodule(lambda21());
  SemidirectSolution z = relative_rb_to_semidirect_solution({reg, Matrix(2, 2, Field::Q())});
  CHECK(z.r.is_zero());
  REQUIRE(z.bialgebra.has_value());
  CHECK(z.bialgebra->coa.cc().is_zero());
  SemidirectSolution s = relative_rb_to_semidirect_solution({reg, make_matrix({{0, 0}, {1, 0}})});
  CHECK(s.ambient.dim() == 4);
  CHECK(s.bracket_zero);
  CHECK(s.relative_rb);
  REQUIRE(s.bialgebra.has_value());
  CHECK(classify_r(s.ambient, s.r).triangular);
  SemidirectSolution bad = relative_rb_to_semidirect_solution({reg, id(2)});
  CHECK_FALSE(bad.bracket_zero);
  CHECK_FALSE(bad.relative_rb);
  CHECK_FALSE(bad.bialgebra.has_value());
}

TEST_CASE("omega form") {
  Tensor2 r = make_tensor2(2, {{1, 2, 1}, {2, 1, 1}});
  OmegaForm w = omega_form(lambda21(), r);
  CHECK(w.omega.gram == make_matrix({{0, 1}, {1, 0}}));
  CHECK(w.cocycle_holds);
  CHECK_THROWS_AS(omega_form(lambda21(), make_tensor2(2, {{1, 2, 1}})), NotSymmetric);
  CHECK_THROWS_AS(omega_form(lambda21(), make_tensor2(2, {{1, 1, 1}})), NotInvertible);
  // Symmetric nondegenerate non-solution.
  Tensor2 s = make_tensor2(2, {{1, 1, 1}, {2, 2, 1}});
  CHECK_FALSE(ybe_bracket(lambda21(), s).is_zero());
  CHECK_FALSE(omega_form(lambda21(), s).cocycle_holds);
}

TEST_CASE("criteria through the sharp map") {
  Dbl d = dbl();
  Matrix g = natural_skew_gram(2, Field::Q());
  CHECK(sharp_rb_criteria(d.a, g, Tensor2(4, 4, Field::Q())).holds());
  CHECK(sharp_rb_criteria(d.a, g, d.r).holds());
  CHECK(sharp_rb_criteria(lambda21(), std::nullopt, make_tensor2(2, {{1, 1, 1}})).holds());
  CHECK_THROWS_AS(sharp_rb_criteria(d.a, id(4), d.r), PreconditionViolated);
}

TEST_CASE("random equivalence suites") {
  Rng rng(31337);
  int positives = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + rng.below(2);
    Algebra a = random_anti_leibniz(rng, n);
    // Bracket of P + t(P) on A (+) A* against the relative Rota-Baxter identity.
    Matrix P = random_sparse_matrix(rng, n, n);
    if (rng.chance(0.3)) {
      P = Matrix(n, n, Field::Q());
      P(rng.below(n), rng.below(n)) = q(1);
    }
    SemidirectSolution s = relative_rb_to_semidirect_solution({regular_bimodule(a), P});
    CHECK(s.bracket_zero == s.relative_rb);
    if (s.bracket_zero) {
      ++positives;
      CHECK(check_bialgebra(*s.bialgebra).holds());
    }
    // Symmetric r against the coregular relative Rota-Baxter identity, and the omega form.
    Matrix m = random_sparse_matrix(rng, n, n);
    Tensor2 r = m + tau(m);
    Report c = sharp_rb_criteria(a, std::nullopt, r);
    CHECK(c.holds());
    if (rank(r) == n) CHECK(omega_form(a, r).cocycle_holds == ybe_bracket(a, r).is_zero());
    // The double of (A, 0) carries the natural skew form.
    Bialgebra b{a, Coalgebra::zero(n)};
    DoubleResult dr = double_bialgebra(b);
    Matrix t = random_sparse_matrix(rng, 2 * n, 2 * n);
    if (trial % 2 == 0) t = t + tau(t);
    CHECK(sharp_rb_criteria(dr.dbl.alg, natural_skew_gram(n, Field::Q()), t).holds());
  }
  CHECK(positives > 10);
}
