#include "aleib/build.hpp"
#include "aleib/catalog.hpp"
#include "aleib/random.hpp"
#include "doctest.h"

using namespace aleib;

namespace {
Algebra lambda21() { return make_algebra(2, {{1, 1, {0, 1}}}); }
Tensor2 symmetric_r() { return make_tensor2(2, {{1, 2, 1}, {2, 1, 1}}); }
Bialgebra lambda21_coproduct() { return {lambda21(), make_coalgebra(2, {{1, {{2, 2, 1}}}})}; }
Scalar q(long v) { return Scalar(Field::Q(), v); }
} // namespace

TEST_CASE("twist and sharp") {
  Tensor2 r = make_tensor2(2, {{1, 2, 1}});
  CHECK(tau(r) == make_tensor2(2, {{2, 1, 1}}));
  CHECK(tau(tau(r)) == r);
  Tensor3 t = Tensor3::cube(3, Field::Q());
  t(0, 1, 2) = q(1);
  CHECK(tau13(t)(2, 1, 0) == q(1));
  LinearMap s = sharp(r);
  CHECK(s * unit_vec(2, 0, Field::Q()) == unit_vec(2, 1, Field::Q()));
  CHECK((s * unit_vec(2, 1, Field::Q())) == zero_vec(2, Field::Q()));
  CHECK(sharp(tau(r)) == sharp(r).transpose());
}

TEST_CASE("bracket on the two-dimensional examples") {
  CHECK(ybe_bracket(lambda21(), symmetric_r()).is_zero());
  CHECK(ybe_bracket(lambda21(), Tensor2(2, 2, Field::Q())).is_zero());
  // r = e1 (x) e1: e2 (x) e1 (x) e1 - e1 (x) e1 (x) e2.
  Tensor3 b = ybe_bracket(lambda21(), make_tensor2(2, {{1, 1, 1}}));
  Tensor3 expect = Tensor3::cube(2, Field::Q());
  expect(1, 0, 0) = q(1);
  expect(0, 0, 1) = q(-1);
  CHECK(b == expect);
  CHECK_THROWS_AS(ybe_bracket(lambda21(), Tensor2(3, 3, Field::Q())), DimensionMismatch);
}

TEST_CASE("coboundary coproduct of the symmetric solution") {
  Coalgebra d = delta_r(lambda21(), symmetric_r());
  CHECK(d.coproduct(0) == make_tensor2(2, {{2, 2, 1}}));
  CHECK(d.coproduct(1).is_zero());
  CHECK(dual_product_r(lambda21(), symmetric_r()) == dual_algebra(d));
  RClassification c = classify_r(lambda21(), symmetric_r());
  CHECK(c.triangular);
  CHECK(c.quasi_triangular);
  CHECK_FALSE(c.factorizable);
  CHECK(c.calI.is_zero());
  CHECK(c.coboundary_bialgebra);
  RClassification z = classify_r(lambda21(), Tensor2(2, 2, Field::Q()));
  CHECK(z.triangular);
  CHECK(delta_r(lambda21(), Tensor2(2, 2, Field::Q())).cc().is_zero());
  CHECK_THROWS_AS(classify_r(make_algebra(1, {{1, 1, {1}}}), Tensor2(1, 1, Field::Q())), PreconditionViolated);
}

TEST_CASE("invariance") {
  CHECK(is_invariant(lambda21(), Tensor2(2, 2, Field::Q())));
  CHECK_FALSE(is_invariant(lambda21(), make_tensor2(2, {{1, 1, 1}})));
  DoubleResult d = double_bialgebra(lambda21_coproduct());
  CHECK(is_invariant(d.dbl.alg, d.rtilde - tau(d.rtilde)));
}

TEST_CASE("double of the two-dimensional bialgebra") {
  DoubleResult d = double_bialgebra(lambda21_coproduct());
  Fixture ex = catalog("Double4");
  CHECK(d.dbl.alg == ex.alg);
  CHECK(d.dbl.coa == *ex.coa);
  CHECK(d.rtilde == *ex.r);
  CHECK(d.report.holds());
  CHECK(d.dbl.coa.coproduct(3) == make_tensor2(4, {{3, 3, 1}}));
  RClassification c = classify_r(d.dbl.alg, d.rtilde);
  CHECK(c.quasi_triangular);
  CHECK(c.factorizable);
  CHECK_FALSE(c.triangular);
  // I(e_i*) = f_i and I(f_i*) = -e_i.
  Matrix expect = make_matrix({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(c.calI == expect);
  Algebra dp = dual_product_r(d.dbl.alg, d.rtilde);
  // On the A*-part, f2 ._r f2 = f1; dual of Delta(f2) = f1 (x) f1 reads f1* f1* = f2*.
  CHECK(dp == dual_algebra(d.dbl.coa));
  CHECK(dp.product(2, 2) == unit_vec(4, 3, Field::Q()));
  HomomorphismCriteria h = homomorphism_criteria(d.dbl.alg, d.rtilde);
  CHECK(h.sharp_homo);
  CHECK(h.tau_sharp_homo);
  CHECK(h.dual_anti_leibniz);
  CHECK(skew_intertwining_holds(d.dbl.alg, d.rtilde));
}

TEST_CASE("double of a zero coproduct") {
  DoubleResult d = double_bialgebra({lambda21(), Coalgebra::zero(2)});
  CHECK(d.report.holds());
  for (std::size_t j = 0; j < 2; ++j) CHECK(d.dbl.coa.coproduct(j).is_zero());
  CHECK_THROWS_AS(double_bialgebra({lambda21(), make_coalgebra(2, {{2, {{2, 2, 1}}}})}), PreconditionViolated);
}

TEST_CASE("homomorphism criteria") {
  Tensor2 z(2, 2, Field::Q());
  HomomorphismCriteria h = homomorphism_criteria(lambda21(), z);
  CHECK((h.sharp_homo && h.tau_sharp_homo && h.dual_anti_leibniz));
  Tensor2 r = make_tensor2(2, {{1, 1, 1}});
  HomomorphismCriteria g = homomorphism_criteria(lambda21(), r);
  CHECK_FALSE(ybe_bracket(lambda21(), r).is_zero());
  CHECK_FALSE((g.dual_anti_leibniz && g.sharp_homo));
  CHECK_FALSE((g.dual_anti_leibniz && g.tau_sharp_homo));
  CHECK_THROWS_AS(homomorphism_criteria(lambda21(), make_tensor2(2, {{1, 2, 1}})), PreconditionViolated);
}

TEST_CASE("factorization decomposition") {
  DoubleResult d = double_bialgebra(lambda21_coproduct());
  const Field f = Field::Q();
  for (std::size_t i = 0; i < 4; ++i) {
    Vec x = unit_vec(4, i, f);
    auto [p, m] = factorization_decompose(d.dbl.alg, d.rtilde, x);
    CHECK(p + m == x);
  }
  auto [p0, m0] = factorization_decompose(d.dbl.alg, d.rtilde, zero_vec(4, f));
  CHECK(is_zero(p0));
  CHECK(is_zero(m0));
  // I^-1(e1) = -f1*, so a_plus = r#(-f1*) = 0 and a_minus = t(r)#(f1*) = e1.
  auto [p1, m1] = factorization_decompose(d.dbl.alg, d.rtilde, unit_vec(4, 0, f));
  CHECK(is_zero(p1));
  CHECK(m1 == unit_vec(4, 0, f));
  CHECK_THROWS_AS(factorization_decompose(lambda21(), symmetric_r(), unit_vec(2, 0, f)), NotFactorizable);
}

TEST_CASE("coboundary residuals") {
  CoboundaryResiduals s = coboundary_residuals(lambda21(), symmetric_r());
  CHECK((s.coalg_zero() && s.product_zero() && s.twist_zero()));
  CoboundaryResiduals z = coboundary_residuals(lambda21(), Tensor2(2, 2, Field::Q()));
  CHECK((z.coalg_zero() && z.product_zero() && z.twist_zero()));
  // The twist identity only sees r - t(r), so it vanishes for symmetric r even when the bracket does not.
  Tensor2 r = make_tensor2(2, {{1, 1, 1}});
  CoboundaryResiduals b = coboundary_residuals(lambda21(), r);
  CHECK(b.twist_zero());
  CHECK(bialgebra_identities(lambda21(), delta_r(lambda21(), r)).find("compatibility II")->holds);
  // A non-symmetric instance where both evaluations fail together.
  Rng rng(5);
  bool found = false;
  for (int trial = 0; trial < 200 && !found; ++trial) {
    Algebra a = random_anti_leibniz(rng, 3);
    Tensor2 t = random_sparse_matrix(rng, 3, 3);
    CoboundaryResiduals c = coboundary_residuals(a, t);
    if (c.twist_zero()) continue;
    found = true;
    CHECK_FALSE(bialgebra_identities(a, delta_r(a, t)).find("compatibility II")->holds);
  }
  CHECK(found);
}

TEST_CASE("random suites: bracket twist identity, closure, residual agreement") {
  Rng rng(20240611);
  int printed_disagree = 0;
  for (int trial = 0; trial < 240; ++trial) {
    std::size_t n = 2 + rng.below(2);
    Algebra a = random_anti_leibniz(rng, n);
    Tensor2 r = random_sparse_matrix(rng, n, n);
    if (trial % 3 == 0) r = r + tau(r);
    CHECK(tau13(ybe_bracket(a, tau(r))) == -ybe_bracket(a, r));
    RClassification c = classify_r(a, r), ct = classify_r(a, tau(r));
    if (c.quasi_triangular) CHECK(ct.quasi_triangular);
    if (c.triangular) CHECK(ct.triangular);
    CHECK(c.quasi_triangular == (c.is_solution && c.skew_part_invariant));
    CHECK(c.triangular == (c.is_solution && c.is_symmetric));
    if (c.quasi_triangular) CHECK(c.coboundary_bialgebra);
    CHECK(dual_product_r(a, r) == dual_algebra(delta_r(a, r)));
    CoboundaryResiduals s = coboundary_residuals(a, r);
    Coalgebra d = delta_r(a, r);
    Report bi = bialgebra_identities(a, d);
    CHECK(s.coalg_zero() == check_coalgebra(d).holds());
    CHECK(s.product_zero() == bi.find("compatibility I")->holds);
    CHECK(s.twist_zero() == bi.find("compatibility II")->holds);
    bool printed_zero = true;
    for (const auto& t : s.coalg_as_printed) printed_zero = printed_zero && t.is_zero();
    if (printed_zero != s.coalg_zero()) ++printed_disagree;
  }
  // The sign of one term as printed does not match the coassociator.
  CHECK(printed_disagree > 0);
}
