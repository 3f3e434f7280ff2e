#include "aleib/affine.hpp"
#include "aleib/build.hpp"
#include "aleib/catalog.hpp"
#include "aleib/random.hpp"
#include "doctest.h"

using namespace aleib;

namespace {
const Field Q = Field::Q();
Algebra lambda21() { return make_algebra(2, {{1, 1, {0, 1}}}); }
// Coalgebra dual to Lambda_1^2 itself; compatibility fails against Lambda_1^2.
Coalgebra self_dual() { return make_coalgebra(2, {{2, {{1, 1, 1}}}}); }
bool base_verdict(const Bialgebra& b) {
  return check_coalgebra(b.coa).holds() && bialgebra_identities(b.alg, b.coa).holds();
}
} // namespace

TEST_CASE("Laurent pairing and coproduct") {
  CHECK(laurent_form(2, -2, Q) == Scalar(Q, 1));
  CHECK(laurent_form(2, 2, Q).is_zero());
  CHECK(laurent_form_printed(2, 2, Q) == Scalar(Q, 1));
  CHECK(laurent_form_invariant(4));
  CHECK(!laurent_form_invariant(4, true));
  CHECK(laurent_dual_coproduct(3, 5, -2, Q) == Scalar(Q, 1));
  CHECK(laurent_dual_coproduct(3, 5, -1, Q).is_zero());
  CHECK(laurent_duality_holds(4));
}

TEST_CASE("affine product") {
  GradedContext g{{lambda21(), Coalgebra::zero(2)}, 3};
  Homogeneous x{unit_vec(2, 0, Q), 1}, y{unit_vec(2, 0, Q), 2};
  Homogeneous z = affine_multiply(g, x, y);
  CHECK(z.deg == 3);
  CHECK(z.a == unit_vec(2, 1, Q));
  CHECK_THROWS_AS(affine_multiply(g, x, {unit_vec(2, 0, Q), 3}), WindowOverflow);
  CHECK_THROWS_AS(affine_multiply(g, {unit_vec(2, 0, Q), -4}, x), WindowOverflow);
  CHECK_THROWS_AS(affine_multiply(GradedContext{g.base, 0}, x, x), BadParameter);
}

TEST_CASE("completed coproduct oracle") {
  GradedContext g{{lambda21(), make_coalgebra(2, {{1, {{2, 2, 1}}}})}, 3};
  CompletedTensor2 d = completed_coproduct(g, {unit_vec(2, 0, Q), 1});
  CHECK(d.in_support(3, -2));
  CHECK(!d.in_support(0, 0));
  Matrix expect(2, 2, Q);
  expect(1, 1) = Scalar(Q, 1);
  CHECK(d(3, -2) == expect);
  CHECK(d(0, 0).is_zero());
  CHECK_THROWS_AS(completed_coproduct(g, {unit_vec(2, 0, Q), 4}), WindowOverflow);
}

TEST_CASE("coassociator coefficient reproduces the base identity") {
  // Delta(e1) = e1 (x) e1 is not an anti-Leibniz coalgebra.
  Coalgebra c = make_coalgebra(1, {{1, {{1, 1, 1}}}});
  GradedContext g{{make_algebra(1, {}), c}, 2};
  CHECK(completed_coassociator(g, 0, 0, 0, 0, 0) == anti_leibniz_coassociator(c, 0));
  CHECK(completed_coassociator(g, 0, 1, 2, -1, 0) == anti_leibniz_coassociator(c, 0));
  CHECK_THROWS_AS(completed_coassociator(g, 0, 1, 2, -2, 1), WindowOverflow);
  CHECK(completed_coassociator(g, 0, 1, 0, 0, 0).is_zero());
  WindowReport w = check_completed_bialgebra_window(g);
  CHECK(!w.report.find("completed anti-Leibniz coalgebra (window)")->holds);
  CHECK(w.report.find("completed anti-Leibniz coalgebra (window)")->witness == std::vector<std::size_t>{1});
}

TEST_CASE("window verdict agrees with the base bialgebra") {
  for (const char* name : {"Lambda2_1_bialgebra", "Split3_bialgebra"}) {
    Fixture fx = catalog(name);
    Bialgebra b{fx.alg, *fx.coa};
    for (int n : {1, 2, 3}) {
      WindowReport w = check_completed_bialgebra_window({b, n});
      CHECK(w.report.holds());
      CHECK(!w.coalgebra_probes.empty());
      CHECK(!w.compatibility_probes.empty());
    }
    CHECK(check_bialgebra(b).holds());
  }
  Bialgebra broken{lambda21(), self_dual()};
  CHECK(check_coalgebra(broken.coa).holds());
  CHECK(!base_verdict(broken));
  WindowReport w = check_completed_bialgebra_window({broken, 2});
  CHECK(!w.report.holds());
  CHECK(w.report.find("completed anti-Leibniz coalgebra (window)")->holds);
  CHECK(w.report.find("graded anti-Leibniz (window)")->holds);
}

TEST_CASE("probe sets stay inside the window") {
  Fixture fx = catalog("Lambda2_1_bialgebra");
  GradedContext g{{fx.alg, *fx.coa}, 2};
  WindowReport w = check_completed_bialgebra_window(g);
  for (const auto& p : w.coalgebra_probes) {
    CHECK(p[1] + p[2] + p[3] == p[0]);
    for (int d : {p[1] + p[2], p[2] + p[3], p[1] + p[3]}) CHECK(std::abs(d) <= 2);
  }
  for (const auto& p : w.compatibility_probes)
    for (int d : {p[0] + p[1], p[2] - p[0], p[3] - p[1]}) CHECK(std::abs(d) <= 2);
}

TEST_CASE("random instances: window verdict equals base verdict") {
  Rng rng(20261016);
  int agree = 0, passing = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng.below(2);
    Bialgebra b{random_anti_leibniz(rng, n, Q), random_coalgebra(rng, n, Q)};
    bool base = base_verdict(b);
    bool win = check_completed_bialgebra_window({b, 1}).report.holds();
    CHECK(base == win);
    agree += base == win;
    passing += base;
  }
  CHECK(agree == 60);
  CHECK(passing > 0);
}
