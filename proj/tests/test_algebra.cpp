#include "aleib/build.hpp"
#include "doctest.h"

using namespace aleib;

namespace {
Algebra lambda21() { return make_algebra(2, {{1, 1, {0, 1}}}); }
Algebra lambda22_11() { return make_algebra(2, {{1, 1, {-1, -1}}, {1, 2, {1, 1}}, {2, 1, {1, 1}}, {2, 2, {-1, -1}}}); }
Algebra noncomm3() { return make_algebra(3, {{1, 2, {0, 0, 1}}, {2, 2, {0, 0, 1}}}); }
Algebra idem1() { return make_algebra(1, {{1, 1, {1}}}); }
} // namespace

TEST_CASE("anti-Leibniz checker") {
  CHECK(check_anti_leibniz(lambda21()).holds());
  CHECK(check_anti_leibniz(lambda22_11()).holds());
  CHECK(check_anti_leibniz(noncomm3()).holds());
  CHECK(check_anti_leibniz(Algebra::zero(4)).holds());
  Report r = check_anti_leibniz(idem1());
  REQUIRE(!r.holds());
  CHECK(r.first_failure()->witness == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("right anti-Leibniz and opposites") {
  CHECK(check_right_anti_leibniz(opposite(lambda21())).holds());
  CHECK(check_right_anti_leibniz(Algebra::zero(2)).holds());
  CHECK(check_right_anti_leibniz(opposite(noncomm3())).holds());
  // Every triple product vanishes in the noncommutative example, so both laws hold.
  CHECK(check_right_anti_leibniz(noncomm3()).holds());
  Algebra op = opposite(noncomm3());
  CHECK(op.product(1, 0) == make_vec({0, 0, 1}));
  CHECK(op.product(0, 1) == make_vec({0, 0, 0}));
  CHECK(opposite(op) == noncomm3());
}

TEST_CASE("mock-Lie") {
  CHECK(check_mock_lie(lambda21()).holds());
  CHECK(!check_mock_lie(noncomm3()).holds());
  CHECK(check_mock_lie(Algebra::zero(3)).holds());
}

TEST_CASE("Leibniz") {
  CHECK(check_leibniz(make_algebra(2, {{1, 1, {0, 1}}})).holds());
  CHECK(check_leibniz(Algebra::zero(2)).holds());
  // [x1,x2] = x1 = [x2,x2] satisfies the right-handed law only.
  Algebra l3 = make_algebra(2, {{1, 2, {1, 0}}, {2, 2, {1, 0}}});
  CHECK(!check_leibniz(l3).holds());
  CHECK(check_leibniz(opposite(l3)).holds());
}

TEST_CASE("anti-commutative anti-associative policy") {
  Algebra b = make_algebra(2, {{1, 1, {0, 1}}});
  Report r = check_anticomm_antiassoc(b);
  CHECK(r.holds());
  CHECK(!r.find("anti-commutative (literal)")->holds);
  CHECK(check_anticomm_antiassoc(Algebra::zero(2)).holds());
  Report i1 = check_anticomm_antiassoc(idem1());
  CHECK(!i1.holds());
  CHECK(!i1.find("anti-commutative (literal)")->holds);
  Algebra b2 = make_algebra(2, {{1, 1, {0, 1}}}, Field::GF(2));
  CHECK(check_anticomm_antiassoc(b2).find("anti-commutative (literal)")->holds);
}

TEST_CASE("multiplication maps") {
  Algebra a = lambda21();
  CHECK(multiply(a, make_vec({1, 0}), make_vec({1, 0})) == make_vec({0, 1}));
  CHECK(multiply(a, make_vec({0, 0}), make_vec({3, 2})) == make_vec({0, 0}));
  CHECK(multiply(lambda22_11(), make_vec({1, 0}), make_vec({0, 1})) == make_vec({1, 1}));
  Algebra n3 = noncomm3();
  CHECK(left_mult(n3, 0)(2, 1).is_one());
  CHECK(right_mult(n3, 1)(2, 0).is_one());
  CHECK_THROWS_AS(multiply(a, make_vec({1}), make_vec({1, 0})), DimensionMismatch);
}

TEST_CASE("form properties") {
  Algebra b = make_algebra(2, {{1, 1, {0, 1}}});
  FormProperties p = form_properties(b, {make_matrix({{0, 1}, {1, 0}})});
  CHECK(p.symmetric);
  CHECK(p.nondegenerate);
  CHECK(p.invariant_sym_style);
  FormProperties z = form_properties(b, {Matrix(2, 2)});
  CHECK(!z.nondegenerate);
  CHECK(z.symmetric);
  CHECK(z.skew_symmetric);
  CHECK(z.invariant_skew_style);
  CHECK(z.invariant_sym_style);
  FormProperties id = form_properties(lambda21(), {Matrix::identity(2)});
  CHECK(id.symmetric);
  CHECK(id.nondegenerate);
  CHECK(!id.invariant_skew_style);
}

TEST_CASE("form properties survive basis change") {
  Algebra b = make_algebra(2, {{1, 1, {0, 1}}});
  Matrix gram = make_matrix({{0, 1}, {1, 0}});
  Matrix g = make_matrix({{1, 1}, {0, 1}});
  Algebra b2 = change_basis(b, g);
  FormProperties p = form_properties(b, {gram}), p2 = form_properties(b2, {g.transpose() * gram * g});
  CHECK(p.invariant_sym_style == p2.invariant_sym_style);
  CHECK(p.symmetric == p2.symmetric);
  CHECK(p.nondegenerate == p2.nondegenerate);
  CHECK(check_anti_leibniz(change_basis(noncomm3(), make_matrix({{1, 0, 1}, {1, 1, 0}, {0, 0, 1}}))).holds());
}

TEST_CASE("homomorphisms and direct sums") {
  Algebra a = lambda21();
  CHECK(is_homomorphism(Matrix::identity(2), a, a));
  CHECK(is_homomorphism(Matrix(2, 2), a, a));
  CHECK(is_homomorphism(make_matrix({{0, 0}, {1, 0}}), a, a));
  CHECK(!is_homomorphism(make_matrix({{1, 0}, {0, 0}}), a, a));
  Algebra s = direct_sum(a, a);
  CHECK(s.dim() == 4);
  CHECK(s.product(2, 2) == make_vec({0, 0, 0, 1}));
  CHECK(s.product(0, 2) == make_vec({0, 0, 0, 0}));
  CHECK(check_anti_leibniz(s).holds());
  CHECK(direct_sum(a, Algebra::zero(1)).dim() == 3);
  CHECK_THROWS_AS(direct_sum(a, Algebra::zero(1, Field::GF(2))), FieldMismatch);
}

TEST_CASE("left triple collapse") {
  CHECK(left_triple_collapse_check(lambda21()));
  CHECK(left_triple_collapse_check(noncomm3()));
  CHECK_THROWS_AS(left_triple_collapse_check(idem1()), PreconditionViolated);
}

TEST_CASE("certificates pin structure constants") {
  Algebra a = certified_anti_leibniz(lambda21());
  CHECK(a.certified("anti-Leibniz"));
  a.set_product(0, 0, make_vec({1, 0}));
  CHECK(!a.certified("anti-Leibniz"));
  CHECK_THROWS_AS(certified_anti_leibniz(idem1()), PreconditionViolated);
}
