#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "aleib/bialgebra.hpp"

namespace aleib {

// A Leibniz algebra [-,-] together with a coproduct delta. Certification is by check_leibniz_bialgebra.
struct LeibnizBialgebra {
  Algebra alg;
  Coalgebra coa;
};

// An anti-commutative anti-associative algebra with a symmetric invariant nondegenerate form.
struct QuadraticAA {
  Algebra alg;
  Matrix form;
};

Report check_leibniz_coalgebra(const Coalgebra& c);
// Both compatibility identities on basis pairs; no preconditions.
Report leibniz_bialgebra_identities(const Algebra& l, const Coalgebra& d);
Report check_leibniz_bialgebra(const LeibnizBialgebra& b);

// The product (x (x) b)(x' (x) b') = [x,x'] (x) bb' on L (x) B, basis x_i (x) e_j at i * dim B + j.
Algebra tensor_product_algebra(const Algebra& l, const Algebra& b);
// As above, after certifying L as Leibniz and B under the anti-commutative anti-associative policy.
Algebra tensor_algebra(const Algebra& l, const Algebra& b);
// Interleaved coproduct: (x1 (x) x2) . (b1 (x) b2) = (x1 (x) b1) (x) (x2 (x) b2).
Coalgebra tensor_product_coalgebra(const Coalgebra& d, const Coalgebra& db);

Report check_quadratic_aa(const QuadraticAA& q);
// The dual of the anti-commutative anti-associative checker, clause for clause.
Report check_anticocomm_anticoassoc(const Coalgebra& c);
// w(Delta_w(b1), b2 (x) b3) = w(b1, b2b3).
Coalgebra quadratic_dual_coalgebra(const QuadraticAA& q);
// Delta_w(bb') = -sum b(1)b' (x) b(2) on basis pairs.
bool quadratic_coproduct_identity(const QuadraticAA& q);

// The induced bialgebra on L (x) B without certifying the Leibniz input.
Bialgebra induced_bialgebra_raw(const LeibnizBialgebra& lb, const QuadraticAA& q);
Bialgebra induced_bialgebra(const LeibnizBialgebra& lb, const QuadraticAA& q);

// A permutation p (ours i -> theirs p[i]) carrying both tables of `ours` onto `theirs`.
std::optional<std::vector<std::size_t>> match_permutation(const Bialgebra& ours, const Bialgebra& theirs);

} // namespace aleib
