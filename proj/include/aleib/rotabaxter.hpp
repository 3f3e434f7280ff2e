#pragma once
#include <optional>

#include "aleib/pairs.hpp"
#include "aleib/yangbaxter.hpp"

namespace aleib {

// R : M -> A, an A-rows by M-columns matrix.
struct RelativeRB {
  Bimodule bimodule;
  LinearMap R;
};

struct WeightedRB {
  Algebra alg;
  LinearMap R;
  Scalar lambda;
};

struct SkewQuadraticRB {
  Algebra alg;
  LinearMap R;
  Scalar lambda;
  Matrix form;
};

// R(m1)R(m2) = R(l(R m1) m2 + r(R m2) m1).
Report check_relative_rb(const RelativeRB& x);
// R(a1)R(a2) = R(R(a1)a2 + a1R(a2) + lambda a1a2).
Report check_rb_weight(const WeightedRB& x);
Algebra descendent_product(const WeightedRB& x);
Report check_skew_quadratic(const SkewQuadraticRB& x);
// (A, -B, -(lambda id + R)).
SkewQuadraticRB rb_involution(const SkewQuadraticRB& x);

// Gram (I^-1)^t and R = lambda t(r)# I^-1.
SkewQuadraticRB factorizable_to_rb(const Algebra& a, const Tensor2& r, const Scalar& lambda);
// r# = (R + lambda id) I_B / lambda with I_B = (Gram^t)^-1.
Tensor2 rb_to_factorizable(const SkewQuadraticRB& x);

struct SemidirectSolution {
  Algebra ambient;
  Tensor2 r;
  bool bracket_zero = false, relative_rb = false;
  // Set when the bracket vanishes: the triangular bialgebra (ambient, Delta_r).
  std::optional<Bialgebra> bialgebra;
};
// r = P + t(P) on A (+) M* with P = sum P(m_i) (x) m_i*.
SemidirectSolution relative_rb_to_semidirect_solution(const RelativeRB& x);

// Each criterion is an advisory clause carrying its boolean; the verdict clauses
// state that it agrees with the direct bracket test.
Report sharp_rb_criteria(const Algebra& a, const std::optional<Matrix>& form, const Tensor2& r);

struct OmegaForm {
  BilinearForm omega;
  bool cocycle_holds = false;
};
// w(a1,a2) = <(r#)^-1 a1, a2> for symmetric nondegenerate r.
OmegaForm omega_form(const Algebra& a, const Tensor2& r);

struct DeltaIBialgebra {
  Algebra descendent;
  Coalgebra delta_I;
  // I/lambda carries (A*, ._r, dual coproduct of A) onto (A, ._R, Delta_I).
  bool algebra_iso = false, coalgebra_iso = false;
  bool bialgebra_holds = false;
  // -lambda id - R is again a Rota-Baxter operator of weight lambda.
  bool complement_rb = false;
  bool iso_check() const { return algebra_iso && coalgebra_iso; }
};
DeltaIBialgebra delta_I_bialgebra(const Algebra& a, const Tensor2& r, const Scalar& lambda);

} // namespace aleib
