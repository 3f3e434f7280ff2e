#pragma once
#include <cstddef>
#include <utility>
#include <vector>

#include "aleib/bialgebra.hpp"

namespace aleib {

// An element r of A (x) A is its coefficient matrix: r = sum r(i,j) e_i (x) e_j.
using Tensor2 = Matrix;

Tensor2 tau(const Tensor2& r);
Tensor3 tau13(const Tensor3& t);
// r#(f_i) = sum_j r(i,j) e_j, as a map A* -> A.
LinearMap sharp(const Tensor2& r);

Tensor3 ybe_bracket(const Algebra& a, const Tensor2& r);
// ((r - l)(e_k) (x) id + id (x) r(e_k)) r for one basis vector, and the test over all of them.
Tensor2 invariance_defect(const Algebra& a, const Tensor2& r, const Vec& x);
bool is_invariant(const Algebra& a, const Tensor2& r);
// I (l* - r*)(a) = r(a) I for all a, with I = r# - t(r)#.
bool skew_intertwining_holds(const Algebra& a, const Tensor2& r);
Coalgebra delta_r(const Algebra& a, const Tensor2& r);

struct RClassification {
  bool is_solution = false, is_symmetric = false, skew_part_invariant = false;
  bool quasi_triangular = false, triangular = false, factorizable = false;
  // Set when quasi-triangular: (A, ., Delta_r) passed the coalgebra and bialgebra checks.
  bool coboundary_bialgebra = false;
  LinearMap sharp, tau_sharp, calI;
};
RClassification classify_r(const Algebra& a, const Tensor2& r);

// x1 ._r x2 = l*(r# x1) x2 + l*(t(r)# x2) x1 - r*(t(r)# x2) x1 on A*.
Algebra dual_product_r(const Algebra& a, const Tensor2& r);

struct HomomorphismCriteria {
  bool sharp_homo, tau_sharp_homo, dual_anti_leibniz;
};
HomomorphismCriteria homomorphism_criteria(const Algebra& a, const Tensor2& r);

struct DoubleResult {
  Bialgebra dbl;
  Tensor2 rtilde;
  Report report;
};
// A (+) A* with the coregular crossed product and r~ = sum e_i (x) f_i.
DoubleResult double_bialgebra(const Bialgebra& b);

// a = a_plus + a_minus with a_plus = r#(I^-1 a), a_minus = -t(r)#(I^-1 a).
std::pair<Vec, Vec> factorization_decompose(const Algebra& a, const Tensor2& r, const Vec& x);

struct CoboundaryResiduals {
  // Per basis vector e_k: the coassociator condition on r, as used in the proof,
  // and the same expression with the sign of the id(x)id(x)r(a) term as printed.
  std::vector<Tensor3> coalg, coalg_as_printed;
  // Indexed s * dim + t for the pair (e_s, e_t).
  std::vector<Matrix> product_identity, twist_identity;
  bool coalg_zero() const;
  bool product_zero() const;
  bool twist_zero() const;
};
CoboundaryResiduals coboundary_residuals(const Algebra& a, const Tensor2& r);

} // namespace aleib
