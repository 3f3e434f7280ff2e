#pragma once
#include <functional>
#include <vector>

#include "aleib/bialgebra.hpp"

namespace aleib {

// A (x) k[t, t^-1] truncated to degrees -window..window.
struct GradedContext {
  Bialgebra base;
  int window = 1;
};

// a t^deg.
struct Homogeneous {
  Vec a;
  int deg = 0;
};

// (a t^i) <> (b t^j) = (ab) t^(i+j).
Homogeneous affine_multiply(const GradedContext& g, const Homogeneous& x, const Homogeneous& y);

// The invariant pairing w(t^i, t^j) = 1 iff i + j = 0, and the pairing as printed, 1 iff i = j.
Scalar laurent_form(int i, int j, Field f = Field::Q());
Scalar laurent_form_printed(int i, int j, Field f = Field::Q());
// Invariance w(t^a t^b, t^c) = w(t^a, t^b t^c) over a, b, c in [-n, n].
bool laurent_form_invariant(int n, bool printed = false);
// Coefficient of t^i (x) t^j in Delta(t^k).
Scalar laurent_dual_coproduct(int k, int i, int j, Field f = Field::Q());
// sum_{i,j} Delta(t^k)[i,j] w(t^i, t^a) w(t^j, t^b) = w(t^k, t^a t^b) with all degrees in [-n, n].
bool laurent_duality_holds(int n);

// A formal sum of X_ij in A_i (x) A_j, given coefficientwise.
class CompletedTensor2 {
 public:
  using Oracle = std::function<Matrix(int, int)>;
  using Support = std::function<bool(int, int)>;
  CompletedTensor2(std::size_t dim, Field f, Oracle o, Support s)
      : dim_(dim), f_(f), oracle_(std::move(o)), support_(std::move(s)) {}
  Matrix operator()(int i, int j) const { return support_(i, j) ? oracle_(i, j) : Matrix(dim_, dim_, f_); }
  bool in_support(int i, int j) const { return support_(i, j); }

 private:
  std::size_t dim_;
  Field f_;
  Oracle oracle_;
  Support support_;
};

// Delta(a t^k) = sum_i Delta(a) t^i (x) t^(k-i).
CompletedTensor2 completed_coproduct(const GradedContext& g, const Homogeneous& x);

// Coefficient at degrees (p, q, r) of the completed coassociator applied to e_s t^k.
Tensor3 completed_coassociator(const GradedContext& g, std::size_t s, int k, int p, int q, int r);

struct WindowReport {
  Report report;
  // Degree tuples that were evaluated: (k, p, q, r) for the coalgebra axiom,
  // (i, j, p, q) for the compatibility identities, (i, j, k) for the product.
  std::vector<std::vector<int>> coalgebra_probes, compatibility_probes, product_probes;
};
WindowReport check_completed_bialgebra_window(const GradedContext& g);

} // namespace aleib
