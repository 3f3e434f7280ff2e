#pragma once
#include <cstddef>
#include <vector>

#include "aleib/coalgebra.hpp"

namespace aleib {

// Actions l(e_i), r(e_i) on an mdim-dimensional module, one matrix per base basis vector.
struct Bimodule {
  Algebra base;
  std::size_t mdim = 0;
  std::vector<Matrix> lact, ract;

  Matrix l(const Vec& a) const { return combine(lact, a); }
  Matrix r(const Vec& a) const { return combine(ract, a); }
};

// lA, rA: actions of A on B (dim B matrices per A basis vector); lB, rB: of B on A.
struct MatchedPairData {
  Algebra A, B;
  std::vector<Matrix> lA, rA, lB, rB;
};

Report check_bimodule(const Bimodule& m);
Bimodule regular_bimodule(const Algebra& a);
Bimodule zero_bimodule(const Algebra& a, std::size_t mdim);
// (M*, l^t, l^t - r^t).
Bimodule dual_bimodule(const Bimodule& m);
// r(a1) r(a2) m = r(a1) l(a2) m, which every bimodule satisfies.
bool bimodule_consequence_check(const Bimodule& m);

// A (+) M with (a1,m1)(a2,m2) = (a1a2, l(a1)m2 + r(a2)m1).
Algebra semidirect_product(const Bimodule& m);

// The six matched-pair identities; clause names carry the equation index 1..6.
Report check_matched_pair(const MatchedPairData& d);
Algebra crossed_product(const MatchedPairData& d);

// Coregular data (A, A*, l*_A, l*_A - r*_A, l*_A*, l*_A* - r*_A*).
MatchedPairData coregular_pair(const Algebra& a, const Coalgebra& c);

struct ManinTriple {
  Algebra total;
  BilinearForm bd;
  Report report;
};

// Gram of Bd((a1,x1),(a2,x2)) = <x1,a2> - <x2,a1> on A (+) A*.
Matrix natural_skew_gram(std::size_t n, Field f);
ManinTriple standard_manin_triple(const Algebra& a, const Coalgebra& c);

} // namespace aleib
