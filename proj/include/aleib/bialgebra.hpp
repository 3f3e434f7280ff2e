#pragma once
#include <cstddef>

#include "aleib/pairs.hpp"

namespace aleib {

struct Bialgebra {
  Algebra alg;
  Coalgebra coa;
};

// Delta(a1a2) + (id(x)r(a2) - r(a2)(x)id + l(a2)(x)id)(id - t)Delta(a1)
//   + (id(x)l(a1) + l(a1)(x)id)Delta(a2), at a1 = e_s, a2 = e_t.
Matrix product_compatibility(const Algebra& a, const Coalgebra& c, std::size_t s, std::size_t t);
// The same identity with the operator expanded into nine separate terms.
Matrix product_compatibility_expanded(const Algebra& a, const Coalgebra& c, std::size_t s, std::size_t t);
// (r(a1)(x)id)Delta(a2) - t(r(a2)(x)id)Delta(a1).
Matrix twist_compatibility(const Algebra& a, const Coalgebra& c, std::size_t s, std::size_t t);

// Both compatibility identities on every basis pair, without preconditions.
Report bialgebra_identities(const Algebra& a, const Coalgebra& c);
Report check_bialgebra(const Bialgebra& b);
Bialgebra dual_bialgebra(const Bialgebra& b);

struct EquivalenceTriple {
  bool bialgebra, matched_pair, manin;
  bool agree() const { return bialgebra == matched_pair && matched_pair == manin; }
};
// Evaluates the bialgebra identities, the coregular matched-pair identities and
// the standard Manin triple conditions independently.
EquivalenceTriple bialgebra_equivalence_crosscheck(const Algebra& a, const Coalgebra& c);

} // namespace aleib
