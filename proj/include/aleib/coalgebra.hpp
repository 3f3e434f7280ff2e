#pragma once
#include <cstddef>

#include "aleib/algebra.hpp"

namespace aleib {

// Delta(e_k) = sum_{i,j} cc(k,i,j) e_i (x) e_j.
class Coalgebra {
 public:
  Coalgebra() = default;
  explicit Coalgebra(Tensor3 cc);
  static Coalgebra zero(std::size_t n, Field f = Field::Q());

  std::size_t dim() const { return cc_.n1(); }
  Field field() const { return cc_.field(); }
  const Tensor3& cc() const { return cc_; }

  // Delta(e_k) as a 2-tensor matrix, and Delta(x) for a vector.
  Matrix coproduct(std::size_t k) const { return cc_.slice(k); }
  Matrix coproduct(const Vec& x) const;
  void set_coproduct(std::size_t k, const Matrix& m) { cc_.set_slice(k, m); }

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) { return a.cc_ == b.cc_; }

 private:
  Tensor3 cc_;
};

// The three iterated coproducts, each indexed [k] -> 3-tensor.
Tensor3 delta_then_left(const Coalgebra& c, std::size_t k);   // (Delta (x) id) Delta
Tensor3 delta_then_right(const Coalgebra& c, std::size_t k);  // (id (x) Delta) Delta
Tensor3 anti_leibniz_coassociator(const Coalgebra& c, std::size_t k);

Report check_coalgebra(const Coalgebra& c);
void require_coalgebra(const Coalgebra& c, const char* who);

Algebra dual_algebra(const Coalgebra& c);
Coalgebra dual_coalgebra(const Algebra& a);

} // namespace aleib
