#pragma once
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "aleib/report.hpp"
#include "aleib/tensor.hpp"

namespace aleib {

// Matrix of a linear map, shape target_dim x source_dim.
using LinearMap = Matrix;

class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(Tensor3 sc, std::vector<std::string> labels = {});
  static Algebra zero(std::size_t n, Field f = Field::Q());

  std::size_t dim() const { return sc_.n1(); }
  Field field() const { return sc_.field(); }
  const Tensor3& sc() const { return sc_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vec product(std::size_t i, std::size_t j) const { return sc_.fibre(i, j); }
  // Sets e_i e_j; drops any certificate.
  void set_product(std::size_t i, std::size_t j, const Vec& out);

  // A certificate names a law and pins the structure constants it was derived from.
  bool certified(const std::string& law) const;
  void certify(const std::string& law);

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.sc_ == b.sc_; }

 private:
  Tensor3 sc_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> certs_;
};

std::size_t fingerprint(const Tensor3& t);

struct BilinearForm {
  Matrix gram;  // gram(i,j) = B(e_i, e_j)
  Scalar operator()(const Vec& x, const Vec& y) const;
};

struct FormProperties {
  bool nondegenerate, symmetric, skew_symmetric, invariant_skew_style, invariant_sym_style;
};

Report check_anti_leibniz(const Algebra& a);
Report check_right_anti_leibniz(const Algebra& a);
Report check_mock_lie(const Algebra& a);
Report check_leibniz(const Algebra& a);
Report check_commutative(const Algebra& a);
// Verdict follows the off-diagonal reading of anti-commutativity together with
// anti-associativity; the literal i = j clause is reported as advisory.
Report check_anticomm_antiassoc(const Algebra& a);

// Throws PreconditionViolated unless the algebra is certified or passes the checker.
void require_anti_leibniz(const Algebra& a, const char* who);
Algebra certified_anti_leibniz(Algebra a);

Algebra opposite(const Algebra& a);
Algebra direct_sum(const Algebra& a, const Algebra& b);
// New basis vector i is column i of g.
Algebra change_basis(const Algebra& a, const Matrix& g);

Vec multiply(const Algebra& a, const Vec& x, const Vec& y);
Matrix left_mult(const Algebra& a, std::size_t i);
Matrix right_mult(const Algebra& a, std::size_t i);
Matrix left_mult(const Algebra& a, const Vec& x);
Matrix right_mult(const Algebra& a, const Vec& x);
std::vector<Matrix> left_mults(const Algebra& a);
std::vector<Matrix> right_mults(const Algebra& a);

FormProperties form_properties(const Algebra& a, const BilinearForm& b);
bool is_homomorphism(const LinearMap& f, const Algebra& a, const Algebra& b);
// Checks (a1 a2) a3 = (a2 a1) a3; requires a certified anti-Leibniz algebra.
bool left_triple_collapse_check(const Algebra& a);

} // namespace aleib
