#pragma once
#include <cstdint>
#include <random>

#include "aleib/coalgebra.hpp"

namespace aleib {

// Seeded source for the property suites. Identical seeds give identical instances.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(g_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(g_); }
  // -1, 0 or 1 with zero three times out of four.
  long sparse() {
    std::size_t v = below(8);
    return v == 0 ? -1 : v == 1 ? 1 : 0;
  }

 private:
  std::mt19937_64 g_;
};

Matrix random_sparse_matrix(Rng& rng, std::size_t rows, std::size_t cols, Field f = Field::Q());
Tensor3 random_sparse_tensor(Rng& rng, std::size_t n, Field f = Field::Q());
// A product of elementary matrices with entries +-1, so the inverse is integral.
Matrix random_unimodular(Rng& rng, std::size_t n, Field f = Field::Q());
// Drawn from small known families (catalog, nilpotent square-zero, direct sums), then
// moved by a random unimodular basis change with probability 0.7.
Algebra random_anti_leibniz(Rng& rng, std::size_t n, Field f = Field::Q());
// A coalgebra whose dual algebra is anti-Leibniz.
Coalgebra random_coalgebra(Rng& rng, std::size_t n, Field f = Field::Q());

} // namespace aleib
