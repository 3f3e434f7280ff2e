#include <chrono>
#include <cstdlib>

#include "aleib/build.hpp"
#include "aleib/search.hpp"
#include "aleib/yangbaxter.hpp"
#include "doctest.h"

using namespace aleib;

namespace {
const Field F2 = Field::GF(2), F3 = Field::GF(3);
Residues identity(std::size_t n) {
  Residues g(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) g[i * n + i] = 1;
  return g;
}
Residues compose(const Residues& a, const Residues& b, std::size_t n, std::uint32_t p) {
  Residues c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += std::uint64_t{a[i * n + k]} * b[k * n + j];
      c[i * n + j] = static_cast<std::uint32_t>(s % p);
    }
  return c;
}
} // namespace

TEST_CASE("dimension one over GF(2)") {
  SearchSpec s{F2, 1, {}, 100};
  CHECK(candidate_count(s) == 2);
  auto v = enumerate_structures(s);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Residues{0});
  CHECK(!second_pass_anti_leibniz({1}, 1, F2));
}

TEST_CASE("mask forcing zero leaves the zero algebra") {
  SearchSpec s{F3, 2, std::vector<bool>(8, false), 100};
  CHECK(candidate_count(s) == 1);
  auto v = enumerate_structures(s);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Residues(8, 0));
  s.mask = std::vector<bool>(5, true);
  CHECK_THROWS_AS(enumerate_structures(s), BadParameter);
}

TEST_CASE("dimension two over GF(2): double-entry verification") {
  SearchSpec s{F2, 2, {}, default_budget()};
  CHECK(candidate_count(s) == 256);
  auto t0 = std::chrono::steady_clock::now();
  auto v = enumerate_structures(s);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  CHECK(ms < 1000);
  CHECK(std::is_sorted(v.begin(), v.end()));
  // Re-run the whole candidate space through the second checker.
  std::vector<Residues> second;
  for (unsigned code = 0; code < 256; ++code) {
    Residues c(8);
    for (int b = 0; b < 8; ++b) c[b] = (code >> (7 - b)) & 1;
    if (second_pass_anti_leibniz(c, 2, F2)) second.push_back(c);
  }
  CHECK(v == second);
  CHECK(v.size() == 13);
}

TEST_CASE("GF(3) enumeration agrees with the second checker") {
  auto v = enumerate_structures({F3, 2, {}, default_budget()});
  CHECK(v.size() == 113);
  for (const auto& c : v) CHECK(second_pass_anti_leibniz(c, 2, F3));
}

TEST_CASE("budget and environment override") {
  CHECK_THROWS_AS(enumerate_structures({F2, 3, {}, default_budget()}), BudgetExceeded);
  // Nilpotent support: e_i e_j lands in e_k only for k > max(i, j).
  std::vector<bool> mask(27, false);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = std::max(i, j) + 1; k < 3; ++k) mask[(i * 3 + j) * 3 + k] = true;
  auto v = enumerate_structures({F2, 3, mask, default_budget()});
  CHECK(!v.empty());
  for (const auto& c : v) CHECK(second_pass_anti_leibniz(c, 3, F2));
  setenv("ALEIB_BUDGET", "100", 1);
  CHECK(default_budget() == 100);
  CHECK_THROWS_AS(enumerate_structures({F2, 2, {}, default_budget()}), BudgetExceeded);
  unsetenv("ALEIB_BUDGET");
  CHECK(default_budget() == 10'000'000);
}

TEST_CASE("group action and GL enumeration") {
  CHECK(general_linear(2, 2).size() == 6);
  CHECK(general_linear(2, 3).size() == 48);
  CHECK(general_linear(3, 2).size() == 168);
  auto v = enumerate_structures({F3, 2, {}, default_budget()});
  auto gl = general_linear(2, 3);
  for (const auto& c : v) CHECK(act(identity(2), c, 2, 3) == c);
  for (std::size_t t = 0; t < 40; ++t) {
    const Residues& g = gl[(7 * t) % gl.size()];
    const Residues& h = gl[(11 * t + 3) % gl.size()];
    const Residues& c = v[(5 * t) % v.size()];
    CHECK(act(h, act(g, c, 2, 3), 2, 3) == act(compose(g, h, 2, 3), c, 2, 3));
    // The action agrees with the library basis change.
    Matrix gm(2, 2, F3);
    for (std::size_t i = 0; i < 4; ++i) gm(i / 2, i % 2) = Scalar(F3, static_cast<long>(g[i]));
    CHECK(to_residues(change_basis(to_algebra(c, 2, F3), gm)) == act(g, c, 2, 3));
    CHECK(second_pass_anti_leibniz(act(g, c, 2, 3), 2, F3));
  }
}

TEST_CASE("orbits over GF(2)") {
  auto v = enumerate_structures({F2, 2, {}, default_budget()});
  auto orbits = orbit_classify(v, 2, F2);
  CHECK(orbits.size() == 4);
  std::size_t total = 0;
  for (const auto& o : orbits) total += o.size;
  CHECK(total == v.size());
  CHECK(orbits[0].representative == Residues(8, 0));
  CHECK(orbits[0].size == 1);
  // Representatives are a fixpoint of classification.
  std::vector<Residues> reps;
  for (const auto& o : orbits) reps.push_back(o.representative);
  auto again = orbit_classify(reps, 2, F2);
  REQUIRE(again.size() == reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) CHECK(again[i].representative == reps[i]);
  // e2 e1 = e1 survives only because 2 = 0; it is flagged, not counted as a failure.
  Report rep = commutativity_report(orbits, 2, F2);
  CHECK(rep.holds());
  std::size_t flagged = 0;
  for (const auto& c : rep.clauses)
    if (!c.holds) {
      ++flagged;
      CHECK(c.advisory);
      CHECK(c.detail.find("characteristic-zero") != std::string::npos);
    }
  CHECK(flagged == 1);
  CHECK(!check_anti_leibniz(to_algebra(orbits[2].representative, 2, Field::Q())).holds());
}

TEST_CASE("symmetric Yang-Baxter solutions") {
  Algebra a = make_algebra(2, {{1, 1, {0, 1}}}, F2);
  auto sols = find_symmetric_solutions(a);
  Matrix zero(2, 2, F2), ex = make_tensor2(2, {{1, 2, 1}, {2, 1, 1}}, F2);
  bool has_zero = false, has_ex = false;
  for (const auto& s : sols) {
    has_zero |= s.r == zero;
    has_ex |= s.r == ex;
    CHECK(s.r == s.r.transpose());
    CHECK(ybe_bracket(a, s.r).is_zero());
    CHECK(s.certificate.holds());
  }
  CHECK(has_zero);
  CHECK(has_ex);
  // Closed under the stabilizer of A in GL(2, F_2).
  Residues ca = to_residues(a);
  for (const auto& g : general_linear(2, 2)) {
    if (act(g, ca, 2, 2) != ca) continue;
    Matrix gm(2, 2, F2);
    for (std::size_t i = 0; i < 4; ++i) gm(i / 2, i % 2) = Scalar(F2, static_cast<long>(g[i]));
    Matrix gi = solve_invert(gm);
    for (const auto& s : sols) {
      Matrix moved = gi * s.r * gi.transpose();
      bool found = false;
      for (const auto& t : sols) found |= t.r == moved;
      CHECK(found);
    }
  }
  CHECK_THROWS_AS(find_symmetric_solutions(make_algebra(2, {{1, 1, {0, 1}}}, F3), 10), BudgetExceeded);
}
