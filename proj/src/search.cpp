#include "aleib/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "aleib/bialgebra.hpp"
#include "aleib/yangbaxter.hpp"

namespace aleib {

namespace {

std::uint64_t power_or_cap(std::uint64_t base, std::size_t exp) {
  const std::uint64_t cap = ~std::uint64_t{0} / base;
  std::uint64_t r = 1;
  for (std::size_t e = 0; e < exp; ++e) {
    if (r > cap) return ~std::uint64_t{0};
    r *= base;
  }
  return r;
}

void require_prime_field(Field f) {
  if (f.rational()) throw BadParameter("search needs a finite field");
}

void require_budget(std::uint64_t need, std::uint64_t budget, const char* what) {
  if (need > budget)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(need) + " candidates exceed the budget of " +
                         std::to_string(budget));
}

// a(bc) + (ab)c + b(ac) mod p on raw constants, stopping at the first nonzero entry.
bool fast_anti_leibniz(const std::uint32_t* c, std::size_t n, std::uint32_t p) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t out = 0; out < n; ++out) {
          std::uint64_t s = 0;
          for (std::size_t m = 0; m < n; ++m)
            s += std::uint64_t{at(b, d, m)} * at(a, m, out) + std::uint64_t{at(a, b, m)} * at(m, d, out) +
                 std::uint64_t{at(a, d, m)} * at(b, m, out);
          if (s % p) return false;
        }
  return true;
}

std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
  std::uint64_t r = 1, b = x % p;
  for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

// Inverse mod p by Gauss-Jordan; empty when singular.
Residues inverse_mod(const Residues& g, std::size_t n, std::uint32_t p) {
  Residues a = g, inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return {};
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a[piv * n + k], a[col * n + k]);
      std::swap(inv[piv * n + k], inv[col * n + k]);
    }
    const std::uint64_t s = inv_mod(a[col * n + col], p);
    for (std::size_t k = 0; k < n; ++k) {
      a[col * n + k] = static_cast<std::uint32_t>(a[col * n + k] * s % p);
      inv[col * n + k] = static_cast<std::uint32_t>(inv[col * n + k] * s % p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const std::uint64_t m = p - a[r * n + col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r * n + k] = static_cast<std::uint32_t>((a[r * n + k] + m * a[col * n + k]) % p);
        inv[r * n + k] = static_cast<std::uint32_t>((inv[r * n + k] + m * inv[col * n + k]) % p);
      }
    }
  }
  return inv;
}

bool commutative_residues(const Residues& c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c[(i * n + j) * n + k] != c[(j * n + i) * n + k]) return false;
  return true;
}

} // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ALEIB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

Algebra to_algebra(const Residues& c, std::size_t dim, Field f) {
  Tensor3 t = Tensor3::cube(dim, f);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) t(i, j, k) = Scalar(f, static_cast<long>(c[(i * dim + j) * dim + k]));
  return Algebra(std::move(t));
}

Residues to_residues(const Algebra& a) {
  require_prime_field(a.field());
  Residues c;
  for (const Scalar& s : a.sc().data()) c.push_back(s.residue());
  return c;
}

std::uint64_t candidate_count(const SearchSpec& s) {
  require_prime_field(s.field);
  const std::size_t cells = s.dim * s.dim * s.dim;
  if (!s.mask.empty() && s.mask.size() != cells) throw BadParameter("mask size must be dim^3");
  std::size_t free = s.mask.empty() ? cells : static_cast<std::size_t>(std::count(s.mask.begin(), s.mask.end(), true));
  return power_or_cap(s.field.p, free);
}

std::vector<Residues> enumerate_structures(const SearchSpec& s) {
  if (s.dim == 0 || s.dim > 3) throw BadParameter("search dimension must be 1, 2 or 3");
  const std::uint64_t total = candidate_count(s);
  require_budget(total, s.budget, "structure search");
  const std::size_t cells = s.dim * s.dim * s.dim;
  const std::uint32_t p = s.field.p;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < cells; ++i)
    if (s.mask.empty() || s.mask[i]) free.push_back(i);
  // Odometer over the free cells with the last cell fastest, which is lexicographic order.
  Residues c(cells, 0);
  std::vector<Residues> out;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (fast_anti_leibniz(c.data(), s.dim, p)) out.push_back(c);
    for (std::size_t f = free.size(); f-- > 0;) {
      if (++c[free[f]] < p) break;
      c[free[f]] = 0;
    }
  }
  return out;
}

bool second_pass_anti_leibniz(const Residues& c, std::size_t dim, Field f) {
  return check_anti_leibniz(to_algebra(c, dim, f)).holds();
}

Residues act(const Residues& g, const Residues& c, std::size_t n, std::uint32_t p) {
  Residues gi = inverse_mod(g, n, p);
  if (gi.empty()) throw NotInvertible(0);
  // c'(i,j,l) = sum gi(l,k) g(a,i) g(b,j) c(a,b,k)
  Residues out(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint64_t> v(n, 0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const std::uint64_t w = std::uint64_t{g[a * n + i]} * g[b * n + j] % p;
          if (!w) continue;
          for (std::size_t k = 0; k < n; ++k) v[k] = (v[k] + w * c[(a * n + b) * n + k]) % p;
        }
      for (std::size_t l = 0; l < n; ++l) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += std::uint64_t{gi[l * n + k]} * v[k];
        out[(i * n + j) * n + l] = static_cast<std::uint32_t>(s % p);
      }
    }
  return out;
}

std::vector<Residues> general_linear(std::size_t n, std::uint32_t p, std::uint64_t budget) {
  const std::uint64_t total = power_or_cap(p, n * n);
  require_budget(total, budget, "GL enumeration");
  std::vector<Residues> out;
  Residues g(n * n, 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    if (!inverse_mod(g, n, p).empty()) out.push_back(g);
    for (std::size_t f = g.size(); f-- > 0;) {
      if (++g[f] < p) break;
      g[f] = 0;
    }
  }
  return out;
}

std::vector<Orbit> orbit_classify(const std::vector<Residues>& list, std::size_t dim, Field f, std::uint64_t budget) {
  require_prime_field(f);
  std::vector<Residues> group = general_linear(dim, f.p, budget);
  const std::uint64_t work = static_cast<std::uint64_t>(group.size()) * list.size();
  require_budget(work, budget, "orbit classification");
  std::map<Residues, Orbit> orbits;
  for (const Residues& c : list) {
    Residues least = c;
    for (const Residues& g : group) least = std::min(least, act(g, c, dim, f.p));
    Orbit& o = orbits[least];
    o.representative = least;
    o.commutative = commutative_residues(least, dim);
    ++o.size;
  }
  std::vector<Orbit> out;
  for (auto& [key, o] : orbits) out.push_back(std::move(o));
  return out;
}

Report commutativity_report(const std::vector<Orbit>& orbits, std::size_t dim, Field f) {
  Report rep;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    Clause& c = rep.add("orbit " + std::to_string(i + 1) + " commutative",
                        "two-dimensional anti-Leibniz algebras are commutative (characteristic zero)",
                        orbits[i].commutative);
    c.advisory = true;
    c.detail = std::to_string(orbits[i].size) + " members over " + f.name() + "; finite-field extrapolation";
    if (!orbits[i].commutative) {
      c.detail += "; differs from the characteristic-zero classification";
      const Algebra a = to_algebra(orbits[i].representative, dim, f);
      c.witness = check_commutative(a).first_failure()->witness;
    }
  }
  return rep;
}

std::vector<SymmetricSolution> find_symmetric_solutions(const Algebra& a, std::uint64_t budget) {
  const Field f = a.field();
  require_prime_field(f);
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  const std::uint64_t total = power_or_cap(f.p, cells.size());
  require_budget(total, budget, "symmetric Yang-Baxter search");
  std::vector<SymmetricSolution> out;
  std::vector<std::uint32_t> digits(cells.size(), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    Matrix r(n, n, f);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      r(cells[c].first, cells[c].second) = Scalar(f, static_cast<long>(digits[c]));
      r(cells[c].second, cells[c].first) = Scalar(f, static_cast<long>(digits[c]));
    }
    if (ybe_bracket(a, r).is_zero()) {
      Bialgebra b{a, delta_r(a, r)};
      Report cert = check_coalgebra(b.coa);
      if (cert.holds()) cert.merge(bialgebra_identities(b.alg, b.coa));
      out.push_back({std::move(r), std::move(cert)});
    }
    for (std::size_t c = digits.size(); c-- > 0;) {
      if (++digits[c] < f.p) break;
      digits[c] = 0;
    }
  }
  return out;
}

} // namespace aleib
