#pragma once
#include <cstddef>
#include <cstdint>
#include <vector>

#include "aleib/algebra.hpp"
#include "aleib/report.hpp"

namespace aleib {

// Candidate count ceiling; ALEIB_BUDGET overrides the default of 10^7.
std::uint64_t default_budget();

struct SearchSpec {
  Field field = Field::GF(2);
  std::size_t dim = 2;
  // Entries (i,j,k) at index (i*dim + j)*dim + k that may be nonzero; empty means all.
  std::vector<bool> mask;
  std::uint64_t budget = default_budget();
};

// Structure constants as residues mod p, indexed like the mask.
using Residues = std::vector<std::uint32_t>;

Algebra to_algebra(const Residues& c, std::size_t dim, Field f);
Residues to_residues(const Algebra& a);

// Number of candidates the spec would enumerate.
std::uint64_t candidate_count(const SearchSpec& s);

// Every anti-Leibniz structure admitted by the spec, in lexicographic order of
// the residue vector (entry (0,0,0) most significant).
std::vector<Residues> enumerate_structures(const SearchSpec& s);

// Second checker over the library's scalar arithmetic; shares no code with the enumerator.
bool second_pass_anti_leibniz(const Residues& c, std::size_t dim, Field f);

// Change of basis whose new basis vector i is column i of g (row-major residues).
Residues act(const Residues& g, const Residues& c, std::size_t dim, std::uint32_t p);
// All invertible dim x dim matrices over GF(p), row-major, in lexicographic order.
std::vector<Residues> general_linear(std::size_t dim, std::uint32_t p, std::uint64_t budget = default_budget());

struct Orbit {
  Residues representative;  // lexicographically least member
  std::size_t size = 0;
  bool commutative = false;
};
std::vector<Orbit> orbit_classify(const std::vector<Residues>& list, std::size_t dim, Field f,
                                  std::uint64_t budget = default_budget());
// Clause per orbit representative on commutativity; failures are flagged against
// the characteristic-zero classification, never counted as refutations.
Report commutativity_report(const std::vector<Orbit>& orbits, std::size_t dim, Field f);

struct SymmetricSolution {
  Matrix r;
  Report certificate;  // the triangular bialgebra (A, delta_r)
};
std::vector<SymmetricSolution> find_symmetric_solutions(const Algebra& a, std::uint64_t budget = default_budget());

} // namespace aleib
