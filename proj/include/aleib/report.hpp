#pragma once
#include <cstddef>
#include <string>
#include <vector>

namespace aleib {

struct Clause {
  std::string name;
  // The identity being tested, written out so a reader can find it in the theory.
  std::string anchor;
  bool holds = true;
  // 1-based basis indices of the first failing tuple, empty when the clause holds.
  std::vector<std::size_t> witness;
  std::string detail;
  // Recorded for the reader but not part of the verdict.
  bool advisory = false;
};

struct Report {
  std::vector<Clause> clauses;

  bool holds() const {
    for (const auto& c : clauses)
      if (!c.holds && !c.advisory) return false;
    return true;
  }
  explicit operator bool() const { return holds(); }

  const Clause* first_failure() const {
    for (const auto& c : clauses)
      if (!c.holds && !c.advisory) return &c;
    return nullptr;
  }
  const Clause* find(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }
  Clause& add(std::string name, std::string anchor, bool holds = true) {
    clauses.push_back({std::move(name), std::move(anchor), holds, {}, {}, false});
    return clauses.back();
  }
  void merge(const Report& o) { clauses.insert(clauses.end(), o.clauses.begin(), o.clauses.end()); }
};

} // namespace aleib
