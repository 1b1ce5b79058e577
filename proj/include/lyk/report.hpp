#pragma once

#include <string>
#include <vector>

namespace lyk {

// One violated identity, with the basis tuple it failed on and the nonzero
// residual. Checkers collect these instead of returning bare booleans so the
// library doubles as a counterexample finder.
struct Violation {
  std::string equation;  // which identity failed
  std::string witness;   // basis tuple, 1-based indices
  std::string residual;  // the nonzero value/vector, printed

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  void add(std::string equation, std::string witness, std::string residual) {
    violations.push_back(
        {std::move(equation), std::move(witness), std::move(residual)});
  }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
  std::string to_text() const;
};

}  // namespace lyk
