#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "lyk/crossed.hpp"

namespace lyk {

// Malformed file / bad schema / unparseable rational. CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A name that does not resolve to a declared object. CLI exit code 2.
struct ReferenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownTaskError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An action entry: (rho, mu) of algebras[source] on the carrier of
// algebras[target].
struct NamedAction {
  std::string source;
  std::string target;
  Representation rep;

  friend bool operator==(const NamedAction&, const NamedAction&) = default;
};

// A named matrix, rows indexed by the codomain basis, columns by the domain.
struct NamedMap {
  std::string domain;
  std::string codomain;
  Matrix matrix;

  friend bool operator==(const NamedMap&, const NamedMap&) = default;
};

// A stored invocation: which operation to run and its parameters (object
// names, degree/order numbers, inline rational arrays).
struct TaskSpec {
  std::string op;
  nlohmann::json params;

  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

struct ProblemFile {
  std::map<std::string, LYAlgebra> algebras;
  std::map<std::string, NamedAction> actions;
  std::map<std::string, NamedMap> maps;
  std::map<std::string, TaskSpec> tasks;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

// Parse and fully validate a problem file. Structure constants are declared
// once per unordered pair (i < j) and mirrored; declaring both orders is an
// error unless they are consistent. All indices in the file are 1-based.
ProblemFile parse_problem(const std::string& path);
ProblemFile parse_problem_text(const std::string& text);

// Deterministic JSON rendering; parse_problem_text(serialize_problem(pf))
// reproduces pf exactly.
std::string serialize_problem(const ProblemFile& pf);

struct TaskResult {
  std::string text;
  int exit_code = 0;  // 0 pass, 1 mathematical violation, 2 usage error
};

// Look up task_name among pf.tasks (falling back to a bare operation name),
// apply the overrides on top of the stored parameters, and dispatch. Throws
// UnknownTaskError / ReferenceError / ParseError for exit-code-2 conditions;
// mathematical violations come back as exit_code 1 with a report text.
TaskResult run_task(const ProblemFile& pf, const std::string& task_name,
                    const nlohmann::json& overrides = nlohmann::json::object());

// The bundled demonstration suite: the 4-dimensional example algebra, its
// adjoint action, a crossed homomorphism, and one task per operation.
ProblemFile bundled_suite();

}  // namespace lyk
