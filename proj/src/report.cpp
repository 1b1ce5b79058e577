#include "lyk/report.hpp"

namespace lyk {

std::string Report::to_text() const {
  if (violations.empty()) return "ok: no violations\n";
  std::string out;
  for (const Violation& v : violations) {
    out += "violated: " + v.equation + " at " + v.witness +
           " residual " + v.residual + "\n";
  }
  return out;
}

}  // namespace lyk
