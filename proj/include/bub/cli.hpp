#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bub/bounds.hpp"
#include "bub/error.hpp"

namespace bub::cli {

/// Expression text together with where it starts in the problem file.
struct Located {
  std::string text;
  SourcePos pos;
};

struct BundleDecl {
  std::string name;
  int dimension = 0;
  std::string ring;
  std::vector<Located> classes;  // w_1.. in order; missing ones are 0
  int line = 0;
};

struct ScenarioDecl {
  std::string kind;  // stiefel | main | check-ms | check-mpss | check-two | check-u2 | fiber-k
  std::map<std::string, Located> values;
  int line = 0;
};

struct Problem {
  Mode mode = Mode::Real;
  std::optional<std::uint32_t> prime;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, BundleDecl> bundles;
  ScenarioDecl scenario;
  bool leray_hirsch = false;
};

/// Parses a problem file. Errors carry line and column: SyntaxError,
/// UndeclaredName, and the ring-construction kinds.
Problem parse_problem(std::string_view text);

/// Evaluates the scenario. Hypothesis failures are recorded in the report;
/// malformed data (bad expressions, degree mismatches) throws Error.
BoundReport run(const Problem& problem);

std::string render_text(const BoundReport& report);
/// JSON document with a `format_version` field.
std::string render_structured(const BoundReport& report);
/// Inverse of render_structured. Errors: SyntaxError.
BoundReport report_from_structured(std::string_view text);

inline constexpr int kExitBound = 0;
inline constexpr int kExitHypotheses = 1;
inline constexpr int kExitInput = 2;

/// 0 when the report carries no failure, 1 otherwise.
int exit_code(const BoundReport& report);

}  // namespace bub::cli
