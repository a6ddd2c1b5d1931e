#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace valext {

using Json = nlohmann::json;

/// One problem for valcli: a valuation descriptor, defining polynomials and
/// options.
struct ProblemSpec {
  std::string command = "extend";  // extend | galois | classify
  std::string valuation;
  std::vector<std::string> polys;
  long precision = 0;
  std::uint64_t seed = 1;
  int max_closure = 24;
  std::size_t w = 0;  // classify: which extension of v to L
  std::string name;
};

Json spec_to_json(const ProblemSpec& s);
ProblemSpec spec_from_json(const Json& j);

/// Run a problem and build its report. Throws ParseError, DomainError or
/// ResourceError.
Json run_problem(const ProblemSpec& spec, bool parallel = true);

/// Human-readable rendering of a report; carries the same data as the JSON.
std::string render_text(const Json& report);

/// Number of failed checks in a report's verification section.
std::size_t failed_checks(const Json& report);

Json rational_json(long num, long den);

struct VerifyOutcome {
  Json report;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  int exit_code = 0;  // 0 pass, 1 verification failure
};

/// Run every corpus entry, compare it with its expected block, and collect
/// the invariant checks of every report. parallel dispatches entries across
/// threads; the result does not depend on it.
VerifyOutcome verify_corpus(const Json& corpus, bool parallel = true);

/// The builtin corpus, also installed as corpus/builtin.json.
const std::string& builtin_corpus_text();

std::string render_verify_text(const VerifyOutcome& v);

}  // namespace valext
