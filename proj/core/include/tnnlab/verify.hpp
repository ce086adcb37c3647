#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tnnlab/rootdata.hpp"

namespace tnnlab {

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
  std::string anchor;
};

struct VerificationReport {
  std::string suite;
  std::string type_name;
  std::uint64_t seed = 0;
  int samples = 0;
  int cases = 0;
  std::vector<Failure> failures;
  std::vector<std::string> anchors;
  std::map<std::string, std::string> notes;

  bool passed() const { return failures.empty(); }
  /// Deterministic JSON (sorted keys, two-space indent).
  std::string to_json() const;
  /// One line per note and per failure, for terminals.
  std::string to_text() const;
};

struct SuiteOptions {
  std::string type = "A2";
  std::uint64_t seed = 0;
  std::optional<int> samples;        // suite-specific default when unset
  std::optional<RatVector> lambda;   // polytope suites; rho when unset
  std::vector<CartanMatrix> extra_types;
  int dimension_cap = 400;
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();
/// Claim checked by a suite, printed in every report.
const std::string& suite_anchor(const std::string& suite);

/// Throws std::invalid_argument for an unknown suite or type, or a suite that does not apply to the
/// type (the Delta-inverse suite needs Dynkin components of rank <= 2).
VerificationReport run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace tnnlab
