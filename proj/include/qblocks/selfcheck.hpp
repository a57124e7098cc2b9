#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qblocks {

struct SuiteResult {
  std::string name;
  long passed = 0;
  long failed = 0;
  std::vector<std::string> failures;  // first few messages
};

struct SelfcheckOptions {
  std::uint64_t seed = 1;
  long cases = 50;
  /// Test hook: build the zigzag algebra with x_i y_i rewritten to z_i.
  bool flip_zigzag_relation = false;
};

struct SelfcheckReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
  std::string str() const;
};

/// Runs every oracle suite with `cases` random cases each. Each suite draws
/// from its own generator seeded from (seed, suite index), so the report
/// does not depend on scheduling.
SelfcheckReport selfcheck(const SelfcheckOptions& options);

std::vector<std::string> selfcheck_suite_names();

}  // namespace qblocks
