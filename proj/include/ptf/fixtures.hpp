#pragma once

// Frozen reference values. Each fixture records the value, the computation
// that produced it and how it is re-checked.

#include <string>
#include <vector>

#include "ptf/report_json.hpp"

namespace ptf {

struct FixturesMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FixtureResult {
  std::string id;
  std::string status;  // "verified", "consistency-verified", "mismatch"
  std::string expected;
  std::string actual;
  std::string oracle;
  std::string detail;
};

struct FixtureReport {
  std::string file;
  std::vector<FixtureResult> results;

  bool ok() const;
};

/// $PTF_FIXTURES if set, else the fixtures file of the source tree.
std::string default_fixtures_path();

/// Recomputes every fixture from scratch.
Json freeze_fixtures(unsigned threads = 1);

FixtureReport verify_fixtures(const Json& doc, unsigned threads = 1);
/// Throws FixturesMissing when the file cannot be read.
FixtureReport verify_fixtures_file(const std::string& path, unsigned threads = 1);

Json to_json(const FixtureReport& r);

}  // namespace ptf
