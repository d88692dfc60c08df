#pragma once

/**
 * @file suite.hpp
 * @brief End-to-end verification suite: rebuilds every named rotation and
 *        group, runs the fuzzed identities and the corpus property scans,
 *        and records one exact pass/fail verdict per assertion.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace rotgroup {

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

struct CheckRecord {
  std::string id;
  std::string anchor;  // the statement the check witnesses
  Verdict verdict = Verdict::Pass;
  std::vector<std::pair<std::string, std::string>> values;  // exact values, scalar text form
};

struct SuiteOptions {
  std::uint64_t seed = 20060101;
  bool rational_only = false;
  std::size_t fuzz_pairs = 1000;
  std::size_t involution_pairs = 200;
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<CheckRecord> checks;

  std::size_t count(Verdict v) const;
  bool all_passed() const { return count(Verdict::Fail) == 0; }
  const CheckRecord* find(const std::string& id) const;
};

SuiteReport run_verification_suite(const SuiteOptions& options);

inline constexpr int kReportSchemaVersion = 1;

/// Structured report: schema version, options, edge list, one record per check, totals.
nlohmann::ordered_json report_to_json(const SuiteReport& report);

/// One line per check plus a totals line.
std::string report_summary(const SuiteReport& report);

}  // namespace rotgroup
