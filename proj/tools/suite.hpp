#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "precond/catalog.hpp"

namespace precond::suite {

struct Criterion {
  int number;
  /// Short key used for filtering, e.g. "sasaki".
  std::string key;
  /// Readable anchor printed in reports.
  std::string anchor;
  double limit_seconds;
};

struct CriterionResult {
  Criterion criterion;
  bool pass = false;
  /// Outcome and timing were both within bounds.
  bool within_time = true;
  std::string detail;
  double seconds = 0;
};

struct EntryResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  /// Runs criteria whose key or anchor contains this text; empty runs all.
  std::string filter;
  /// Catalog used by every criterion; the built-in one when null.
  const std::vector<WitnessEntry>* catalog = nullptr;
  std::uint64_t seed = 1;
  std::uint64_t prob_samples = 1'000'000;
  std::size_t random_frames = 1000;
  std::function<void(const CriterionResult&)> on_result;
};

const std::vector<Criterion>& criteria();

bool matches(const Criterion& criterion, const std::string& filter);

std::vector<CriterionResult> run(const SuiteOptions& options = {});

/// Re-checks every entry's recorded profile and class against the checkers.
std::vector<EntryResult> check_catalog(const std::vector<WitnessEntry>& entries);

/// "[PASS] 05 relframe ... 0.012s (limit 1s) detail"
std::string format_line(const CriterionResult& result);

}  // namespace precond::suite
