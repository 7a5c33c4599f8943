#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hhodge::cli {

enum class VerifyLevel { Quick, Full };

struct CheckResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string got;
  bool equal = false;
  double seconds = 0;
  double limit_seconds = 0;

  bool passed() const { return equal && seconds < limit_seconds; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool all_passed() const;
};

/// Quick runs the published worked values; full adds the oracle sweeps.
/// With a cache directory, the character tables used by the sweeps are read
/// from (or written to) disk first.
VerifyReport verify_suite(VerifyLevel level, const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

/// Check ids included at a level, ascending.
std::vector<int> verify_ids(VerifyLevel level);

}  // namespace hhodge::cli
