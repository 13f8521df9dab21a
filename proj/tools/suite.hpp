#pragma once

// The reproduction suite: eleven end-to-end checks with pinned time budgets,
// shared by `preproj reproduce-paper` and the acceptance test binary.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace preproj::suite {

enum class Status { Pass, Fail, Skipped };

struct CheckResult {
  int id = 0;
  std::string tag;
  std::string title;
  Status status = Status::Skipped;
  std::vector<std::string> details;
  double seconds = 0;
  double budget = 0;
};

struct Check {
  int id;
  std::string tag;
  std::string title;
  double budget;  // seconds
};

const std::vector<Check>& checks();

struct Options {
  std::set<std::string> only;          // ids ("9") or tags ("iso"); empty runs everything
  std::optional<std::uint32_t> prime;  // extra modular pass for the isomorphism check
};

/// Runs the selected checks in order. Checks not selected are reported as
/// skipped, so every check appears exactly once.
std::vector<CheckResult> run(const Options& opts, const std::function<void(const CheckResult&)>& on_result = {});

const char* status_name(Status s);

}  // namespace preproj::suite
