#pragma once

#include <map>
#include <string>
#include <vector>

namespace kmt {

/// One named verification: how many cases were tried and how many failed,
/// with the first failing case described in `witness`.
struct Check {
  std::string name;
  long long tried = 0;
  long long failed = 0;
  std::string witness;

  void record(bool ok, const std::string& what = {}) {
    ++tried;
    if (ok) return;
    if (failed++ == 0) witness = what;
  }
  bool passed() const noexcept { return tried > 0 && failed == 0; }
};

inline Check make_check(std::string name) { return Check{std::move(name), 0, 0, {}}; }

struct Report {
  std::vector<Check> checks;
  std::map<std::string, std::string> notes;  ///< informational values, not pass/fail

  bool passed() const {
    for (const Check& c : checks)
      if (!c.passed()) return false;
    return !checks.empty();
  }
};

}  // namespace kmt
