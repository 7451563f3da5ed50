#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace msfuzzy {

/// Outcome of a single named check. `witness` lists the element names (or
/// rendered values) that violate the check; empty on success.
struct CheckResult {
  std::string id;
  bool passed = true;
  std::string detail;
  std::vector<std::string> witness;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  const CheckResult* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }

  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace msfuzzy
