#pragma once

#include <string>
#include <vector>

namespace branchlaw {

/// One named verification outcome.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckList {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const CheckList& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

}  // namespace branchlaw
