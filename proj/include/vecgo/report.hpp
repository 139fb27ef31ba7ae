// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vecgo {

/// One violated identity: which condition, at which arguments, and both sides.
struct Violation {
  std::string condition;
  std::vector<int> tuple;
  std::string lhs, rhs;
};

struct Report {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  std::size_t max_recorded = 64;

  bool ok() const { return violations.empty() && failures == 0; }
  std::size_t failure_count() const { return failures; }

  void check(bool pass, const std::string& condition, std::vector<int> tuple, const std::string& lhs,
             const std::string& rhs) {
    ++checked;
    if (pass) return;
    ++failures;
    if (violations.size() < max_recorded) violations.push_back({condition, std::move(tuple), lhs, rhs});
  }

  void merge(const Report& o) {
    checked += o.checked;
    failures += o.failures;
    for (const auto& v : o.violations)
      if (violations.size() < max_recorded) violations.push_back(v);
  }

 private:
  std::size_t failures = 0;
};

}  // namespace vecgo
