#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace parb {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

using CheckReport = std::vector<CheckResult>;

inline bool all_pass(const CheckReport& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.pass; });
}

inline const CheckResult* find_check(const CheckReport& r, const std::string& id) {
  for (const CheckResult& c : r)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace parb
