#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace uqosp {

/// One named pass/fail line of a verification.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool pass() const {
    return failures() == 0;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& it : items)
      if (!it.pass) ++n;
    return n;
  }
  void append(const CheckReport& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }
};

}  // namespace uqosp
