// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

namespace tmt {

// Named pass/fail items collected by the verification operations.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    items.push_back(CheckItem{name, pass, detail});
  }
  bool all() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  bool has(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return true;
    return false;
  }
  bool get(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return it.pass;
    return false;
  }
};

}  // namespace tmt
