#pragma once

#include <string>
#include <vector>

namespace abspec {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;  // witness or note, empty when uninteresting
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    items.push_back({std::move(name), ok, std::move(detail)});
  }
};

}  // namespace abspec
