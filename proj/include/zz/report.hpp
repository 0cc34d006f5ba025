#pragma once

#include <string>
#include <vector>

namespace zz {

struct CheckItem {
  std::string relation;
  std::string object;
  bool ok = false;
  std::string witness;
};

struct Report {
  std::vector<CheckItem> items;
  void add(std::string relation, std::string object, bool ok, std::string witness = "") {
    items.push_back({std::move(relation), std::move(object), ok, std::move(witness)});
  }
  bool all_ok() const {
    for (auto& i : items)
      if (!i.ok) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (auto& i : items)
      if (!i.ok) ++n;
    return n;
  }
};

} // namespace zz
