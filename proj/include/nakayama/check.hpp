#pragma once

#include <string>
#include <vector>

namespace nakayama {

// One verified identity. lhs/rhs/witness are filled for failures and, where
// cheap, for passes.
struct Check {
  std::string identity;
  bool pass = false;
  std::string lhs, rhs, witness;
};

struct CheckList {
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& identity) const {
    for (const auto& c : checks)
      if (c.identity == identity) return &c;
    return nullptr;
  }
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const CheckList& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

}  // namespace nakayama
