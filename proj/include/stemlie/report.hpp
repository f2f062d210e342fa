#pragma once

#include <string>
#include <vector>

namespace stemlie {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail; // counterexample or context on failure, may be empty
};

struct Report {
  std::vector<Check> checks;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
  }
};

} // namespace stemlie
