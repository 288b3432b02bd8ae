#pragma once

// Pass/fail trees produced by the verification layer.

#include "quotient_forge/cyclic_arith.hpp"

#include <string>
#include <vector>

namespace qforge {

struct Claim {
  std::string name;
  std::string statement;
  bool passed = false;
  bool vacuous = false;
  std::string detail;
  std::vector<Claim> children;

  friend auto operator==(const Claim &, const Claim &) -> bool = default;
};

struct Report {
  GroupType group;
  std::vector<Claim> claims;

  [[nodiscard]] auto passed() const -> bool {
    for (const auto &c : claims)
      if (!c.passed) return false;
    return true;
  }
  friend auto operator==(const Report &, const Report &) -> bool = default;
};

} // namespace qforge
