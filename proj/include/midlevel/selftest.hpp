#pragma once

#include <string>
#include <vector>

#include "midlevel/lexical.hpp"

namespace midlevel {

struct SelfTestResult {
  std::string group;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Golden reproduction checks for k <= 3, grouped by topic. `rule` lets the
/// caller swap the diagonal criterion to watch the colour goldens break.
std::vector<SelfTestResult> run_selftest(DiagonalRule rule = DiagonalRule::kOnOrBelow);

}  // namespace midlevel
