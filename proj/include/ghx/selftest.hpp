#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace ghx {

/// One pinned regression case; run() throws on failure.
struct SelfTestCase {
  std::string name;
  std::function<void()> run;
};

/// The full registry of pinned examples, in a fixed deterministic order.
const std::vector<SelfTestCase>& selftest_cases();

/// Runs (or lists) every case, one line each; returns the failure count.
int run_selftests(std::ostream& out, bool list_only = false);

}  // namespace ghx
