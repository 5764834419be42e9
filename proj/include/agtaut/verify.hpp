#pragma once

// The acceptance suites.  Each suite stops at its first violated identity
// and reports both sides exactly.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace agtaut {

struct SuiteResult {
  unsigned id;
  std::string name;
  bool pass;
  std::string detail;  // case count on success, the violated identity otherwise
};

struct Suite {
  unsigned id;
  std::string name;
  std::string title;
  std::function<SuiteResult()> run;
};

inline constexpr std::uint32_t kSuiteSeed = 20240917;

std::vector<Suite> const& acceptance_suites();
// Accepts the numeric id or the name; throws std::invalid_argument otherwise.
Suite const& find_suite(std::string_view key);

}  // namespace agtaut
