#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hdom {

struct SuiteOptions {
  std::uint64_t seed = 24001;
  std::uint64_t cap = 100'000'000;  // orientation-enumeration refusal threshold
  unsigned threads = 1;
  unsigned samples = 0;  // 0: suite default
  unsigned n = 0, r = 0;  // instance override where a suite takes one
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what);
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs one named invariant suite ("all" runs every suite in order).
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace hdom
