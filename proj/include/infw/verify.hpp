#pragma once

// Identity suites shared by `infw verify` and the tests. Each suite returns
// one CheckResult per identity and size it looked at.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "infw/perm.hpp"

namespace infw {

struct CheckResult {
  std::string suite;
  std::string name;
  int n = 0;
  bool ok = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();
int suite_default_n(const std::string& suite);

// `n` overrides the suite's default size. Unknown names throw invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite, std::optional<int> n = std::nullopt);

// 20 points off [a, b] on a ring around the support.
std::vector<std::complex<double>> off_cut_points(double c, int count = 20);
// Points with |z| <= 0.2 (1 + sqrt c)^-1, away from 0.
std::vector<std::complex<double>> small_points(double c, int count = 20);

}  // namespace infw
