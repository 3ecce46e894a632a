#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gstrata {

struct SuiteReport {
  std::string suite;
  bool pass = true;
  int cases = 0;
  std::vector<std::string> failures;

  void fail(std::string msg);
  nlohmann::json to_json() const;
};

// Reproduction of the printed presentation for the 2x2 square: the eight
// propagation generators and the four collision generators must match the
// reference polynomials symbolically.
SuiteReport suite_golden();

// Catalog equality of the full and reduced relation ideals, n = 2 up to
// max_r (capped at 6) and, when max_n >= 3, n = 3 up to min(max_r, 5).
SuiteReport suite_fewer(int max_n, int max_r);

// Chart round trips on seeded random configurations: coefficients computed
// in one chart and pushed through the gluing substitution agree with the
// coefficients computed directly in the other chart.
SuiteReport suite_gluing(int count, unsigned long seed);

// Weighted homogeneity of every deformed stratum generator over the n = 2
// catalog up to max_r, plus the t = 1 and t = 0 specializations.
SuiteReport suite_deform(int max_r);

// Random configurations certify against exactly one stratum; grid
// realizations of each catalog set recover that set.
SuiteReport suite_strata(int count, int max_r, unsigned long seed);

// Dispatch by suite name (golden, fewer, gluing, deform, strata); throws
// std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, int max_n, int max_r,
                      unsigned long seed);

}  // namespace gstrata
