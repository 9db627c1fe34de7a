#pragma once

#include <string>

#include "gwc/grid.hpp"

namespace gwc {

/// One inequality check lhs <= rhs with its parameters.
/// pass is true iff lhs <= rhs * (1 + 1e-9).
struct EstimateReport {
  std::size_t n = 1;
  int m = 0;
  std::string p = "1";
  std::string q = "1";
  std::string r = "1";
  Complex omega{1, 0};
  double theta = 0;
  std::string test_function;
  double lhs = 0;
  double rhs = 0;
  double constant = 0;
  double margin = 0;
  bool pass = false;
};

inline constexpr double kRoundingSlack = 1e-9;

/// Fills margin and pass from lhs and rhs.
inline void finalize(EstimateReport& r) {
  r.margin = r.rhs - r.lhs;
  r.pass = r.lhs <= r.rhs * (1 + kRoundingSlack);
}

}  // namespace gwc
