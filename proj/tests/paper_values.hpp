// Values transcribed from the published proof, used as fixed expectations.
#pragma once

#include "soscert/exactla.hpp"

#include <string>
#include <vector>

namespace testing::paper {

/// The 10x10 block on x1^2, x1x2, x1x3, x1x4, x2^2, x2x3, x2x4, x3^2, x3x4, x4^2.
inline soscert::RationalMatrix matrix_a() {
  return {
      {6, -1, -1, 1, 6, -1, 1, 6, 1, 6},
      {-1, 6, -1, 1, -1, -1, 1, -1, 1, -1},
      {-1, -1, 6, 1, -1, -1, 1, -1, 1, -1},
      {1, 1, 1, 6, 1, 1, -1, 1, -1, 1},
      {6, -1, -1, 1, 6, -1, 1, 6, 1, 6},
      {-1, -1, -1, 1, -1, 6, 1, -1, 1, -1},
      {1, 1, 1, -1, 1, 1, 6, 1, -1, 1},
      {6, -1, -1, 1, 6, -1, 1, 6, 1, 6},
      {1, 1, 1, -1, 1, 1, -1, 1, 6, 1},
      {6, -1, -1, 1, 6, -1, 1, 6, 1, 6},
  };
}

inline const std::vector<std::string>& basis_labels() {
  static const std::vector<std::string> labels{
      "x1^2",  "x1*x2", "x1*x3", "x1*x4", "x2^2",  "x2*x3", "x2*x4", "x3^2",
      "x3*x4", "x4^2",  "x1*x5", "x2*x5", "x3*x5", "x4*x5", "x5^2"};
  return labels;
}

}  // namespace testing::paper
