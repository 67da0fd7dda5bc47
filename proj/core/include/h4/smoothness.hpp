#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h4/homform.hpp"

namespace h4 {

enum class SmoothStatus { smooth, singular, indeterminate };

std::string to_string(SmoothStatus s);

/// One affine chart examined during a smoothness attempt.
struct ChartTrail {
  int attempt = 0;
  int chart_var = 0;       ///< variable set to 1
  int eliminated_var = 0;  ///< variable removed by resultants
  std::vector<int> resultant_degrees;  ///< -1 marks an identically zero resultant
  int gcd_degree = -1;
  std::string outcome;  ///< "clear", "zero-resultant", "common-root", "singular-point"
};

struct SmoothnessResult {
  SmoothStatus status = SmoothStatus::indeterminate;
  bool squarefree = false;
  int attempts = 0;
  std::vector<ChartTrail> trail;
  /// Coordinate change of the successful attempt (identity on the first).
  std::vector<std::vector<long>> coordinate_change;
  std::optional<PlanePoint> singular_point;
  std::string note;

  bool smooth() const { return status == SmoothStatus::smooth; }
};

/// Certifies that the plane curve f = 0 has no singular point over the
/// algebraic closure.
///
/// 1. squarefreeness: gcd of f with its partial derivatives;
/// 2. in each affine chart, resultants eliminate one variable from pairs of
///    partial derivatives and a univariate gcd tests for a shared root;
/// 3. inconclusive charts trigger a seeded random linear change of
///    coordinates, up to `max_retries` times.
///
/// `smooth` is only returned when every chart is clear, and `singular` only
/// with a verified singular point or a repeated component. Anything else is
/// `indeterminate`.
SmoothnessResult plane_curve_is_smooth(const HomForm& f, int max_retries = 8, std::uint64_t seed = 0x5eed);

}  // namespace h4
