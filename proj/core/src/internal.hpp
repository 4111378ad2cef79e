#pragma once

#include <cstdio>
#include <numbers>
#include <string>

namespace mirrorborn::internal {

inline constexpr double kPi = std::numbers::pi;

/// Compensated accumulator; keeps long quadrature sums at O(eps) error
/// independent of length.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

/// 17 significant digits, enough to round-trip any double; nan spelled out.
inline std::string fmt17(double v) {
  if (v != v) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

}  // namespace mirrorborn::internal
