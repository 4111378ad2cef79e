#include <mirrorborn/stats.hpp>

#include "internal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mirrorborn {

namespace {

// Regularized lower incomplete gamma P(a, x): series for x < a+1, Lentz
// continued fraction for the complement otherwise.
double gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-16)
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    throw std::runtime_error("gamma_p: series did not converge");
  }
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -double(i) * (double(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16)
      return 1.0 - std::exp(-x + a * std::log(x) - lg) * h;
  }
  throw std::runtime_error("gamma_p: continued fraction did not converge");
}

}  // namespace

double chi_square_statistic(const std::vector<std::int64_t>& counts,
                            const std::vector<double>& probs) {
  if (counts.size() != probs.size() || counts.empty())
    throw std::invalid_argument("chi_square_statistic: counts and probs must match");
  std::int64_t n = 0;
  for (std::int64_t c : counts) {
    if (c < 0)
      throw std::invalid_argument("chi_square_statistic: negative count");
    n += c;
  }
  internal::KahanSum s;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double expect = double(n) * probs[k];
    if (expect <= 0.0) {
      if (counts[k] != 0)
        return std::numeric_limits<double>::infinity();
      continue;
    }
    const double d = double(counts[k]) - expect;
    s.add(d * d / expect);
  }
  return s.sum;
}

double chi_square_cdf(double x, int dof) {
  if (dof < 1)
    throw std::invalid_argument("chi_square_cdf: dof must be >= 1");
  if (x <= 0.0) return 0.0;
  return gamma_p(0.5 * dof, 0.5 * x);
}

double chi_square_quantile(double p, int dof) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("chi_square_quantile: p must be in (0, 1)");
  if (dof < 1)
    throw std::invalid_argument("chi_square_quantile: dof must be >= 1");
  double lo = 0.0;
  double hi = std::max(1.0, dof + 10.0);
  while (chi_square_cdf(hi, dof) < p) hi *= 2.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-13 * std::max(1.0, lo); ++i) {
    const double mid = 0.5 * (lo + hi);
    (chi_square_cdf(mid, dof) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double total_variation(const std::vector<double>& a,
                       const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("total_variation: lengths must match");
  internal::KahanSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add(std::abs(a[i] - b[i]));
  return 0.5 * s.sum;
}

}  // namespace mirrorborn
