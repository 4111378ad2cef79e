#pragma once

#include <cstdint>
#include <vector>

namespace mirrorborn {

/// Pearson statistic sum_k (obs_k - n p_k)^2 / (n p_k). Bins with p_k = 0
/// must have zero counts.
double chi_square_statistic(const std::vector<std::int64_t>& counts,
                            const std::vector<double>& probs);

/// CDF of the chi-square distribution with dof degrees of freedom
/// (regularized lower incomplete gamma).
double chi_square_cdf(double x, int dof);

/// Inverse of chi_square_cdf in x, by bisection.
double chi_square_quantile(double p, int dof);

/// Half L1 distance between two distributions of equal length.
double total_variation(const std::vector<double>& a,
                       const std::vector<double>& b);

}  // namespace mirrorborn
