#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace mirrorborn {

/// Two independently thrown balls over `bins` labeled bins; a trial is a
/// coincidence when both land in the same bin. The joint hit distribution is
/// the product p1[b] * p2[b], the classical analogue of a product of two
/// amplitude factors.
struct TwoBallConfig {
  int bins = 0;
  std::vector<double> p1;
  std::vector<double> p2;
  std::int64_t n = 0;
  std::uint64_t seed = 1;
};

/// Exact coincidence rate sum_b p1[b] p2[b] and, when that rate is positive,
/// the conditional bin distribution given a coincidence.
struct ProductDistribution {
  double rate = 0.0;
  std::optional<std::vector<double>> conditional;
};

ProductDistribution product_distribution(const std::vector<double>& p1,
                                         const std::vector<double>& p2);

struct TwoBallResult {
  std::int64_t trials = 0;
  std::vector<std::int64_t> coincidence_counts;  // per bin
  std::int64_t coincidences = 0;
  double empirical_rate = 0.0;
  std::optional<std::vector<double>> empirical_conditional;
  double exact_rate = 0.0;
  std::optional<std::vector<double>> exact_conditional;
  /// Total variation distance between the two conditionals; empty when either
  /// side is undefined (zero coincidences observed or exact rate zero).
  std::optional<double> tv_distance;
};

/// Monte Carlo coincidence experiment. The two balls draw from independent
/// splitmix64 streams derived from cfg.seed (salts 1 and 2), one uniform per
/// ball per trial.
TwoBallResult run_two_ball(const TwoBallConfig& cfg);

/// Same counts as run_two_ball, computed in contiguous trial blocks; each
/// block re-derives the streams and discards its start offset, so totals
/// match the single-pass run exactly.
TwoBallResult run_two_ball_sharded(const TwoBallConfig& cfg, int shards);

/// Per-bin table "bin,empirical_conditional,exact_conditional"; undefined
/// conditionals are written as nan.
void write_two_ball_csv(std::ostream& os, const TwoBallResult& result);

}  // namespace mirrorborn
