#include <mirrorborn/analogy.hpp>

#include <mirrorborn/rng.hpp>

#include "internal.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace mirrorborn {

namespace {

void check_table(const std::vector<double>& p, int bins, const char* name) {
  if (int(p.size()) != bins)
    throw std::invalid_argument(std::string(name) + ": length must equal bins");
  internal::KahanSum s;
  for (double v : p) {
    if (!(v >= 0.0))
      throw std::invalid_argument(std::string(name) + ": negative entry");
    s.add(v);
  }
  if (std::abs(s.sum - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(name) + ": entries must sum to 1");
}

void check_config(const TwoBallConfig& cfg) {
  if (cfg.bins < 2)
    throw std::invalid_argument("two_ball: bins must be >= 2");
  check_table(cfg.p1, cfg.bins, "two_ball.p1");
  check_table(cfg.p2, cfg.bins, "two_ball.p2");
  if (cfg.n < 1)
    throw std::invalid_argument("two_ball: n must be >= 1");
}

std::vector<double> build_cdf(const std::vector<double>& p) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = std::min(acc, 1.0);
  }
  cdf.back() = 1.0;
  return cdf;
}

std::size_t draw_bin(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return std::min(std::size_t(it - cdf.begin()), cdf.size() - 1);
}

TwoBallResult finish(const TwoBallConfig& cfg,
                     std::vector<std::int64_t> counts) {
  TwoBallResult r;
  r.trials = cfg.n;
  r.coincidence_counts = std::move(counts);
  for (std::int64_t c : r.coincidence_counts) r.coincidences += c;
  r.empirical_rate = double(r.coincidences) / double(cfg.n);
  if (r.coincidences > 0) {
    std::vector<double> cond(cfg.bins);
    for (int b = 0; b < cfg.bins; ++b)
      cond[b] = double(r.coincidence_counts[b]) / double(r.coincidences);
    r.empirical_conditional = std::move(cond);
  }
  const ProductDistribution exact = product_distribution(cfg.p1, cfg.p2);
  r.exact_rate = exact.rate;
  r.exact_conditional = exact.conditional;
  if (r.empirical_conditional && r.exact_conditional) {
    double tv = 0.0;
    for (int b = 0; b < cfg.bins; ++b)
      tv += std::abs((*r.empirical_conditional)[b] - (*r.exact_conditional)[b]);
    r.tv_distance = 0.5 * tv;
  }
  return r;
}

}  // namespace

ProductDistribution product_distribution(const std::vector<double>& p1,
                                         const std::vector<double>& p2) {
  if (p1.size() != p2.size() || p1.empty())
    throw std::invalid_argument("product_distribution: tables must match and be non-empty");
  std::vector<double> joint(p1.size());
  internal::KahanSum rate;
  for (std::size_t b = 0; b < p1.size(); ++b) {
    joint[b] = p1[b] * p2[b];
    rate.add(joint[b]);
  }
  ProductDistribution out;
  out.rate = rate.sum;
  if (out.rate > 0.0) {
    for (double& v : joint) v /= rate.sum;
    out.conditional = std::move(joint);
  }
  return out;
}

TwoBallResult run_two_ball(const TwoBallConfig& cfg) {
  check_config(cfg);
  const std::vector<double> cdf1 = build_cdf(cfg.p1);
  const std::vector<double> cdf2 = build_cdf(cfg.p2);
  SplitMix64 g1(derive_stream_seed(cfg.seed, 1));
  SplitMix64 g2(derive_stream_seed(cfg.seed, 2));
  std::vector<std::int64_t> counts(cfg.bins, 0);
  for (std::int64_t t = 0; t < cfg.n; ++t) {
    const std::size_t b1 = draw_bin(cdf1, g1.next_double());
    const std::size_t b2 = draw_bin(cdf2, g2.next_double());
    if (b1 == b2) ++counts[b1];
  }
  return finish(cfg, std::move(counts));
}

TwoBallResult run_two_ball_sharded(const TwoBallConfig& cfg, int shards) {
  check_config(cfg);
  if (shards < 1)
    throw std::invalid_argument("two_ball: shards must be >= 1");
  const std::vector<double> cdf1 = build_cdf(cfg.p1);
  const std::vector<double> cdf2 = build_cdf(cfg.p2);
  std::vector<std::int64_t> counts(cfg.bins, 0);
  for (int sh = 0; sh < shards; ++sh) {
    const std::int64_t lo = cfg.n * std::int64_t(sh) / shards;
    const std::int64_t hi = cfg.n * std::int64_t(sh + 1) / shards;
    SplitMix64 g1(derive_stream_seed(cfg.seed, 1));
    SplitMix64 g2(derive_stream_seed(cfg.seed, 2));
    g1.discard(std::uint64_t(lo));  // one draw per ball per trial
    g2.discard(std::uint64_t(lo));
    for (std::int64_t t = lo; t < hi; ++t) {
      const std::size_t b1 = draw_bin(cdf1, g1.next_double());
      const std::size_t b2 = draw_bin(cdf2, g2.next_double());
      if (b1 == b2) ++counts[b1];
    }
  }
  return finish(cfg, std::move(counts));
}

void write_two_ball_csv(std::ostream& os, const TwoBallResult& result) {
  const double qnan = std::nan("");
  os << "bin,empirical_conditional,exact_conditional\n";
  for (std::size_t b = 0; b < result.coincidence_counts.size(); ++b) {
    const double emp =
        result.empirical_conditional ? (*result.empirical_conditional)[b] : qnan;
    const double exa =
        result.exact_conditional ? (*result.exact_conditional)[b] : qnan;
    os << b << ',' << internal::fmt17(emp) << ',' << internal::fmt17(exa) << '\n';
  }
}

}  // namespace mirrorborn
