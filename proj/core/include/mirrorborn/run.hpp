#pragma once

#include <mirrorborn/config.hpp>
#include <mirrorborn/mirror.hpp>
#include <mirrorborn/suite.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mirrorborn {

struct PacketMoments {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double sigma_x = 0.0;
  double sigma_p = 0.0;
  double kinetic = 0.0;
};

struct ExpectationPair {
  double matrix_path = 0.0;
  double spectral_path = 0.0;
};

struct SamplingStats {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> counts;
  std::vector<double> frequencies;
  double chi_square = 0.0;
};

/// Everything one invocation produced. Verdict-type findings (a mirror
/// identity that fails to hold, a failed criterion) live here, not in the
/// process exit status; only `suite` maps failures onto the exit code.
struct RunSummary {
  std::string version;
  Command command = Command::suite;
  RunConfig config;  // effective values after CLI overrides
  std::optional<PacketMoments> packet_moments;
  std::optional<MirrorReport> mirror;
  std::optional<double> mirror_integral;
  std::optional<std::vector<double>> eigenvalues;
  std::optional<std::vector<double>> born_probabilities;
  std::optional<ExpectationPair> expectations;
  std::optional<SamplingStats> sampling;
  std::optional<TwoBallResult> two_ball;
  std::optional<std::vector<CriterionResult>> criteria;
  std::vector<std::string> artifacts;  // file names written to the out dir
  std::vector<std::string> warnings;
  double wall_time_seconds = 0.0;
};

/// Executes the configured command, writes artifacts and summary.json into
/// out_dir (created if absent), and returns the summary.
RunSummary run(const RunConfig& cfg, const std::filesystem::path& out_dir);

/// Deterministic JSON form of a summary; summary_from_json inverts it, so
/// serialize-parse-serialize is the identity on the text.
std::string summary_to_json(const RunSummary& s);
RunSummary summary_from_json(const std::string& text);

}  // namespace mirrorborn
