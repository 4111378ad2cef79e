#pragma once

#include <mirrorborn/analogy.hpp>
#include <mirrorborn/grid.hpp>
#include <mirrorborn/spectral.hpp>
#include <mirrorborn/states.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace mirrorborn {

enum class Command { packet, mirror_check, born, measure, two_ball, suite };

std::string command_name(Command c);
Command parse_command(const std::string& name);

/// Carries the dotted path of the offending key in what().
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::suite;
  GridSpec grid;  // defaults to n=1024 over [-20, 20]
  std::optional<PacketSpec> packet;
  std::optional<HermitianOperator> op;
  std::optional<std::vector<cplx>> state;
  std::optional<TwoBallConfig> two_ball;
  std::optional<std::int64_t> n_samples;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
};

/// Parses and validates a JSON run description. Unknown keys anywhere are
/// rejected by dotted path; every numeric parameter must satisfy the
/// preconditions of the module it feeds, and each command's required sections
/// must be present. cli_command, when set, stands in for a missing "command"
/// key and must agree with one that is present.
RunConfig parse_config(const std::string& json_text,
                       std::optional<Command> cli_command = std::nullopt);

}  // namespace mirrorborn
