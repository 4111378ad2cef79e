#include <mirrorborn/config.hpp>

#include <json.hpp>

#include <cmath>
#include <initializer_list>
#include <string>

namespace mirrorborn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("config: " + msg); }

void check_keys(const json& obj, const std::string& prefix,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (item.key() == a) {
        known = true;
        break;
      }
    if (!known) fail("unknown key '" + prefix + item.key() + "'");
  }
}

double get_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail("'" + path + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail("'" + path + "' must be finite");
  return d;
}

std::int64_t get_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail("'" + path + "' must be an integer");
  return v.get<std::int64_t>();
}

cplx get_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2)
    fail("'" + path + "' must be a [re, im] pair");
  return {get_number(v[0], path + "[0]"), get_number(v[1], path + "[1]")};
}

std::vector<double> get_prob_vector(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail("'" + path + "' must be a non-empty array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_number(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

void check_prob_table(const std::vector<double>& p, int bins,
                      const std::string& path) {
  if (int(p.size()) != bins)
    fail("'" + path + "' must have exactly 'two_ball.bins' entries");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) fail("'" + path + "' entries must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) fail("'" + path + "' entries must sum to 1");
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::packet: return "packet";
    case Command::mirror_check: return "mirror-check";
    case Command::born: return "born";
    case Command::measure: return "measure";
    case Command::two_ball: return "two-ball";
    case Command::suite: return "suite";
  }
  return "?";
}

Command parse_command(const std::string& name) {
  if (name == "packet") return Command::packet;
  if (name == "mirror-check") return Command::mirror_check;
  if (name == "born") return Command::born;
  if (name == "measure") return Command::measure;
  if (name == "two-ball") return Command::two_ball;
  if (name == "suite") return Command::suite;
  fail("unknown command '" + name + "'");
}

RunConfig parse_config(const std::string& json_text,
                       std::optional<Command> cli_command) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be an object");
  check_keys(root, "", {"command", "grid", "packet", "operator", "state",
                        "two_ball", "n_samples", "seed", "tolerance"});

  RunConfig cfg;

  if (root.contains("command")) {
    const json& v = root["command"];
    if (!v.is_string()) fail("'command' must be a string");
    cfg.command = parse_command(v.get<std::string>());
    if (cli_command && *cli_command != cfg.command)
      fail("'command' value '" + command_name(cfg.command) +
           "' does not match the invoked subcommand '" +
           command_name(*cli_command) + "'");
  } else if (cli_command) {
    cfg.command = *cli_command;
  } else {
    fail("'command' is required");
  }

  int grid_n = 1024;
  double grid_lo = -20.0, grid_hi = 20.0;
  if (root.contains("grid")) {
    const json& gj = root["grid"];
    if (!gj.is_object()) fail("'grid' must be an object");
    check_keys(gj, "grid.", {"n", "x_min", "x_max"});
    if (gj.contains("n")) grid_n = int(get_integer(gj["n"], "grid.n"));
    if (gj.contains("x_min")) grid_lo = get_number(gj["x_min"], "grid.x_min");
    if (gj.contains("x_max")) grid_hi = get_number(gj["x_max"], "grid.x_max");
  }
  try {
    cfg.grid = make_grid(grid_n, grid_lo, grid_hi);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  if (root.contains("packet")) {
    const json& pj = root["packet"];
    if (!pj.is_object()) fail("'packet' must be an object");
    check_keys(pj, "packet.", {"x0", "p0", "sigma_x", "m", "t"});
    PacketSpec ps;
    if (pj.contains("x0")) ps.x0 = get_number(pj["x0"], "packet.x0");
    if (pj.contains("p0")) ps.p0 = get_number(pj["p0"], "packet.p0");
    if (pj.contains("sigma_x")) ps.sigma_x = get_number(pj["sigma_x"], "packet.sigma_x");
    if (pj.contains("m")) ps.m = get_number(pj["m"], "packet.m");
    if (pj.contains("t")) ps.t = get_number(pj["t"], "packet.t");
    if (!(ps.sigma_x > 0.0)) fail("'packet.sigma_x' must be positive");
    if (!(ps.m > 0.0)) fail("'packet.m' must be positive");
    if (ps.x0 - 8.0 * ps.sigma_x < cfg.grid.x_min ||
        ps.x0 + 8.0 * ps.sigma_x > cfg.grid.x_max)
      fail("'packet': support x0 +- 8 sigma_x does not fit inside [grid.x_min, grid.x_max]");
    cfg.packet = ps;
  }

  if (root.contains("operator")) {
    const json& oj = root["operator"];
    if (!oj.is_array() || oj.empty()) fail("'operator' must be a non-empty array of rows");
    const int k = int(oj.size());
    if (k > 64) fail("'operator' dimension must be <= 64");
    std::vector<cplx> entries;
    entries.reserve(std::size_t(k) * k);
    for (int i = 0; i < k; ++i) {
      const std::string rp = "operator[" + std::to_string(i) + "]";
      if (!oj[i].is_array() || int(oj[i].size()) != k)
        fail("'" + rp + "' must have exactly " + std::to_string(k) + " entries");
      for (int j = 0; j < k; ++j)
        entries.push_back(get_complex(oj[i][j], rp + "[" + std::to_string(j) + "]"));
    }
    try {
      cfg.op = make_hermitian(k, std::move(entries));
    } catch (const std::invalid_argument& e) {
      fail(std::string("'operator': ") + e.what());
    }
  }

  if (root.contains("state")) {
    const json& sj = root["state"];
    if (!sj.is_array() || sj.empty()) fail("'state' must be a non-empty array");
    std::vector<cplx> st;
    st.reserve(sj.size());
    for (std::size_t i = 0; i < sj.size(); ++i)
      st.push_back(get_complex(sj[i], "state[" + std::to_string(i) + "]"));
    if (cfg.op && st.size() != std::size_t(cfg.op->dim))
      fail("'state' length must match the operator dimension");
    double norm2 = 0.0;
    for (const cplx& c : st) norm2 += std::norm(c);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
      fail("'state' must be unit norm");
    cfg.state = std::move(st);
  }

  if (root.contains("n_samples")) {
    const std::int64_t n = get_integer(root["n_samples"], "n_samples");
    if (n < 1) fail("'n_samples' must be >= 1");
    cfg.n_samples = n;
  }

  if (root.contains("seed")) {
    const json& v = root["seed"];
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      fail("'seed' must be a nonnegative integer");
    cfg.seed = v.get<std::uint64_t>();
  }

  if (root.contains("tolerance")) {
    const double t = get_number(root["tolerance"], "tolerance");
    if (!(t > 0.0)) fail("'tolerance' must be positive");
    cfg.tolerance = t;
  }

  if (root.contains("two_ball")) {
    const json& tj = root["two_ball"];
    if (!tj.is_object()) fail("'two_ball' must be an object");
    check_keys(tj, "two_ball.", {"bins", "p1", "p2", "n"});
    for (const char* req : {"bins", "p1", "p2", "n"})
      if (!tj.contains(req)) fail(std::string("'two_ball.") + req + "' is required");
    TwoBallConfig tb;
    tb.bins = int(get_integer(tj["bins"], "two_ball.bins"));
    if (tb.bins < 2) fail("'two_ball.bins' must be >= 2");
    tb.p1 = get_prob_vector(tj["p1"], "two_ball.p1");
    tb.p2 = get_prob_vector(tj["p2"], "two_ball.p2");
    check_prob_table(tb.p1, tb.bins, "two_ball.p1");
    check_prob_table(tb.p2, tb.bins, "two_ball.p2");
    tb.n = get_integer(tj["n"], "two_ball.n");
    if (tb.n < 1) fail("'two_ball.n' must be >= 1");
    tb.seed = cfg.seed;
    cfg.two_ball = tb;
  }

  switch (cfg.command) {
    case Command::born:
      if (!cfg.op || !cfg.state)
        fail("command 'born' requires 'operator' and 'state'");
      break;
    case Command::measure:
      if (!cfg.op || !cfg.state || !cfg.n_samples)
        fail("command 'measure' requires 'operator', 'state' and 'n_samples'");
      break;
    case Command::two_ball:
      if (!cfg.two_ball) fail("command 'two-ball' requires 'two_ball'");
      break;
    default:
      break;  // packet, mirror-check fall back to a default packet; suite needs nothing
  }

  return cfg;
}

}  // namespace mirrorborn
