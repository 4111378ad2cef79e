#include <mirrorborn/run.hpp>
#include <mirrorborn/version.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void report(const mirrorborn::RunSummary& s) {
  using std::cout;
  if (s.packet_moments) {
    const auto& m = *s.packet_moments;
    cout << "packet: <x> = " << num(m.mean_x) << ", <p> = " << num(m.mean_p)
         << ", sigma_x = " << num(m.sigma_x) << ", sigma_p = " << num(m.sigma_p)
         << ", kinetic = " << num(m.kinetic) << "\n";
  }
  if (s.mirror) {
    const auto& r = *s.mirror;
    cout << "mirror: dev_reflect_conj = " << num(r.dev_reflect_conj)
         << ", dev_product = " << num(r.dev_product)
         << ", max_imag = " << num(r.max_imag)
         << ", evenness_defect = " << num(r.evenness_defect) << "\n"
         << "mirror: identity " << (r.holds ? "holds" : "fails")
         << " at tolerance " << num(r.tolerance);
    if (s.mirror_integral)
      cout << ", product integral = " << num(*s.mirror_integral);
    cout << "\n";
  }
  if (s.eigenvalues && s.born_probabilities) {
    cout << "born:";
    for (std::size_t k = 0; k < s.eigenvalues->size(); ++k)
      cout << (k ? ", " : " ") << "P(" << num((*s.eigenvalues)[k])
           << ") = " << num((*s.born_probabilities)[k]);
    cout << "\n";
  }
  if (s.expectations)
    cout << "expectation: matrix path = " << num(s.expectations->matrix_path)
         << ", spectral path = " << num(s.expectations->spectral_path) << "\n";
  if (s.sampling) {
    cout << "sampling: n = " << s.sampling->n << ", seed = " << s.sampling->seed
         << ", chi_square = " << num(s.sampling->chi_square) << "\ncounts:";
    for (std::size_t k = 0; k < s.sampling->counts.size(); ++k)
      cout << (k ? ", " : " ") << s.sampling->counts[k] << " ("
           << num(s.sampling->frequencies[k]) << ")";
    cout << "\n";
  }
  if (s.two_ball) {
    const auto& t = *s.two_ball;
    cout << "two-ball: trials = " << t.trials << ", coincidences = "
         << t.coincidences << ", empirical rate = " << num(t.empirical_rate)
         << ", exact rate = " << num(t.exact_rate);
    if (t.tv_distance) cout << ", tv distance = " << num(*t.tv_distance);
    cout << "\n";
  }
  if (s.criteria) {
    int passed = 0;
    for (const auto& c : *s.criteria) {
      cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name
           << ": " << c.detail << "\n";
      if (c.passed) ++passed;
    }
    cout << "suite: " << passed << "/" << s.criteria->size() << " criteria passed\n";
  }
  for (const std::string& w : s.warnings) cout << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale simulator comparing the spectral probability rule "
               "with the mirror-image product construction"};
  app.set_version_flag("--version", mirrorborn::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;

  const std::pair<const char*, const char*> cmds[] = {
      {"packet", "Build a Gaussian packet and report its moments"},
      {"mirror-check", "Measure how far the mirror product sits from the spectral density"},
      {"born", "Eigendecompose an operator and tabulate outcome probabilities"},
      {"measure", "Sample measurement outcomes from the probability table"},
      {"two-ball", "Run the classical two-ball coincidence experiment"},
      {"suite", "Run the full self-check battery"},
  };
  for (const auto& [name, desc] : cmds) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", config_path, "JSON run description file");
    sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
    sub->add_option("--seed", seed, "Override the configured seed");
    sub->add_option("--tolerance", tolerance, "Override the configured tolerance");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    const mirrorborn::Command cmd = mirrorborn::parse_command(sub->get_name());
    const std::string text = config_path.empty() ? "{}" : read_file(config_path);
    mirrorborn::RunConfig cfg = mirrorborn::parse_config(text, cmd);
    if (seed) cfg.seed = *seed;
    if (tolerance) {
      if (!(*tolerance > 0.0))
        throw mirrorborn::ConfigError("config: '--tolerance' must be positive");
      cfg.tolerance = *tolerance;
    }

    const mirrorborn::RunSummary s = mirrorborn::run(cfg, out_dir);
    report(s);
    std::cout << "wrote " << (std::filesystem::path(out_dir) / "summary.json").string()
              << "\n";

    if (s.criteria)
      for (const auto& c : *s.criteria)
        if (!c.passed) return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "mirror-born: " << e.what() << "\n";
    return 2;
  }
}
