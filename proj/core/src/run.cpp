#include <mirrorborn/run.hpp>

#include <mirrorborn/oracles.hpp>
#include <mirrorborn/rng.hpp>
#include <mirrorborn/states.hpp>
#include <mirrorborn/stats.hpp>
#include <mirrorborn/version.hpp>

#include "internal.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mirrorborn {

namespace {

using nlohmann::json;

json complex_to_json(const cplx& c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) { return {j[0].get<double>(), j[1].get<double>()}; }

json config_to_json(const RunConfig& cfg) {
  json j;
  j["command"] = command_name(cfg.command);
  j["grid"] = {{"n", cfg.grid.n}, {"x_min", cfg.grid.x_min}, {"x_max", cfg.grid.x_max}};
  if (cfg.packet)
    j["packet"] = {{"x0", cfg.packet->x0}, {"p0", cfg.packet->p0},
                   {"sigma_x", cfg.packet->sigma_x}, {"m", cfg.packet->m},
                   {"t", cfg.packet->t}};
  if (cfg.op) {
    json rows = json::array();
    for (int i = 0; i < cfg.op->dim; ++i) {
      json row = json::array();
      for (int k = 0; k < cfg.op->dim; ++k) row.push_back(complex_to_json(cfg.op->at(i, k)));
      rows.push_back(std::move(row));
    }
    j["operator"] = std::move(rows);
  }
  if (cfg.state) {
    json st = json::array();
    for (const cplx& c : *cfg.state) st.push_back(complex_to_json(c));
    j["state"] = std::move(st);
  }
  if (cfg.two_ball)
    j["two_ball"] = {{"bins", cfg.two_ball->bins}, {"p1", cfg.two_ball->p1},
                     {"p2", cfg.two_ball->p2}, {"n", cfg.two_ball->n}};
  if (cfg.n_samples) j["n_samples"] = *cfg.n_samples;
  j["seed"] = cfg.seed;
  j["tolerance"] = cfg.tolerance;
  return j;
}

json mirror_to_json(const MirrorReport& r) {
  return {{"dev_reflect_conj", r.dev_reflect_conj}, {"dev_product", r.dev_product},
          {"max_imag", r.max_imag}, {"evenness_defect", r.evenness_defect},
          {"tolerance", r.tolerance}, {"holds", r.holds}};
}

MirrorReport mirror_from_json(const json& j) {
  MirrorReport r;
  r.dev_reflect_conj = j["dev_reflect_conj"].get<double>();
  r.dev_product = j["dev_product"].get<double>();
  r.max_imag = j["max_imag"].get<double>();
  r.evenness_defect = j["evenness_defect"].get<double>();
  r.tolerance = j["tolerance"].get<double>();
  r.holds = j["holds"].get<bool>();
  return r;
}

json two_ball_to_json(const TwoBallResult& r) {
  json j;
  j["trials"] = r.trials;
  j["coincidence_counts"] = r.coincidence_counts;
  j["coincidences"] = r.coincidences;
  j["empirical_rate"] = r.empirical_rate;
  j["empirical_conditional"] =
      r.empirical_conditional ? json(*r.empirical_conditional) : json();
  j["exact_rate"] = r.exact_rate;
  j["exact_conditional"] = r.exact_conditional ? json(*r.exact_conditional) : json();
  j["tv_distance"] = r.tv_distance ? json(*r.tv_distance) : json();
  return j;
}

TwoBallResult two_ball_from_json(const json& j) {
  TwoBallResult r;
  r.trials = j["trials"].get<std::int64_t>();
  r.coincidence_counts = j["coincidence_counts"].get<std::vector<std::int64_t>>();
  r.coincidences = j["coincidences"].get<std::int64_t>();
  r.empirical_rate = j["empirical_rate"].get<double>();
  if (!j["empirical_conditional"].is_null())
    r.empirical_conditional = j["empirical_conditional"].get<std::vector<double>>();
  r.exact_rate = j["exact_rate"].get<double>();
  if (!j["exact_conditional"].is_null())
    r.exact_conditional = j["exact_conditional"].get<std::vector<double>>();
  if (!j["tv_distance"].is_null()) r.tv_distance = j["tv_distance"].get<double>();
  return r;
}

std::string packet_csv(const WaveFunction& psi) {
  std::ostringstream os;
  const bool pos = psi.rep == Rep::position;
  os << (pos ? "x" : "p") << ",re,im,density\n";
  for (int j = 0; j < psi.grid.n; ++j) {
    const double node = pos ? psi.grid.x_node(j) : psi.grid.p_node(j);
    os << internal::fmt17(node) << ',' << internal::fmt17(psi.amp[j].real()) << ','
       << internal::fmt17(psi.amp[j].imag()) << ','
       << internal::fmt17(std::norm(psi.amp[j])) << '\n';
  }
  return os.str();
}

// Mean and spread of a marginal density by direct quadrature.
void moments(const WaveFunction& psi, double& mean, double& sigma) {
  internal::KahanSum m1, m2;
  for (int j = 0; j < psi.grid.n; ++j) {
    const double v = psi.rep == Rep::position ? psi.grid.x_node(j) : psi.grid.p_node(j);
    const double w = std::norm(psi.amp[j]);
    m1.add(w * v);
    m2.add(w * v * v);
  }
  mean = m1.sum * psi.step();
  const double var = m2.sum * psi.step() - mean * mean;
  sigma = var > 0.0 ? std::sqrt(var) : 0.0;
}

}  // namespace

RunSummary run(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  std::filesystem::create_directories(out_dir);

  RunSummary s;
  s.version = kVersion;
  s.command = cfg.command;
  s.config = cfg;

  auto emit = [&](const std::string& name, const std::string& payload) {
    std::ofstream f(out_dir / name, std::ios::binary);
    f << payload;
    f.flush();
    if (!f) throw std::runtime_error("run: failed to write " + (out_dir / name).string());
    s.artifacts.push_back(name);
  };

  switch (cfg.command) {
    case Command::packet: {
      const PacketSpec ps = cfg.packet.value_or(PacketSpec{});
      const WaveFunction pos = gaussian_packet(ps, cfg.grid);
      const WaveFunction mom = to_momentum(pos);
      PacketMoments m;
      moments(pos, m.mean_x, m.sigma_x);
      moments(mom, m.mean_p, m.sigma_p);
      m.kinetic = expectation_grid(mom, Observable::kinetic, ps.m);
      s.packet_moments = m;
      emit("packet_position.csv", packet_csv(pos));
      emit("packet_momentum.csv", packet_csv(mom));
      break;
    }
    case Command::mirror_check: {
      const PacketSpec ps = cfg.packet.value_or(PacketSpec{});
      const WaveFunction mom = to_momentum(gaussian_packet(ps, cfg.grid));
      s.mirror = born_compare(mom, cfg.tolerance);
      s.mirror_integral = mirror_product_integral(mom);
      if (unpaired_edge_weight(mom) > kEdgeWeightTol)
        s.warnings.push_back("edge momentum node carries amplitude above " +
                             internal::fmt17(kEdgeWeightTol) +
                             " and has no reflected partner");
      std::ostringstream os;
      write_mirror_csv(os, mom);
      emit("mirror.csv", os.str());
      break;
    }
    case Command::born:
    case Command::measure: {
      const SpectralDecomposition dec = eigendecompose(*cfg.op);
      const std::vector<cplx> c = coefficients(dec, *cfg.state);
      const ProbabilityTable table = born_table(c, dec.eigenvalues);
      s.eigenvalues = dec.eigenvalues;
      s.born_probabilities = table.probs;
      s.expectations = ExpectationPair{expectation_matrix(*cfg.op, *cfg.state),
                                       expectation_spectral(table)};
      std::ostringstream os;
      os << "label,probability\n";
      for (std::size_t k = 0; k < table.probs.size(); ++k)
        os << internal::fmt17(table.labels[k]) << ','
           << internal::fmt17(table.probs[k]) << '\n';
      emit("born.csv", os.str());

      if (cfg.command == Command::measure) {
        const std::int64_t n = *cfg.n_samples;
        SamplingStats st;
        st.n = n;
        st.seed = cfg.seed;
        st.counts = sample_outcomes(table, n, cfg.seed);
        st.frequencies.resize(st.counts.size());
        for (std::size_t k = 0; k < st.counts.size(); ++k)
          st.frequencies[k] = double(st.counts[k]) / double(n);
        st.chi_square = chi_square_statistic(st.counts, table.probs);
        std::ostringstream ms;
        ms << "label,probability,count,frequency\n";
        for (std::size_t k = 0; k < st.counts.size(); ++k)
          ms << internal::fmt17(table.labels[k]) << ','
             << internal::fmt17(table.probs[k]) << ',' << st.counts[k] << ','
             << internal::fmt17(st.frequencies[k]) << '\n';
        emit("measure.csv", ms.str());
        s.sampling = std::move(st);
      }
      break;
    }
    case Command::two_ball: {
      TwoBallConfig tb = *cfg.two_ball;
      tb.seed = cfg.seed;
      const TwoBallResult res = run_two_ball(tb);
      std::ostringstream os;
      write_two_ball_csv(os, res);
      emit("two_ball.csv", os.str());
      s.two_ball = res;
      break;
    }
    case Command::suite: {
      const SuiteResult sr = run_acceptance_suite(cfg.seed);
      for (const auto& [name, payload] : sr.artifacts) emit(name, payload);
      s.criteria = sr.criteria;
      break;
    }
  }

  s.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ofstream f(out_dir / "summary.json", std::ios::binary);
  f << summary_to_json(s) << '\n';
  f.flush();
  if (!f)
    throw std::runtime_error("run: failed to write " + (out_dir / "summary.json").string());
  return s;
}

std::string summary_to_json(const RunSummary& s) {
  json j;
  j["version"] = s.version;
  j["command"] = command_name(s.command);
  j["config"] = config_to_json(s.config);
  if (s.packet_moments)
    j["packet_moments"] = {{"mean_x", s.packet_moments->mean_x},
                           {"mean_p", s.packet_moments->mean_p},
                           {"sigma_x", s.packet_moments->sigma_x},
                           {"sigma_p", s.packet_moments->sigma_p},
                           {"kinetic", s.packet_moments->kinetic}};
  if (s.mirror) j["mirror"] = mirror_to_json(*s.mirror);
  if (s.mirror_integral) j["mirror_integral"] = *s.mirror_integral;
  if (s.eigenvalues) j["eigenvalues"] = *s.eigenvalues;
  if (s.born_probabilities) j["born_probabilities"] = *s.born_probabilities;
  if (s.expectations)
    j["expectations"] = {{"matrix_path", s.expectations->matrix_path},
                         {"spectral_path", s.expectations->spectral_path}};
  if (s.sampling)
    j["sampling"] = {{"n", s.sampling->n}, {"seed", s.sampling->seed},
                     {"counts", s.sampling->counts},
                     {"frequencies", s.sampling->frequencies},
                     {"chi_square", s.sampling->chi_square}};
  if (s.two_ball) j["two_ball"] = two_ball_to_json(*s.two_ball);
  if (s.criteria) {
    json arr = json::array();
    for (const CriterionResult& c : *s.criteria)
      arr.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed},
                     {"detail", c.detail}});
    j["criteria"] = std::move(arr);
  }
  j["artifacts"] = s.artifacts;
  j["warnings"] = s.warnings;
  j["wall_time_seconds"] = s.wall_time_seconds;
  return j.dump(2);
}

RunSummary summary_from_json(const std::string& text) {
  json j = json::parse(text);
  RunSummary s;
  s.version = j["version"].get<std::string>();
  s.command = parse_command(j["command"].get<std::string>());
  s.config = parse_config(j["config"].dump());
  if (j.contains("packet_moments")) {
    const json& m = j["packet_moments"];
    s.packet_moments = PacketMoments{m["mean_x"].get<double>(), m["mean_p"].get<double>(),
                                     m["sigma_x"].get<double>(), m["sigma_p"].get<double>(),
                                     m["kinetic"].get<double>()};
  }
  if (j.contains("mirror")) s.mirror = mirror_from_json(j["mirror"]);
  if (j.contains("mirror_integral")) s.mirror_integral = j["mirror_integral"].get<double>();
  if (j.contains("eigenvalues")) s.eigenvalues = j["eigenvalues"].get<std::vector<double>>();
  if (j.contains("born_probabilities"))
    s.born_probabilities = j["born_probabilities"].get<std::vector<double>>();
  if (j.contains("expectations"))
    s.expectations = ExpectationPair{j["expectations"]["matrix_path"].get<double>(),
                                     j["expectations"]["spectral_path"].get<double>()};
  if (j.contains("sampling")) {
    const json& m = j["sampling"];
    SamplingStats st;
    st.n = m["n"].get<std::int64_t>();
    st.seed = m["seed"].get<std::uint64_t>();
    st.counts = m["counts"].get<std::vector<std::int64_t>>();
    st.frequencies = m["frequencies"].get<std::vector<double>>();
    st.chi_square = m["chi_square"].get<double>();
    s.sampling = std::move(st);
  }
  if (j.contains("two_ball")) s.two_ball = two_ball_from_json(j["two_ball"]);
  if (j.contains("criteria")) {
    std::vector<CriterionResult> cs;
    for (const json& c : j["criteria"])
      cs.push_back({c["id"].get<int>(), c["name"].get<std::string>(),
                    c["passed"].get<bool>(), c["detail"].get<std::string>()});
    s.criteria = std::move(cs);
  }
  s.artifacts = j["artifacts"].get<std::vector<std::string>>();
  s.warnings = j["warnings"].get<std::vector<std::string>>();
  s.wall_time_seconds = j["wall_time_seconds"].get<double>();
  return s;
}

}  // namespace mirrorborn
