#include <mirrorborn/states.hpp>

#include "internal.hpp"

#include <cmath>
#include <stdexcept>

namespace mirrorborn {

namespace {

// Rotate a global phase so the largest-modulus node is real positive.
void fix_gauge(WaveFunction& psi) {
  std::size_t peak = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < psi.amp.size(); ++j) {
    const double m = std::abs(psi.amp[j]);
    if (m > best) {
      best = m;
      peak = j;
    }
  }
  if (!(best > 0.0)) return;
  const cplx rot = std::conj(psi.amp[peak]) / best;
  for (cplx& a : psi.amp) a *= rot;
}

}  // namespace

WaveFunction gaussian_packet(const PacketSpec& spec, const GridSpec& grid) {
  if (!(spec.sigma_x > 0.0))
    throw std::invalid_argument("packet: sigma_x must be positive");
  if (!(spec.m > 0.0))
    throw std::invalid_argument("packet: m must be positive");
  if (!std::isfinite(spec.x0) || !std::isfinite(spec.p0) || !std::isfinite(spec.t))
    throw std::invalid_argument("packet: parameters must be finite");
  if (spec.x0 - 8.0 * spec.sigma_x < grid.x_min ||
      spec.x0 + 8.0 * spec.sigma_x > grid.x_max)
    throw std::invalid_argument(
        "packet: support x0 +- 8 sigma_x does not fit inside [x_min, x_max]");

  const double s2 = spec.sigma_x * spec.sigma_x;
  const double c = std::pow(2.0 * internal::kPi * s2, -0.25);
  std::vector<cplx> amp(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double x = grid.x_node(j);
    const double d = x - spec.x0;
    amp[j] = c * std::exp(-d * d / (4.0 * s2)) * std::polar(1.0, spec.p0 * x);
  }
  WaveFunction psi = normalize(make_state(grid, Rep::position, std::move(amp)));
  fix_gauge(psi);
  return psi;
}

WaveFunction superpose(const std::vector<std::pair<cplx, WaveFunction>>& terms) {
  if (terms.empty())
    throw std::invalid_argument("superpose: empty term list");
  const WaveFunction& first = terms.front().second;
  WaveFunction out{first.grid, first.rep, std::vector<cplx>(first.amp.size())};
  for (const auto& [coeff, psi] : terms) {
    if (!(psi.grid == first.grid))
      throw std::invalid_argument("superpose: grids must match");
    if (psi.rep != first.rep)
      throw std::invalid_argument("superpose: representations must match");
    for (std::size_t j = 0; j < out.amp.size(); ++j)
      out.amp[j] += coeff * psi.amp[j];
  }
  if (!(norm(out) > 0.0))
    throw std::invalid_argument("superpose: result is the zero field");
  return normalize(out);
}

double plane_wave_phase(double p, double x, double t, double m) {
  if (!(m > 0.0))
    throw std::invalid_argument("plane_wave_phase: m must be positive");
  return (p * p / (2.0 * m)) * t - p * x;
}

}  // namespace mirrorborn
