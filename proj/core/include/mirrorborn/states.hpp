#pragma once

#include <mirrorborn/grid.hpp>

#include <utility>
#include <vector>

namespace mirrorborn {

/// Parameters of a Gaussian packet. m and t feed the free-particle phase
/// bookkeeping (plane_wave_phase); the envelope itself is built at t = 0.
struct PacketSpec {
  double x0 = 0.0;
  double p0 = 0.0;
  double sigma_x = 1.0;
  double m = 1.0;
  double t = 0.0;
};

/// Normalized minimum-uncertainty packet on the grid,
///   psi(x_j) = (2 pi sigma_x^2)^(-1/4) exp(-(x_j-x0)^2/(4 sigma_x^2)) exp(i p0 x_j),
/// renormalized under the quadrature norm, then phase-fixed so the peak-node
/// amplitude is real positive. The support window |x0 +- 8 sigma_x| must lie
/// inside [x_min, x_max] or construction is rejected.
WaveFunction gaussian_packet(const PacketSpec& spec, const GridSpec& grid);

/// Normalized complex-weighted sum of states on a shared grid and
/// representation. Rejects an empty term list and an exactly zero result.
WaveFunction superpose(const std::vector<std::pair<cplx, WaveFunction>>& terms);

/// Free-particle phase phi(p, x, t) = (p^2/2m) t - p x. Under p -> -p the
/// momentum and phase flip sign while the energy term is unchanged; callers
/// probe that asymmetry directly, nothing here hides it.
double plane_wave_phase(double p, double x, double t, double m);

}  // namespace mirrorborn
