#pragma once

#include <complex>
#include <vector>

namespace mirrorborn {

using cplx = std::complex<double>;

/// Uniform symmetric phase-space lattice. Position nodes x_j = x_min + j*dx,
/// momentum nodes p_j = (j - n/2)*dp with dp = 2*pi/(n*dx), so dx*dp*n = 2*pi
/// holds by construction and the two representations below are linked by a
/// unitary map.
struct GridSpec {
  int n = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  double dx = 0.0;
  double dp = 0.0;

  double x_node(int j) const { return x_min + j * dx; }
  double p_node(int j) const { return (j - n / 2) * dp; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// n must be even and >= 8; x_max > x_min, both finite.
GridSpec make_grid(int n, double x_min, double x_max);

enum class Rep { position, momentum };

/// Complex field sampled on one representation of a grid. Norm convention is
/// the quadrature one: sum_j |amp_j|^2 * step == 1 for a unit state, where
/// step is dx (position) or dp (momentum).
struct WaveFunction {
  GridSpec grid;
  Rep rep = Rep::position;
  std::vector<cplx> amp;

  double step() const { return rep == Rep::position ? grid.dx : grid.dp; }
};

/// Validates length n and finiteness of every component.
WaveFunction make_state(const GridSpec& grid, Rep rep, std::vector<cplx> amp);

/// Centered unitary transforms between the two representations:
///   to_momentum: F[psi](p_k) = dx/sqrt(2 pi) * sum_j psi(x_j) exp(-i p_k x_j)
///   to_position is the inverse (conjugate kernel, dp/sqrt(2 pi) weight).
/// Either direction requires the matching input representation.
WaveFunction to_momentum(const WaveFunction& psi);
WaveFunction to_position(const WaveFunction& psi);

double norm(const WaveFunction& psi);

/// Quadrature inner product <a|b> = sum conj(a_j) b_j * step. Grids and
/// representations must match.
cplx inner(const WaveFunction& a, const WaveFunction& b);

/// Rescales to unit norm; rejects the zero field.
WaveFunction normalize(const WaveFunction& psi);

}  // namespace mirrorborn
