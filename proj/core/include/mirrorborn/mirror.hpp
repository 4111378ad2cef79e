#pragma once

#include <mirrorborn/grid.hpp>

#include <iosfwd>

namespace mirrorborn {

/// Momentum-reflected copy of a momentum-representation state:
/// out[j] = in[(n - j) mod n], which maps node p to node -p. Node 0 carries
/// p = -(n/2) dp, whose partner +(n/2) dp is not on the grid; that bin is
/// self-mapped, and a warning is printed to stderr when it holds more than
/// kEdgeWeightTol of amplitude.
WaveFunction reflect(const WaveFunction& psi);

/// Componentwise complex conjugate.
WaveFunction conjugate(const WaveFunction& psi);

/// |amp| at the unpaired edge node p = -(n/2) dp.
double unpaired_edge_weight(const WaveFunction& psi);

inline constexpr double kEdgeWeightTol = 1e-12;

/// Mirror apparatus state built cell by cell: each momentum cell j of the
/// particle state contributes conj(amp_j) at the reflected cell. Agrees with
/// reflect(conjugate(psi)) componentwise exactly.
WaveFunction apparatus_image_segmentwise(const WaveFunction& psi);

/// Pointwise product field particle * apparatus (shared grid and
/// representation required). Not a probability density in general; it is one
/// when the apparatus is the mirror image of the particle.
std::vector<cplx> joint_amplitude(const WaveFunction& particle,
                                  const WaveFunction& apparatus);

/// Deviation diagnostics for the mirror product P(p) = psi(p) psi(-p) of one
/// normalized momentum-representation state, against the spectral density
/// |psi(p)|^2. `holds` is the verdict dev_reflect_conj <= tolerance.
struct MirrorReport {
  double dev_reflect_conj = 0.0;  // max_j |psi(-p_j) - conj(psi(p_j))|
  double dev_product = 0.0;       // max_j |psi(p_j) psi(-p_j) - |psi(p_j)|^2|
  double max_imag = 0.0;          // max_j |Im(psi(p_j) psi(-p_j))|
  double evenness_defect = 0.0;   // max_j ||psi(-p_j)| - |psi(p_j)||
  double tolerance = 0.0;
  bool holds = false;
};

MirrorReport born_compare(const WaveFunction& psi, double tolerance);

/// Quadrature integral sum_j Re(psi(p_j) psi(-p_j)) dp.
double mirror_product_integral(const WaveFunction& psi);

/// Per-node table "p,born_density,mirror_re,mirror_im", one row per momentum
/// node, 17 significant digits.
void write_mirror_csv(std::ostream& os, const WaveFunction& psi);

/// Signed per-segment exchange balance between particle and apparatus for one
/// scattering cell: momentum transfer delta_p, energy transfer delta_E at
/// location x over duration tau. Phases follow phi = E t - p x, so
/// dphi = dE * tau - dp * x for each side. Every pair of fields sums to zero
/// exactly; both sides are computed independently, conservation is checked,
/// not imposed.
struct ExchangeRecord {
  double dp_part = 0.0;
  double dp_ap = 0.0;
  double dE_part = 0.0;
  double dE_ap = 0.0;
  double dphi_part = 0.0;
  double dphi_ap = 0.0;
};

/// tau must be nonnegative.
ExchangeRecord segment_exchange(double delta_p, double delta_E, double x,
                                double tau);

}  // namespace mirrorborn
