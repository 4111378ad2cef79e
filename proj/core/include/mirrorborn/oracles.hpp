#pragma once

#include <mirrorborn/grid.hpp>
#include <mirrorborn/spectral.hpp>

#include <array>

namespace mirrorborn {

/// Cross-checks that take a route independent of the main numerical pipeline:
/// closed-form expressions evaluated directly on grid nodes and the cubic
/// characteristic polynomial solved in radicals. The self-check battery and
/// the tests compare pipeline output against these.

/// Eigenvalues of a 3x3 Hermitian matrix from its characteristic polynomial
/// via the trigonometric cubic formula, ascending. No iteration involved.
std::array<double, 3> cubic_hermitian_eigenvalues(const HermitianOperator& op);

/// Closed-form momentum amplitude of the normalized Gaussian packet with
/// x0 = 0 in the real-positive gauge:
///   (2 sigma_x^2 / pi)^(1/4) * exp(-sigma_x^2 (p - p0)^2).
double gaussian_momentum_amplitude(double sigma_x, double p0, double p);

struct GaussianMirrorDefects {
  double dev_reflect_conj = 0.0;
  double evenness_defect = 0.0;
};

/// Mirror-identity defects of that packet evaluated from the closed form on
/// the grid's momentum nodes, never touching the transform code.
GaussianMirrorDefects gaussian_mirror_defects(double sigma_x, double p0,
                                              const GridSpec& grid);

}  // namespace mirrorborn
