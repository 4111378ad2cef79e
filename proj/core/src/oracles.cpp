#include <mirrorborn/oracles.hpp>

#include "internal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mirrorborn {

std::array<double, 3> cubic_hermitian_eigenvalues(const HermitianOperator& op) {
  if (op.dim != 3)
    throw std::invalid_argument("cubic oracle: dim must be 3");

  // char(A) = l^3 + a l^2 + b l + c with a = -tr, b = sum of principal
  // 2x2 minors, c = -det; all three are real for a Hermitian matrix.
  const cplx a00 = op.at(0, 0), a01 = op.at(0, 1), a02 = op.at(0, 2);
  const cplx a11 = op.at(1, 1), a12 = op.at(1, 2), a22 = op.at(2, 2);
  const double tr = (a00 + a11 + a22).real();
  const double m2 = (a00 * a11 - a01 * std::conj(a01) + a00 * a22 -
                     a02 * std::conj(a02) + a11 * a22 - a12 * std::conj(a12))
                        .real();
  const double det = (a00 * (a11 * a22 - a12 * std::conj(a12)) -
                      a01 * (std::conj(a01) * a22 - a12 * std::conj(a02)) +
                      a02 * (std::conj(a01) * std::conj(a12) - a11 * std::conj(a02)))
                         .real();
  const double a = -tr;
  const double b = m2;
  const double c = -det;

  // Depressed cubic y^3 + p y + q, real roots via the trigonometric form.
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  std::array<double, 3> roots{};
  if (p >= -1e-300) {
    roots.fill(-a / 3.0);  // triple (or numerically indistinct) root
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg);
    for (int k = 0; k < 3; ++k)
      roots[k] = m * std::cos((theta - 2.0 * internal::kPi * k) / 3.0) - a / 3.0;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double gaussian_momentum_amplitude(double sigma_x, double p0, double p) {
  if (!(sigma_x > 0.0))
    throw std::invalid_argument("gaussian oracle: sigma_x must be positive");
  const double s2 = sigma_x * sigma_x;
  const double d = p - p0;
  return std::pow(2.0 * s2 / internal::kPi, 0.25) * std::exp(-s2 * d * d);
}

GaussianMirrorDefects gaussian_mirror_defects(double sigma_x, double p0,
                                              const GridSpec& grid) {
  GaussianMirrorDefects out;
  const int n = grid.n;
  for (int j = 0; j < n; ++j) {
    const double here = gaussian_momentum_amplitude(sigma_x, p0, grid.p_node(j));
    const double mirrored =
        gaussian_momentum_amplitude(sigma_x, p0, grid.p_node((n - j) % n));
    // The closed-form amplitude is real, so reflect-vs-conjugate deviation
    // and evenness defect coincide here.
    out.dev_reflect_conj = std::max(out.dev_reflect_conj, std::abs(mirrored - here));
    out.evenness_defect = std::max(out.evenness_defect, std::abs(mirrored - here));
  }
  return out;
}

}  // namespace mirrorborn
