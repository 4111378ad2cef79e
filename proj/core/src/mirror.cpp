#include <mirrorborn/mirror.hpp>

#include "internal.hpp"

#include <cmath>
#include <iostream>
#include <ostream>
#include <stdexcept>

namespace mirrorborn {

namespace {

void require_momentum(const WaveFunction& psi, const char* what) {
  if (psi.rep != Rep::momentum) throw std::invalid_argument(what);
}

void warn_unpaired_edge(const WaveFunction& psi, const char* who) {
  const double w = unpaired_edge_weight(psi);
  if (w > kEdgeWeightTol)
    std::cerr << "mirror-born: " << who << ": edge node p = "
              << psi.grid.p_node(0) << " carries amplitude " << w
              << " but has no reflected partner on the grid; it is mapped to itself\n";
}

}  // namespace

double unpaired_edge_weight(const WaveFunction& psi) {
  require_momentum(psi, "unpaired_edge_weight: momentum representation required");
  return std::abs(psi.amp[0]);
}

WaveFunction reflect(const WaveFunction& psi) {
  require_momentum(psi, "reflect: momentum representation required");
  warn_unpaired_edge(psi, "reflect");
  const int n = psi.grid.n;
  WaveFunction out{psi.grid, Rep::momentum, std::vector<cplx>(n)};
  for (int j = 0; j < n; ++j) out.amp[j] = psi.amp[(n - j) % n];
  return out;
}

WaveFunction conjugate(const WaveFunction& psi) {
  WaveFunction out = psi;
  for (cplx& a : out.amp) a = std::conj(a);
  return out;
}

WaveFunction apparatus_image_segmentwise(const WaveFunction& psi) {
  require_momentum(psi, "apparatus_image: momentum representation required");
  warn_unpaired_edge(psi, "apparatus_image");
  const int n = psi.grid.n;
  WaveFunction out{psi.grid, Rep::momentum, std::vector<cplx>(n)};
  // One scattering cell at a time: the cell at p deposits its conjugated
  // amplitude at -p. Conjugation is exact per component, so this equals
  // reflect(conjugate(psi)) bit for bit.
  for (int j = 0; j < n; ++j) out.amp[(n - j) % n] = std::conj(psi.amp[j]);
  return out;
}

std::vector<cplx> joint_amplitude(const WaveFunction& particle,
                                  const WaveFunction& apparatus) {
  if (!(particle.grid == apparatus.grid))
    throw std::invalid_argument("joint_amplitude: grids must match");
  if (particle.rep != apparatus.rep)
    throw std::invalid_argument("joint_amplitude: representations must match");
  std::vector<cplx> out(particle.amp.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = particle.amp[j] * apparatus.amp[j];
  return out;
}

MirrorReport born_compare(const WaveFunction& psi, double tolerance) {
  require_momentum(psi, "born_compare: momentum representation required");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("born_compare: tolerance must be positive");
  if (std::abs(norm(psi) - 1.0) > 1e-10)
    throw std::invalid_argument("born_compare: state must be normalized");

  const WaveFunction refl = reflect(psi);
  MirrorReport rep;
  rep.tolerance = tolerance;
  for (std::size_t j = 0; j < psi.amp.size(); ++j) {
    const cplx a = psi.amp[j];
    const cplx r = refl.amp[j];
    const cplx product = a * r;  // psi(p) psi(-p)
    // Same rounding pattern as the product's real part, so an exactly
    // conjugate-even state reports a defect of exactly zero.
    const double born = a.real() * a.real() + a.imag() * a.imag();
    rep.dev_reflect_conj = std::max(rep.dev_reflect_conj, std::abs(r - std::conj(a)));
    rep.dev_product = std::max(rep.dev_product, std::abs(product - born));
    rep.max_imag = std::max(rep.max_imag, std::abs(product.imag()));
    rep.evenness_defect =
        std::max(rep.evenness_defect, std::abs(std::abs(r) - std::abs(a)));
  }
  rep.holds = rep.dev_reflect_conj <= tolerance;
  return rep;
}

double mirror_product_integral(const WaveFunction& psi) {
  require_momentum(psi, "mirror_product_integral: momentum representation required");
  const WaveFunction refl = reflect(psi);
  internal::KahanSum s;
  for (std::size_t j = 0; j < psi.amp.size(); ++j)
    s.add((psi.amp[j] * refl.amp[j]).real());
  return s.sum * psi.grid.dp;
}

void write_mirror_csv(std::ostream& os, const WaveFunction& psi) {
  require_momentum(psi, "write_mirror_csv: momentum representation required");
  const WaveFunction refl = reflect(psi);
  os << "p,born_density,mirror_re,mirror_im\n";
  for (int j = 0; j < psi.grid.n; ++j) {
    const cplx a = psi.amp[j];
    const cplx product = a * refl.amp[j];
    os << internal::fmt17(psi.grid.p_node(j)) << ','
       << internal::fmt17(a.real() * a.real() + a.imag() * a.imag()) << ','
       << internal::fmt17(product.real()) << ','
       << internal::fmt17(product.imag()) << '\n';
  }
}

ExchangeRecord segment_exchange(double delta_p, double delta_E, double x,
                                double tau) {
  if (!(tau >= 0.0))
    throw std::invalid_argument("segment_exchange: tau must be nonnegative");
  ExchangeRecord r;
  r.dp_part = -delta_p;
  r.dp_ap = delta_p;
  r.dE_part = -delta_E;
  r.dE_ap = delta_E;
  // Each side's phase shift from its own deltas; the pair sums cancel because
  // the inputs are exact negations, not because anything is copied over.
  r.dphi_part = r.dE_part * tau - r.dp_part * x;
  r.dphi_ap = r.dE_ap * tau - r.dp_ap * x;
  return r;
}

}  // namespace mirrorborn
