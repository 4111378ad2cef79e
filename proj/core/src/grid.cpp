#include <mirrorborn/grid.hpp>

#include "internal.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace mirrorborn {

namespace {

using internal::kPi;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place radix-2 Cooley-Tukey, kernel exp(sign * 2 pi i j k / n).
void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * kPi / double(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx w = std::polar(1.0, ang * double(k));
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

// Table-based direct transform for other even n; exponent index (j*k) mod n
// keeps the kernel exact for large j*k.
std::vector<cplx> dft_direct(const std::vector<cplx>& in, int sign) {
  const int n = int(in.size());
  std::vector<cplx> table(n);
  for (int m = 0; m < n; ++m)
    table[m] = std::polar(1.0, sign * 2.0 * kPi * double(m) / double(n));
  std::vector<cplx> out(n);
  for (int k = 0; k < n; ++k) {
    internal::KahanSum re, im;
    for (int j = 0; j < n; ++j) {
      const cplx t = in[j] * table[int(std::int64_t(j) * k % n)];
      re.add(t.real());
      im.add(t.imag());
    }
    out[k] = {re.sum, im.sum};
  }
  return out;
}

std::vector<cplx> dft(std::vector<cplx> a, int sign) {
  if (is_pow2(int(a.size()))) {
    fft_pow2(a, sign);
    return a;
  }
  return dft_direct(a, sign);
}

void require_rep(const WaveFunction& psi, Rep rep, const char* what) {
  if (psi.rep != rep) throw std::invalid_argument(what);
}

}  // namespace

GridSpec make_grid(int n, double x_min, double x_max) {
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("grid: n must be even and >= 8");
  if (!std::isfinite(x_min) || !std::isfinite(x_max))
    throw std::invalid_argument("grid: bounds must be finite");
  if (!(x_max > x_min))
    throw std::invalid_argument("grid: x_max must exceed x_min");
  GridSpec g;
  g.n = n;
  g.x_min = x_min;
  g.x_max = x_max;
  g.dx = (x_max - x_min) / n;
  g.dp = 2.0 * kPi / (n * g.dx);
  return g;
}

WaveFunction make_state(const GridSpec& grid, Rep rep, std::vector<cplx> amp) {
  if (int(amp.size()) != grid.n)
    throw std::invalid_argument("state: amplitude length must equal grid.n");
  for (const cplx& a : amp)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("state: amplitudes must be finite");
  return {grid, rep, std::move(amp)};
}

WaveFunction to_momentum(const WaveFunction& psi) {
  require_rep(psi, Rep::position, "to_momentum: input must be in position representation");
  const GridSpec& g = psi.grid;
  const int n = g.n;

  // Centered transform via FFT: absorbing the node offsets leaves a (-1)^j
  // input modulation and a per-k phase e^{-i p_k x_min}.
  std::vector<cplx> work(n);
  for (int j = 0; j < n; ++j) work[j] = (j % 2 == 0) ? psi.amp[j] : -psi.amp[j];
  std::vector<cplx> spec = dft(std::move(work), -1);

  const double scale = g.dx / std::sqrt(2.0 * kPi);
  WaveFunction out{g, Rep::momentum, std::vector<cplx>(n)};
  for (int k = 0; k < n; ++k)
    out.amp[k] = scale * std::polar(1.0, -g.p_node(k) * g.x_min) * spec[k];
  return out;
}

WaveFunction to_position(const WaveFunction& psi) {
  require_rep(psi, Rep::momentum, "to_position: input must be in momentum representation");
  const GridSpec& g = psi.grid;
  const int n = g.n;

  std::vector<cplx> work(n);
  for (int k = 0; k < n; ++k)
    work[k] = psi.amp[k] * std::polar(1.0, g.p_node(k) * g.x_min);
  std::vector<cplx> spec = dft(std::move(work), +1);

  const double scale = g.dp / std::sqrt(2.0 * kPi);
  WaveFunction out{g, Rep::position, std::vector<cplx>(n)};
  for (int j = 0; j < n; ++j)
    out.amp[j] = scale * ((j % 2 == 0) ? spec[j] : -spec[j]);
  return out;
}

double norm(const WaveFunction& psi) {
  internal::KahanSum s;
  for (const cplx& a : psi.amp) s.add(std::norm(a));
  return std::sqrt(s.sum * psi.step());
}

cplx inner(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.grid == b.grid))
    throw std::invalid_argument("inner: grids must match");
  if (a.rep != b.rep)
    throw std::invalid_argument("inner: representations must match");
  internal::KahanSum re, im;
  for (std::size_t j = 0; j < a.amp.size(); ++j) {
    const cplx t = std::conj(a.amp[j]) * b.amp[j];
    re.add(t.real());
    im.add(t.imag());
  }
  const double step = a.step();
  return {re.sum * step, im.sum * step};
}

WaveFunction normalize(const WaveFunction& psi) {
  const double n = norm(psi);
  if (!(n > 0.0))
    throw std::invalid_argument("normalize: zero field");
  WaveFunction out = psi;
  const double inv = 1.0 / n;
  for (cplx& a : out.amp) a *= inv;
  return out;
}

}  // namespace mirrorborn
