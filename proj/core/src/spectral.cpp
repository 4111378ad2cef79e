#include <mirrorborn/spectral.hpp>

#include <mirrorborn/rng.hpp>

#include "internal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mirrorborn {

namespace {

constexpr double kHermTol = 1e-12;
constexpr int kMaxSweeps = 100;

double frobenius(const HermitianOperator& op) {
  internal::KahanSum s;
  for (const cplx& e : op.entries) s.add(std::norm(e));
  return std::sqrt(s.sum);
}

std::size_t argmax_modulus(const std::vector<cplx>& v) {
  std::size_t best = 0;
  double m = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > m) {
      m = std::abs(v[i]);
      best = i;
    }
  return best;
}

void check_unit(const std::vector<cplx>& state, const char* what) {
  double s = 0.0;
  for (const cplx& c : state) s += std::norm(c);
  if (std::abs(std::sqrt(s) - 1.0) > 1e-10)
    throw std::invalid_argument(std::string(what) + ": state must be unit norm");
}

}  // namespace

HermitianOperator make_hermitian(int dim, std::vector<cplx> entries) {
  if (dim < 1)
    throw std::invalid_argument("hermitian: dim must be >= 1");
  if (entries.size() != std::size_t(dim) * dim)
    throw std::invalid_argument("hermitian: entry count must be dim*dim");
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const cplx a = entries[std::size_t(i) * dim + j];
      const cplx b = entries[std::size_t(j) * dim + i];
      if (std::abs(a - std::conj(b)) > kHermTol)
        throw std::invalid_argument("hermitian: matrix is not conjugate-symmetric");
    }
  // Exact symmetrization so the solver sees A == A^dagger bit for bit.
  for (int i = 0; i < dim; ++i) {
    entries[std::size_t(i) * dim + i] = entries[std::size_t(i) * dim + i].real();
    for (int j = i + 1; j < dim; ++j) {
      const cplx m = 0.5 * (entries[std::size_t(i) * dim + j] +
                            std::conj(entries[std::size_t(j) * dim + i]));
      entries[std::size_t(i) * dim + j] = m;
      entries[std::size_t(j) * dim + i] = std::conj(m);
    }
  }
  return {dim, std::move(entries)};
}

SpectralDecomposition eigendecompose(const HermitianOperator& op) {
  const int k = op.dim;
  std::vector<cplx> A = op.entries;
  std::vector<cplx> V(std::size_t(k) * k, cplx(0.0));
  for (int i = 0; i < k; ++i) V[std::size_t(i) * k + i] = 1.0;

  auto at = [&](std::vector<cplx>& M, int i, int j) -> cplx& {
    return M[std::size_t(i) * k + j];
  };
  auto max_off = [&]() {
    double m = 0.0;
    for (int p = 0; p < k - 1; ++p)
      for (int q = p + 1; q < k; ++q)
        m = std::max(m, std::abs(at(A, p, q)));
    return m;
  };

  const double tol = 1e-13 * std::max(1.0, frobenius(op));
  int sweep = 0;
  for (; sweep < kMaxSweeps && max_off() > tol; ++sweep) {
    for (int p = 0; p < k - 1; ++p) {
      for (int q = p + 1; q < k; ++q) {
        const cplx apq = at(A, p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-2 * tol) continue;

        // Unitary plane rotation annihilating A[p][q]; phi carries the
        // entry's phase, (c, s) the real Jacobi pair.
        const double phi = std::arg(apq);
        const double tau = (at(A, q, q).real() - at(A, p, p).real()) / (2.0 * mag);
        const double t = (tau == 0.0)
                             ? 1.0
                             : std::copysign(1.0, tau) /
                                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * std::polar(1.0, phi);    // s e^{+i phi}
        const cplx sm = s * std::polar(1.0, -phi);   // s e^{-i phi}

        for (int i = 0; i < k; ++i) {  // A <- A U (columns p, q)
          const cplx aip = at(A, i, p), aiq = at(A, i, q);
          at(A, i, p) = c * aip - sm * aiq;
          at(A, i, q) = sp * aip + c * aiq;
        }
        for (int j = 0; j < k; ++j) {  // A <- U^dagger A (rows p, q)
          const cplx apj = at(A, p, j), aqj = at(A, q, j);
          at(A, p, j) = c * apj - sp * aqj;
          at(A, q, j) = sm * apj + c * aqj;
        }
        at(A, p, q) = 0.0;  // annihilated analytically; keep it exact
        at(A, q, p) = 0.0;
        at(A, p, p) = at(A, p, p).real();
        at(A, q, q) = at(A, q, q).real();

        for (int i = 0; i < k; ++i) {  // V <- V U
          const cplx vip = at(V, i, p), viq = at(V, i, q);
          at(V, i, p) = c * vip - sm * viq;
          at(V, i, q) = sp * vip + c * viq;
        }
      }
    }
  }

  const double residual = max_off();
  if (residual > tol)
    throw std::runtime_error(
        "eigendecompose: no convergence in " + std::to_string(kMaxSweeps) +
        " sweeps, residual " + internal::fmt17(residual));

  std::vector<double> lambda(k);
  for (int i = 0; i < k; ++i) lambda[i] = at(A, i, i).real();

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lambda[a] != lambda[b]) return lambda[a] < lambda[b];
    return a < b;
  });

  std::vector<std::vector<cplx>> vecs(k, std::vector<cplx>(k));
  std::vector<double> sorted(k);
  for (int r = 0; r < k; ++r) {
    sorted[r] = lambda[order[r]];
    for (int i = 0; i < k; ++i) vecs[r][i] = at(V, i, order[r]);
  }

  // Near-equal eigenvalues form clusters; order members by the index of the
  // dominant component so degenerate subspaces come out reproducibly.
  double scale = 1.0;
  for (double l : sorted) scale = std::max(scale, std::abs(l));
  const double cluster_tol = 1e-8 * scale;
  int lo = 0;
  while (lo < k) {
    int hi = lo + 1;
    while (hi < k && sorted[hi] - sorted[hi - 1] <= cluster_tol) ++hi;
    if (hi - lo > 1) {
      std::vector<int> idx(hi - lo);
      std::iota(idx.begin(), idx.end(), lo);
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return argmax_modulus(vecs[a]) < argmax_modulus(vecs[b]);
      });
      std::vector<std::vector<cplx>> tmpv(hi - lo);
      std::vector<double> tmpl(hi - lo);
      for (int r = 0; r < hi - lo; ++r) {
        tmpv[r] = std::move(vecs[idx[r]]);
        tmpl[r] = sorted[idx[r]];
      }
      for (int r = 0; r < hi - lo; ++r) {
        vecs[lo + r] = std::move(tmpv[r]);
        sorted[lo + r] = tmpl[r];
      }
    }
    lo = hi;
  }

  for (auto& v : vecs) {  // largest-modulus component real positive
    const std::size_t peak = argmax_modulus(v);
    const double m = std::abs(v[peak]);
    if (m > 0.0) {
      const cplx rot = std::conj(v[peak]) / m;
      for (cplx& c : v) c *= rot;
    }
  }

  return {std::move(sorted), std::move(vecs), residual};
}

std::vector<cplx> coefficients(const SpectralDecomposition& dec,
                               const std::vector<cplx>& state) {
  const std::size_t k = dec.eigenvectors.size();
  if (state.size() != k)
    throw std::invalid_argument("coefficients: state dimension mismatch");
  check_unit(state, "coefficients");
  std::vector<cplx> c(k);
  for (std::size_t r = 0; r < k; ++r) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      acc += std::conj(dec.eigenvectors[r][i]) * state[i];
    c[r] = acc;
  }
  return c;
}

ProbabilityTable make_probability_table(std::vector<double> probs,
                                        std::vector<double> labels,
                                        double sum_tol) {
  if (probs.empty() || probs.size() != labels.size())
    throw std::invalid_argument("probability table: probs and labels must match and be non-empty");
  internal::KahanSum s;
  for (double p : probs) {
    if (!(p >= 0.0))
      throw std::invalid_argument("probability table: negative entry");
    s.add(p);
  }
  if (std::abs(s.sum - 1.0) > sum_tol)
    throw std::invalid_argument("probability table: entries must sum to 1");
  return {std::move(probs), std::move(labels)};
}

ProbabilityTable born_table(const std::vector<cplx>& coeffs,
                            const std::vector<double>& labels) {
  check_unit(coeffs, "born_table");
  std::vector<double> probs(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) probs[i] = std::norm(coeffs[i]);
  return make_probability_table(std::move(probs), labels);
}

double expectation_spectral(const ProbabilityTable& table) {
  internal::KahanSum s;
  for (std::size_t i = 0; i < table.probs.size(); ++i)
    s.add(table.probs[i] * table.labels[i]);
  return s.sum;
}

double expectation_matrix(const HermitianOperator& op,
                          const std::vector<cplx>& state) {
  if (state.size() != std::size_t(op.dim))
    throw std::invalid_argument("expectation_matrix: state dimension mismatch");
  check_unit(state, "expectation_matrix");
  cplx acc = 0.0;
  for (int i = 0; i < op.dim; ++i) {
    cplx row = 0.0;
    for (int j = 0; j < op.dim; ++j) row += op.at(i, j) * state[j];
    acc += std::conj(state[i]) * row;
  }
  if (std::abs(acc.imag()) > 1e-12)
    throw std::runtime_error("expectation_matrix: value is not real");
  return acc.real();
}

double expectation_grid(const WaveFunction& psi, Observable kind, double mass) {
  if (!(mass > 0.0))
    throw std::invalid_argument("expectation_grid: mass must be positive");
  if (std::abs(norm(psi) - 1.0) > 1e-10)
    throw std::invalid_argument("expectation_grid: state must be normalized");

  const bool want_position = (kind == Observable::position);
  const WaveFunction* base = &psi;
  WaveFunction transformed;
  if (want_position && psi.rep != Rep::position) {
    transformed = to_position(psi);
    base = &transformed;
  } else if (!want_position && psi.rep != Rep::momentum) {
    transformed = to_momentum(psi);
    base = &transformed;
  }

  internal::KahanSum s;
  for (int j = 0; j < base->grid.n; ++j) {
    const double w = std::norm(base->amp[j]);
    double v = 0.0;
    switch (kind) {
      case Observable::position: v = base->grid.x_node(j); break;
      case Observable::momentum: v = base->grid.p_node(j); break;
      case Observable::kinetic: {
        const double p = base->grid.p_node(j);
        v = p * p / (2.0 * mass);
        break;
      }
    }
    s.add(w * v);
  }
  return s.sum * base->step();
}

namespace {

// Monotone inverse-CDF table; the last entry is pinned to 1 so every draw
// lands in a bin.
std::vector<double> build_cdf(const ProbabilityTable& table) {
  std::vector<double> cdf(table.probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < table.probs.size(); ++i) {
    acc += table.probs[i];
    cdf[i] = std::min(acc, 1.0);
  }
  cdf.back() = 1.0;
  return cdf;
}

std::size_t draw_bin(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return std::min(std::size_t(it - cdf.begin()), cdf.size() - 1);
}

}  // namespace

std::vector<std::int64_t> sample_outcomes(const ProbabilityTable& table,
                                          std::int64_t n, std::uint64_t seed) {
  if (n < 0)
    throw std::invalid_argument("sample_outcomes: n must be nonnegative");
  const std::vector<double> cdf = build_cdf(table);
  std::vector<std::int64_t> counts(table.probs.size(), 0);
  SplitMix64 rng(seed);
  for (std::int64_t t = 0; t < n; ++t)
    ++counts[draw_bin(cdf, rng.next_double())];
  return counts;
}

std::vector<std::int64_t> sample_outcomes_sharded(const ProbabilityTable& table,
                                                  std::int64_t n,
                                                  std::uint64_t seed,
                                                  int shards) {
  if (n < 0)
    throw std::invalid_argument("sample_outcomes: n must be nonnegative");
  if (shards < 1)
    throw std::invalid_argument("sample_outcomes: shards must be >= 1");
  const std::vector<double> cdf = build_cdf(table);
  std::vector<std::int64_t> counts(table.probs.size(), 0);
  for (int sh = 0; sh < shards; ++sh) {
    const std::int64_t lo = n * std::int64_t(sh) / shards;
    const std::int64_t hi = n * std::int64_t(sh + 1) / shards;
    SplitMix64 rng(seed);
    rng.discard(std::uint64_t(lo));  // one draw per trial
    for (std::int64_t t = lo; t < hi; ++t)
      ++counts[draw_bin(cdf, rng.next_double())];
  }
  return counts;
}

}  // namespace mirrorborn
