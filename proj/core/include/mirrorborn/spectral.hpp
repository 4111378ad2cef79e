#pragma once

#include <mirrorborn/grid.hpp>

#include <cstdint>
#include <vector>

namespace mirrorborn {

/// Dense Hermitian matrix, row-major. Construction checks conjugate symmetry
/// componentwise to 1e-12 and symmetrizes exactly (A <- (A + A^dagger)/2).
struct HermitianOperator {
  int dim = 0;
  std::vector<cplx> entries;

  const cplx& at(int i, int j) const { return entries[std::size_t(i) * dim + j]; }
};

HermitianOperator make_hermitian(int dim, std::vector<cplx> entries);

/// Result of the cyclic Jacobi eigensolver. eigenvalues ascending;
/// eigenvectors[k] is the unit eigenvector of eigenvalues[k], phase-fixed so
/// its largest-modulus component is real positive. Within a near-degenerate
/// cluster, vectors are ordered by the index of that component, so the
/// decomposition of a given matrix is reproducible bit for bit.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<std::vector<cplx>> eigenvectors;
  double residual = 0.0;  // max |off-diagonal| left after the sweeps
};

/// Cyclic complex Jacobi, sweep threshold 1e-13 relative to the Frobenius
/// norm, at most 100 sweeps. Throws if the threshold is not reached.
SpectralDecomposition eigendecompose(const HermitianOperator& op);

/// Expansion coefficients c_k = <v_k|state> of a unit vector in the
/// eigenbasis.
std::vector<cplx> coefficients(const SpectralDecomposition& dec,
                               const std::vector<cplx>& state);

/// Finite outcome distribution: probs nonnegative, summing to 1 within
/// sum_tol; labels carry the outcome values (eigenvalues, bin ids, ...).
struct ProbabilityTable {
  std::vector<double> probs;
  std::vector<double> labels;
};

ProbabilityTable make_probability_table(std::vector<double> probs,
                                        std::vector<double> labels,
                                        double sum_tol = 1e-10);

/// P_k = |c_k|^2 for unit-norm coefficients.
ProbabilityTable born_table(const std::vector<cplx>& coeffs,
                            const std::vector<double>& labels);

/// sum_k P_k * label_k.
double expectation_spectral(const ProbabilityTable& table);

/// <state|A|state> for a unit vector; the value must come out real to 1e-12.
double expectation_matrix(const HermitianOperator& op,
                          const std::vector<cplx>& state);

enum class Observable { position, momentum, kinetic };

/// Grid-quadrature expectation value of x, p or p^2/(2 mass) in whichever
/// representation is natural, transforming the state first if needed.
double expectation_grid(const WaveFunction& psi, Observable kind,
                        double mass = 1.0);

/// n independent inverse-CDF draws from the table with a splitmix64 stream
/// seeded by `seed`; returns per-outcome counts. One uniform per trial.
std::vector<std::int64_t> sample_outcomes(const ProbabilityTable& table,
                                          std::int64_t n, std::uint64_t seed);

/// Same counts as sample_outcomes, computed in `shards` contiguous trial
/// blocks; the shard starting at trial t0 re-seeds and discards t0 draws, so
/// the totals match the single stream exactly.
std::vector<std::int64_t> sample_outcomes_sharded(const ProbabilityTable& table,
                                                  std::int64_t n,
                                                  std::uint64_t seed,
                                                  int shards);

}  // namespace mirrorborn
