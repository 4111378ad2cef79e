#include <mirrorborn/oracles.hpp>
#include <mirrorborn/rng.hpp>
#include <mirrorborn/spectral.hpp>
#include <mirrorborn/stats.hpp>

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace mirrorborn;

namespace {

HermitianOperator random_hermitian(int k, SplitMix64& rng) {
  std::vector<cplx> e(std::size_t(k) * k);
  for (int i = 0; i < k; ++i) {
    e[std::size_t(i) * k + i] = 2.0 * rng.next_double() - 1.0;
    for (int j = i + 1; j < k; ++j) {
      const double re = 2.0 * rng.next_double() - 1.0;
      const double im = 2.0 * rng.next_double() - 1.0;
      e[std::size_t(i) * k + j] = {re, im};
      e[std::size_t(j) * k + i] = {re, -im};
    }
  }
  return make_hermitian(k, std::move(e));
}

std::vector<cplx> random_unit(int k, SplitMix64& rng) {
  std::vector<cplx> v(k);
  double n2 = 0.0;
  for (cplx& c : v) {
    c = {2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
    n2 += std::norm(c);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& c : v) c *= inv;
  return v;
}

}  // namespace

TEST_CASE("make_hermitian validates dimension and symmetry") {
  CHECK_THROWS_AS(make_hermitian(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_hermitian(2, std::vector<cplx>(3)), std::invalid_argument);
  // Off-diagonal pair that is not conjugate.
  CHECK_THROWS_AS(make_hermitian(2, {cplx(1), cplx(0, 1), cplx(0, 1), cplx(2)}),
                  std::invalid_argument);
  // Complex diagonal.
  CHECK_THROWS_AS(make_hermitian(2, {cplx(1, 0.5), cplx(0), cplx(0), cplx(2)}),
                  std::invalid_argument);
  const HermitianOperator ok =
      make_hermitian(2, {cplx(1), cplx(0, 1), cplx(0, -1), cplx(2)});
  CHECK(ok.at(0, 1) == std::conj(ok.at(1, 0)));
}

TEST_CASE("eigendecompose: exchange matrix") {
  const HermitianOperator H = make_hermitian(2, {cplx(0), cplx(1), cplx(1), cplx(0)});
  const SpectralDecomposition dec = eigendecompose(H);
  CHECK(dec.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(dec.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(dec.eigenvectors[0][0] - cplx(r)) <= 1e-12);
  CHECK(std::abs(dec.eigenvectors[0][1] - cplx(-r)) <= 1e-12);
  CHECK(std::abs(dec.eigenvectors[1][0] - cplx(r)) <= 1e-12);
  CHECK(std::abs(dec.eigenvectors[1][1] - cplx(r)) <= 1e-12);
  CHECK(dec.residual <= 1e-13 * 2.0);
}

TEST_CASE("eigendecompose: diagonal matrix sorts ascending with basis vectors") {
  const HermitianOperator H =
      make_hermitian(3, {cplx(3), cplx(0), cplx(0), cplx(0), cplx(1), cplx(0),
                         cplx(0), cplx(0), cplx(2)});
  const SpectralDecomposition dec = eigendecompose(H);
  CHECK(dec.eigenvalues[0] == 1.0);
  CHECK(dec.eigenvalues[1] == 2.0);
  CHECK(dec.eigenvalues[2] == 3.0);
  CHECK(dec.eigenvectors[0][1] == cplx(1.0));
  CHECK(dec.eigenvectors[1][2] == cplx(1.0));
  CHECK(dec.eigenvectors[2][0] == cplx(1.0));
}

TEST_CASE("eigendecompose: degenerate eigenvalues come out in a fixed order") {
  const HermitianOperator H =
      make_hermitian(2, {cplx(2), cplx(0), cplx(0), cplx(2)});
  const SpectralDecomposition dec = eigendecompose(H);
  CHECK(dec.eigenvalues[0] == 2.0);
  CHECK(dec.eigenvalues[1] == 2.0);
  CHECK(dec.eigenvectors[0][0] == cplx(1.0));
  CHECK(dec.eigenvectors[1][1] == cplx(1.0));
}

TEST_CASE("fixed seeded 3x3 matrix reproduces frozen entries and eigenvalues") {
  SplitMix64 rng(1729);
  const HermitianOperator H = random_hermitian(3, rng);
  // Entries frozen from the generator definition (draw order: diagonal, then
  // re/im of each upper entry, row by row).
  CHECK(H.at(0, 0).real() == doctest::Approx(0.50121529844860246).epsilon(1e-15));
  CHECK(H.at(0, 1).real() == doctest::Approx(-0.38826453934518668).epsilon(1e-15));
  CHECK(H.at(0, 1).imag() == doctest::Approx(0.17029655870971205).epsilon(1e-15));
  CHECK(H.at(0, 2).real() == doctest::Approx(0.11868722738066984).epsilon(1e-15));
  CHECK(H.at(0, 2).imag() == doctest::Approx(0.55330751815206924).epsilon(1e-15));
  CHECK(H.at(1, 1).real() == doctest::Approx(0.31650309948338018).epsilon(1e-15));
  CHECK(H.at(1, 2).real() == doctest::Approx(-0.88528792667501754).epsilon(1e-15));
  CHECK(H.at(1, 2).imag() == doctest::Approx(-0.11761869516980417).epsilon(1e-15));
  CHECK(H.at(2, 2).real() == doctest::Approx(0.27153993263482135).epsilon(1e-15));

  // Frozen roots of the characteristic polynomial, solved in radicals.
  const double expected[3] = {-0.8216759526456414, 0.4459337025569282,
                              1.4650005806555173};
  const SpectralDecomposition dec = eigendecompose(H);
  const std::array<double, 3> oracle = cubic_hermitian_eigenvalues(H);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(dec.eigenvalues[i] - expected[i]) <= 1e-9);
    CHECK(std::abs(oracle[i] - expected[i]) <= 1e-12);
    CHECK(std::abs(dec.eigenvalues[i] - oracle[i]) <= 1e-9);
  }
}

TEST_CASE("cubic oracle handles diagonal and degenerate cases") {
  const HermitianOperator D =
      make_hermitian(3, {cplx(3), cplx(0), cplx(0), cplx(0), cplx(1), cplx(0),
                         cplx(0), cplx(0), cplx(2)});
  const std::array<double, 3> r = cubic_hermitian_eigenvalues(D);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(3.0).epsilon(1e-12));

  const HermitianOperator I3 =
      make_hermitian(3, {cplx(5), cplx(0), cplx(0), cplx(0), cplx(5), cplx(0),
                         cplx(0), cplx(0), cplx(5)});
  for (double v : cubic_hermitian_eigenvalues(I3))
    CHECK(v == doctest::Approx(5.0).epsilon(1e-12));

  CHECK_THROWS_AS(
      cubic_hermitian_eigenvalues(make_hermitian(2, {cplx(1), cplx(0), cplx(0), cplx(1)})),
      std::invalid_argument);
}

TEST_CASE("decomposition is deterministic bit for bit") {
  SplitMix64 rng(555);
  const HermitianOperator H = random_hermitian(6, rng);
  const SpectralDecomposition a = eigendecompose(H);
  const SpectralDecomposition b = eigendecompose(H);
  REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
  bool identical = true;
  for (int i = 0; i < 6; ++i) {
    identical = identical && (a.eigenvalues[i] == b.eigenvalues[i]);
    for (int j = 0; j < 6; ++j)
      identical = identical && (a.eigenvectors[i][j] == b.eigenvectors[i][j]);
  }
  CHECK(identical);
}

TEST_CASE("spectrum is invariant under unitary conjugation") {
  SplitMix64 rng(777);
  const HermitianOperator A = random_hermitian(5, rng);
  const HermitianOperator B = random_hermitian(5, rng);
  const SpectralDecomposition db = eigendecompose(B);  // rows form a unitary

  const int k = 5;
  std::vector<cplx> conj_entries(std::size_t(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      cplx sum = 0.0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          sum += db.eigenvectors[a][i] * A.at(i, j) * std::conj(db.eigenvectors[b][j]);
      conj_entries[std::size_t(a) * k + b] = sum;
    }
  const SpectralDecomposition da = eigendecompose(A);
  const SpectralDecomposition dc = eigendecompose(make_hermitian(k, conj_entries));
  for (int i = 0; i < k; ++i)
    CHECK(std::abs(da.eigenvalues[i] - dc.eigenvalues[i]) <= 1e-9);
}

TEST_CASE("random ensembles: orthonormality, reconstruction, two expectation paths") {
  SplitMix64 rng(2024);
  double gram = 0.0, recon = 0.0, two_path = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + (trial % 7);
    const HermitianOperator H = random_hermitian(k, rng);
    const SpectralDecomposition dec = eigendecompose(H);

    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) {
        cplx dot = 0.0;
        for (int t = 0; t < k; ++t)
          dot += std::conj(dec.eigenvectors[r][t]) * dec.eigenvectors[s][t];
        gram = std::max(gram, std::abs(dot - (r == s ? 1.0 : 0.0)));
      }
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        cplx sum = 0.0;
        for (int r = 0; r < k; ++r)
          sum += dec.eigenvalues[r] * dec.eigenvectors[r][a] *
                 std::conj(dec.eigenvectors[r][b]);
        recon = std::max(recon, std::abs(sum - H.at(a, b)));
      }

    const std::vector<cplx> psi = random_unit(k, rng);
    const std::vector<cplx> c = coefficients(dec, psi);
    const ProbabilityTable table = born_table(c, dec.eigenvalues);
    two_path = std::max(two_path, std::abs(expectation_matrix(H, psi) -
                                           expectation_spectral(table)));
  }
  CHECK(gram <= 1e-10);
  CHECK(recon <= 1e-9);
  CHECK(two_path <= 1e-10);
}

TEST_CASE("coefficients: eigenvector input gives a basis coefficient vector") {
  SplitMix64 rng(31337);
  const HermitianOperator H = random_hermitian(4, rng);
  const SpectralDecomposition dec = eigendecompose(H);
  const std::vector<cplx> c = coefficients(dec, dec.eigenvectors[2]);
  for (int r = 0; r < 4; ++r)
    CHECK(std::abs(c[r] - (r == 2 ? cplx(1.0) : cplx(0.0))) <= 1e-12);

  CHECK_THROWS_AS(coefficients(dec, std::vector<cplx>(3)), std::invalid_argument);
  CHECK_THROWS_AS(coefficients(dec, std::vector<cplx>(4, cplx(1.0))),
                  std::invalid_argument);  // not unit norm
}

TEST_CASE("born_table squares coefficient moduli") {
  const std::vector<double> labels = {1.0, 2.0};
  const ProbabilityTable a = born_table({cplx(1.0), cplx(0.0)}, labels);
  CHECK(a.probs[0] == 1.0);
  CHECK(a.probs[1] == 0.0);

  const double r = 1.0 / std::sqrt(2.0);
  const ProbabilityTable b = born_table({cplx(r), cplx(r)}, labels);
  CHECK(b.probs[0] == doctest::Approx(0.5).epsilon(1e-14));

  const ProbabilityTable c = born_table({cplx(0.6), cplx(0.0, 0.8)}, labels);
  CHECK(c.probs[0] == doctest::Approx(0.36).epsilon(1e-14));
  CHECK(c.probs[1] == doctest::Approx(0.64).epsilon(1e-14));
  CHECK(expectation_spectral(c) == doctest::Approx(1.64).epsilon(1e-14));

  CHECK_THROWS_AS(born_table({cplx(1.0), cplx(1.0)}, labels), std::invalid_argument);
}

TEST_CASE("probability table validation") {
  CHECK_THROWS_AS(make_probability_table({0.5, 0.6}, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_probability_table({-0.1, 1.1}, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_probability_table({0.5, 0.5}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_probability_table({}, {}), std::invalid_argument);
}

TEST_CASE("expectation values through the matrix path") {
  const HermitianOperator X = make_hermitian(2, {cplx(0), cplx(1), cplx(1), cplx(0)});
  CHECK(expectation_matrix(X, {cplx(1.0), cplx(0.0)}) == 0.0);
  const HermitianOperator D = make_hermitian(2, {cplx(1), cplx(0), cplx(0), cplx(2)});
  CHECK(expectation_matrix(D, {cplx(0.6), cplx(0.0, 0.8)}) ==
        doctest::Approx(1.64).epsilon(1e-14));
  // Spectral path on an explicit table.
  const ProbabilityTable t = make_probability_table({0.5, 0.5}, {-1.0, 1.0});
  CHECK(expectation_spectral(t) == 0.0);
  const ProbabilityTable u = make_probability_table({1.0, 0.0}, {5.0, 7.0});
  CHECK(expectation_spectral(u) == 5.0);
}

TEST_CASE("sampling: point mass, determinism, frozen fair-coin counts") {
  const ProbabilityTable point = make_probability_table({1.0, 0.0}, {0.0, 1.0});
  const std::vector<std::int64_t> c0 = sample_outcomes(point, 1000, 9);
  CHECK(c0[0] == 1000);
  CHECK(c0[1] == 0);

  const ProbabilityTable fair = make_probability_table({0.5, 0.5}, {0.0, 1.0});
  const std::vector<std::int64_t> a = sample_outcomes(fair, 100000, 3);
  CHECK(a == sample_outcomes(fair, 100000, 3));

  // Frozen from an independent implementation of the same stream and rule.
  const std::vector<std::int64_t> big = sample_outcomes(fair, 1000000, 42);
  CHECK(big[0] == 499703);
  CHECK(big[1] == 500297);
}

TEST_CASE("sharded sampling matches the single stream exactly") {
  const ProbabilityTable t = make_probability_table({0.2, 0.3, 0.5}, {0.0, 1.0, 2.0});
  const std::vector<std::int64_t> whole = sample_outcomes(t, 10001, 77);
  for (int shards : {1, 2, 7, 16})
    CHECK(sample_outcomes_sharded(t, 10001, 77, shards) == whole);
}

TEST_CASE("sampler passes a chi-square calibration sweep") {
  const ProbabilityTable t =
      make_probability_table({0.1, 0.2, 0.3, 0.4}, {0.0, 1.0, 2.0, 3.0});
  const double q = chi_square_quantile(0.999, 3);
  SplitMix64 seq(424242);
  int below = 0;
  for (int i = 0; i < 20; ++i) {
    const std::vector<std::int64_t> c = sample_outcomes(t, 100000, seq.next_u64());
    if (chi_square_statistic(c, t.probs) < q) ++below;
  }
  CHECK(below >= 18);
}
