#include <mirrorborn/spectral.hpp>
#include <mirrorborn/states.hpp>

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace mirrorborn;

TEST_CASE("stationary packet: unit norm, centered moments, real-positive peak") {
  const GridSpec g = make_grid(1024, -20.0, 20.0);
  const WaveFunction psi = gaussian_packet({.x0 = 0.0, .p0 = 0.0, .sigma_x = 1.0}, g);
  CHECK(std::abs(norm(psi) - 1.0) <= 1e-12);
  CHECK(std::abs(expectation_grid(psi, Observable::position)) <= 1e-10);
  CHECK(std::abs(expectation_grid(psi, Observable::momentum)) <= 1e-10);

  int peak = 0;
  for (int j = 1; j < g.n; ++j)
    if (std::abs(psi.amp[j]) > std::abs(psi.amp[peak])) peak = j;
  CHECK(psi.amp[peak].imag() == 0.0);
  CHECK(psi.amp[peak].real() > 0.0);
}

TEST_CASE("shifted packet: mean position tracks x0") {
  const GridSpec g = make_grid(1024, -20.0, 20.0);
  const WaveFunction psi = gaussian_packet({.x0 = 1.0, .p0 = 0.0, .sigma_x = 1.0}, g);
  CHECK(expectation_grid(psi, Observable::position) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("boosted packet: momentum mean, kinetic energy, width product") {
  const GridSpec g = make_grid(1024, -20.0, 20.0);
  const WaveFunction psi = gaussian_packet({.x0 = 0.0, .p0 = 2.0, .sigma_x = 1.0}, g);
  CHECK(expectation_grid(psi, Observable::momentum) == doctest::Approx(2.0).epsilon(1e-10));
  // <p^2/2m> = (p0^2 + sigma_p^2)/2 with sigma_p = 1/(2 sigma_x).
  CHECK(expectation_grid(psi, Observable::kinetic, 1.0) ==
        doctest::Approx(2.125).epsilon(1e-10));

  // Second moments give sigma_x sigma_p = 1/2 on the grid.
  const WaveFunction mom = to_momentum(psi);
  const double p2 = expectation_grid(mom, Observable::kinetic, 0.5);  // <p^2>
  const double sp = std::sqrt(p2 - 4.0);
  CHECK(sp * 1.0 == doctest::Approx(0.5).epsilon(0.02));

  int argmax = 0, nearest = 0;
  for (int k = 1; k < g.n; ++k) {
    if (std::abs(mom.amp[k]) > std::abs(mom.amp[argmax])) argmax = k;
    if (std::abs(g.p_node(k) - 2.0) < std::abs(g.p_node(nearest) - 2.0)) nearest = k;
  }
  CHECK(argmax == nearest);
}

TEST_CASE("packet construction rejects bad parameters") {
  const GridSpec g = make_grid(64, -4.0, 4.0);
  CHECK_THROWS_AS(gaussian_packet({.x0 = 0.0, .p0 = 0.0, .sigma_x = 1.0}, g),
                  std::invalid_argument);  // 8 sigma does not fit
  const GridSpec wide = make_grid(512, -20.0, 20.0);
  CHECK_THROWS_AS(gaussian_packet({.x0 = 15.0, .p0 = 0.0, .sigma_x = 1.0}, wide),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussian_packet({.x0 = 0.0, .p0 = 0.0, .sigma_x = 0.0}, wide),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussian_packet({.x0 = 0.0, .p0 = 0.0, .sigma_x = -1.0}, wide),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussian_packet({.x0 = 0.0, .p0 = 0.0, .sigma_x = 1.0, .m = 0.0}, wide),
                  std::invalid_argument);
}

TEST_CASE("superpose: normalization, equal weights, error paths") {
  const GridSpec g = make_grid(64, -10.0, 10.0);
  const WaveFunction a = gaussian_packet({.x0 = -1.0, .p0 = 0.0, .sigma_x = 1.0}, g);

  const WaveFunction same = superpose({{cplx(0.5, 0.0), a}, {cplx(0.5, 0.0), a}});
  double diff = 0.0;
  for (int j = 0; j < g.n; ++j) diff = std::max(diff, std::abs(same.amp[j] - a.amp[j]));
  CHECK(diff <= 1e-12);

  // Disjoint single-bin states with equal weights carry probability 1/2 each.
  std::vector<cplx> e1(g.n), e2(g.n);
  e1[10] = 1.0;
  e2[40] = 1.0;
  const WaveFunction s1 = normalize(make_state(g, Rep::position, e1));
  const WaveFunction s2 = normalize(make_state(g, Rep::position, e2));
  const WaveFunction sup = superpose({{cplx(1.0, 0.0), s1}, {cplx(1.0, 0.0), s2}});
  CHECK(std::norm(sup.amp[10]) * g.dx == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::norm(sup.amp[40]) * g.dx == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(superpose({}), std::invalid_argument);
  CHECK_THROWS_AS(superpose({{cplx(1.0, 0.0), s1}, {cplx(-1.0, 0.0), s1}}),
                  std::invalid_argument);  // exact cancellation
  const GridSpec g2 = make_grid(64, -9.0, 10.0);
  const WaveFunction other = gaussian_packet({.x0 = 0.0, .p0 = 0.0, .sigma_x = 1.0}, g2);
  CHECK_THROWS_AS(superpose({{cplx(1.0, 0.0), a}, {cplx(1.0, 0.0), other}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(superpose({{cplx(1.0, 0.0), a}, {cplx(1.0, 0.0), to_momentum(a)}}),
                  std::invalid_argument);
}

TEST_CASE("plane wave phase values and sign asymmetry") {
  CHECK(plane_wave_phase(0.0, 3.0, 5.0, 1.0) == 0.0);
  CHECK(plane_wave_phase(2.0, 3.0, 0.0, 1.0) == -6.0);
  CHECK(plane_wave_phase(2.0, 3.0, 1.0, 1.0) == -4.0);
  // p -> -p flips the px term only: phi(-p) - phi(p) = 2 p x.
  const double p = 1.7, x = 2.3, t = 0.9, m = 1.3;
  CHECK(plane_wave_phase(-p, x, t, m) - plane_wave_phase(p, x, t, m) ==
        doctest::Approx(2.0 * p * x).epsilon(1e-12));
  // The energy term is even in p.
  CHECK(plane_wave_phase(-p, 0.0, t, m) == plane_wave_phase(p, 0.0, t, m));
  CHECK_THROWS_AS(plane_wave_phase(1.0, 1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(plane_wave_phase(1.0, 1.0, 1.0, -2.0), std::invalid_argument);
}
