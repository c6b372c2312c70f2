#include "doctest.h"

#include "envwit/exchange.hpp"
#include "envwit/oracle.hpp"
#include "envwit/witness.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace envwit;
using testing::Rng;
using std::numbers::pi;

TEST_SUITE("oracle") {

TEST_CASE("exponential oracle is the identity at t = 0") {
  const ExchangeParams params{1.9};
  CHECK((matrix_exponential_unitary(params, 0.0) - Mat4::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("exponential oracle is unitary") {
  const ExchangeParams params{1.1};
  Rng rng(61);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const Mat4 U = matrix_exponential_unitary(params, time(rng));
    CHECK((U * U.adjoint() - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("exponential oracle obeys the group law") {
  const ExchangeParams params{0.7};
  Rng rng(62);
  std::uniform_real_distribution<double> time(0.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    const double t1 = time(rng), t2 = time(rng);
    const Mat4 lhs = matrix_exponential_unitary(params, t1 + t2);
    const Mat4 rhs = matrix_exponential_unitary(params, t1) *
                     matrix_exponential_unitary(params, t2);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("exponential oracle solves the generator equation") {
  // Central difference of U(t) against -iJ K U(t).
  const ExchangeParams params{1.0};
  const double h = 1e-5;
  const Complex minus_i{0.0, -1.0};
  for (const double t : {0.3, 0.9, 1.7}) {
    const Mat4 derivative =
        (matrix_exponential_unitary(params, t + h) -
         matrix_exponential_unitary(params, t - h)) /
        (2.0 * h);
    const Mat4 expected = minus_i * params.J * exchange_operator() *
                          matrix_exponential_unitary(params, t);
    CHECK((derivative - expected).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("exponential oracle trace follows the eigenvalue pattern") {
  // Spectrum of the generator is {1, 1, 1, -3}.
  const ExchangeParams params{1.0};
  for (const double t : {0.2, 0.8, 1.3}) {
    const Complex tr = matrix_exponential_unitary(params, t).trace();
    const Complex expected = 3.0 * std::exp(Complex{0.0, -params.J * t}) +
                             std::exp(Complex{0.0, 3.0 * params.J * t});
    CHECK(std::abs(tr - expected) < 1e-13);
  }
}

TEST_CASE("phase-insensitive distance collapses global phases") {
  Rng rng(63);
  const ExchangeParams params{1.0};
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  for (int i = 0; i < 50; ++i) {
    const Mat4 U = exchange_unitary(params, 0.1 * i);
    const Complex phase = std::exp(Complex{0.0, angle(rng)});
    CHECK(phase_insensitive_distance(U, phase * U) < 1e-14);
  }
}

TEST_CASE("phase-insensitive distance detects genuine differences") {
  Mat4 cz = Mat4::Identity();
  cz(3, 3) = -1.0;
  // Best alignment for I vs diag(1,1,1,-1) keeps phase 1: distance 2.
  CHECK(phase_insensitive_distance(Mat4::Identity(), cz) ==
        doctest::Approx(2.0).epsilon(1e-12));
  const ExchangeParams params{1.0};
  CHECK(phase_insensitive_distance(exchange_unitary(params, 0.2),
                                   exchange_unitary(params, 0.6)) > 0.1);
}

TEST_CASE("closed-form unitary matches the oracle across couplings") {
  Rng rng(64);
  std::uniform_real_distribution<double> time(0.0, 9.0);
  for (const double J : {0.5, 1.0, 2.7}) {
    const ExchangeParams params{J};
    for (int i = 0; i < 40; ++i) {
      const double t = time(rng);
      CHECK(phase_insensitive_distance(exchange_unitary(params, t),
                                       matrix_exponential_unitary(params, t)) <
            1e-10);
    }
  }
}

TEST_CASE("fibonacci sphere points are unit vectors") {
  const int n = 500;
  for (int i = 0; i < n; ++i)
    CHECK(std::abs(fibonacci_sphere_point(i, n).norm() - 1.0) < 1e-14);
}

TEST_CASE("fibonacci sphere covers the sphere") {
  // Every random direction has a grid point within the expected angular gap.
  const int n = 1000;
  std::vector<Vec3> grid;
  grid.reserve(n);
  for (int i = 0; i < n; ++i) grid.push_back(fibonacci_sphere_point(i, n));
  Rng rng(65);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const Vec3 u = testing::random_unit(rng);
    double best = 10.0;
    for (const Vec3& g : grid) best = std::min(best, (u - g).norm());
    worst = std::max(worst, best);
  }
  // Mean spacing is sqrt(4 pi / n) ~ 0.112; allow a generous margin.
  CHECK(worst < 0.2);
}

TEST_CASE("fibonacci sphere spans both hemispheres") {
  const int n = 64;
  double zmin = 1.0, zmax = -1.0;
  for (int i = 0; i < n; ++i) {
    const double z = fibonacci_sphere_point(i, n).z();
    zmin = std::min(zmin, z);
    zmax = std::max(zmax, z);
  }
  CHECK(zmin < -0.95);
  CHECK(zmax > 0.95);
}

TEST_CASE("brute-force envelope stays inside the analytic one") {
  Rng rng(66);
  std::uniform_real_distribution<double> time(0.0, 3.0);
  const ExchangeParams params{1.0};
  for (int i = 0; i < 8; ++i) {
    const Vec3 s = testing::random_bloch(rng);
    const double t = time(rng);
    const EnvelopePoint env = envelope_heisenberg(s, params, t);
    const auto [lo, hi] = brute_force_envelope(s, params, t, 300);
    CHECK(lo >= env.z_min - 1e-12);
    CHECK(hi <= env.z_max + 1e-12);
  }
}

TEST_CASE("brute-force endpoints converge to the analytic envelope") {
  const ExchangeParams params{1.0};
  const Vec3 s{0.4, -0.2, 0.3};
  const double t = 0.6;
  const EnvelopePoint env = envelope_heisenberg(s, params, t);
  double previous_gap = 1e9;
  for (const int res : {100, 400, 1600, 6400}) {
    const auto [lo, hi] = brute_force_envelope(s, params, t, res);
    const double gap = std::max(env.z_max - hi, lo - env.z_min);
    CHECK(gap >= -1e-12);
    CHECK(gap < 6.0 / res);  // empirical O(1/res) rate with headroom
    CHECK(gap < previous_gap + 1e-12);
    previous_gap = gap;
  }
}

TEST_CASE("brute force at a degenerate time collapses to a point") {
  const ExchangeParams params{1.0};
  const Vec3 s{0.2, 0.1, -0.4};
  const auto [lo, hi] = brute_force_envelope(s, params, 0.0, 64);
  CHECK(std::abs(lo - s.z()) < 1e-13);
  CHECK(std::abs(hi - s.z()) < 1e-13);
}

TEST_CASE("brute force validates its resolution") {
  const ExchangeParams params{1.0};
  CHECK_THROWS_AS(brute_force_envelope(Vec3::Zero(), params, 0.5, 4),
                  std::invalid_argument);
  CHECK_NOTHROW(brute_force_envelope(Vec3::Zero(), params, 0.5, 8));
}

TEST_CASE("brute force rejects system vectors outside the ball") {
  const ExchangeParams params{1.0};
  CHECK_THROWS_AS(brute_force_envelope({1.2, 0.0, 0.0}, params, 0.5, 32),
                  std::invalid_argument);
}

}  // TEST_SUITE
