#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "elastoline/contact_line.hpp"

using namespace elastoline;

namespace {
constexpr double kPi = std::numbers::pi;

// feasible configuration: stress components chosen so that the fixed-line
// balance holds exactly, which the three Young forms all presuppose
LineConfig feasible_random(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang_f(0.4, 2.2);
  std::uniform_real_distribution<double> ang_b(0.5, 2.6);
  std::uniform_real_distribution<double> pos(0.2, 2.0);
  std::uniform_real_distribution<double> sym(-0.8, 0.8);
  double phi_f, phi_b, phi_fp;
  do {
    phi_f = ang_f(rng);
    phi_b = ang_b(rng);
    phi_fp = 2.0 * kPi - phi_f - phi_b;
  } while (phi_fp < 0.3 || phi_fp > 2.0 * kPi - 0.3);
  LineConfig c = LineConfig::from_angles(phi_f, phi_fp, phi_b);
  c.gamma_ffp = pos(rng);
  c.gamma_bf = pos(rng);
  c.gamma_bfp = pos(rng);
  c.ar_nn = pos(rng);
  c.ar_tn = sym(rng);
  c.sigma_bfp_tn = sym(rng);
  c.sigma_bf_tn = -c.sigma_bfp_tn;
  c.sigma_bfp_nn = c.gamma_ffp * std::sin(phi_f) / std::sin(phi_b);
  c.sigma_bf_nn =
      -c.sigma_bfp_nn * std::cos(phi_b) - c.gamma_ffp * std::cos(phi_f);
  return c;
}
}  // namespace

TEST_CASE("symmetric half-space configuration balances") {
  // rho = 0.5: phi = pi/3
  const LineConfig c = symmetric_line_config(1.0, 1.0);
  CHECK(line_force_residual(c).norm() <= 1e-12);
  CHECK(c.phi_b == doctest::Approx(2.0 * kPi / 3.0));
  // form B is satisfied in the symmetric case
  CHECK(std::abs(modified_young_residual(c, YoungForm::B)) <= 1e-12);

  // all tensions zero
  LineConfig zero = LineConfig::from_angles(kPi / 2, kPi / 2, kPi);
  zero.gamma_ffp = 0.0;
  CHECK(line_force_residual(zero).norm() == 0.0);
}

TEST_CASE("three-fluid neumann triangle closes") {
  // body is a fluid: isotropic surface stress = gamma on both sides; the
  // law of sines closes the triangle of the three tensions
  const double phi_f = 1.9, phi_b = 2.1;
  const double phi_fp = 2.0 * kPi - phi_f - phi_b;
  LineConfig c = LineConfig::from_angles(phi_f, phi_fp, phi_b);
  c.gamma_ffp = 1.0;
  c.gamma_bf = std::sin(phi_fp) / std::sin(phi_b);
  c.gamma_bfp = std::sin(phi_f) / std::sin(phi_b);
  c.sigma_bf_nn = c.gamma_bf;
  c.sigma_bfp_nn = c.gamma_bfp;
  c.sigma_bf_tn = c.sigma_bfp_tn = 0.0;
  CHECK(line_force_residual(c).norm() <= 1e-12);
}

TEST_CASE("classical young limit") {
  // undeformable body: phi_b = pi, a_r = (1, 0)
  LineConfig c = LineConfig::from_angles(kPi / 3.0, 2.0 * kPi / 3.0, kPi);
  c.gamma_bf = 1.0;
  c.gamma_bfp = 1.5;
  c.gamma_ffp = 1.0;
  c.ar_nn = 1.0;
  c.ar_tn = 0.0;
  const double r = modified_young_residual(c, YoungForm::C);
  // -gamma_bf + gamma_bf' - gamma_ff' cos(phi_f) = -1 + 1.5 - 0.5 = 0
  CHECK(r == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(classical_young_residual(1.0, 1.5, 1.0, kPi / 3.0) ==
        doctest::Approx(0.0));

  // convergence rate O(pi - phi_b) toward the classical residual
  double prev = -1.0;
  for (const double delta : {1e-2, 1e-3, 1e-4}) {
    LineConfig near = LineConfig::from_angles(
        kPi / 3.0, 2.0 * kPi / 3.0 + delta, kPi - delta);
    near.gamma_bf = 0.8;
    near.gamma_bfp = 1.2;
    near.gamma_ffp = 0.9;
    near.ar_nn = 1.0;
    near.ar_tn = 0.0;
    const double gap =
        std::abs(modified_young_residual(near, YoungForm::C) -
                 classical_young_residual(0.8, 1.2, 0.9, kPi / 3.0));
    if (prev > 0.0) CHECK(gap == doctest::Approx(prev / 10.0).epsilon(0.05));
    prev = gap;
  }

  // genuinely singular configuration: sin(phi_b) = 0 with ar_nn != 1
  LineConfig bad = LineConfig::from_angles(kPi / 3.0, 2.0 * kPi / 3.0, kPi);
  bad.ar_nn = 1.5;
  CHECK_THROWS_AS(modified_young_residual(bad, YoungForm::C),
                  std::domain_error);
  CHECK_THROWS_AS(modified_young_residual(bad, YoungForm::B),
                  std::domain_error);
}

TEST_CASE("young forms agree on feasible configurations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const LineConfig c = feasible_random(rng);
    REQUIRE(line_force_residual(c).norm() <= 1e-12);
    const double a = modified_young_residual(c, YoungForm::A);
    const double b = modified_young_residual(c, YoungForm::B);
    const double cc = modified_young_residual(c, YoungForm::C);
    CHECK(std::abs(a - b) <= 1e-10);
    CHECK(std::abs(b - cc) <= 1e-10);
  }
}

TEST_CASE("free-line balance projections") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const LineConfig c = feasible_random(rng);
    const Eigen::Vector2d balance = free_line_balance(c);
    // nu projection is form A
    CHECK(balance(0) ==
          doctest::Approx(modified_young_residual(c, YoungForm::A))
              .epsilon(1e-12));
    // tau projection reproduces the tau component of the fixed-line balance
    const double tau_component = line_force_residual(c).dot(c.tau);
    CHECK(balance(1) == doctest::Approx(tau_component).epsilon(1e-12));
  }
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(LineConfig::from_angles(1.0, 1.0, 1.0),
                  std::invalid_argument);
  LineConfig c = LineConfig::from_angles(kPi / 2, kPi / 2, kPi);
  c.ar_nn = -0.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.ar_nn = 1.0;
  c.nu_bf = Vec3(0.0, 0.0, 1.0);  // parallel to tau
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
