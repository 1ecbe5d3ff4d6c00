#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "elastoline/surface.hpp"

using namespace elastoline;

namespace {
constexpr double kPi = std::numbers::pi;

Quadratic random_quadratic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Quadratic q;
  for (double& ci : q.c) ci = dist(rng);
  return q;
}
}  // namespace

TEST_CASE("plane geometry is flat") {
  const PlanePatch plane;
  const MetricChristoffel mc = metric_and_christoffel(plane, 0.3, -0.7);
  CHECK(mc.g.isApprox(Mat2::Identity(), 1e-15));
  CHECK(mc.gamma[0].norm() == 0.0);
  CHECK(mc.gamma[1].norm() == 0.0);
  const SecondFundamentalForm sf = second_fundamental_form(plane, 0.3, -0.7);
  CHECK(sf.l_n.norm() == 0.0);
  CHECK(sf.principal_curvatures[0] == 0.0);
  CHECK(sf.principal_curvatures[1] == 0.0);
}

TEST_CASE("sphere christoffel symbol") {
  const SpherePatch sphere(1.0);
  const double u = 1.0, v = 0.5;
  const MetricChristoffel mc = metric_and_christoffel(sphere, u, v);
  // colatitude-longitude chart: Gamma^u_{vv} = -sin u cos u
  CHECK(mc.gamma[0](1, 1) ==
        doctest::Approx(-std::sin(u) * std::cos(u)).epsilon(1e-12));
  // and Gamma^v_{uv} = cot u
  CHECK(mc.gamma[1](0, 1) ==
        doctest::Approx(std::cos(u) / std::sin(u)).epsilon(1e-12));
  // degenerate at the pole
  CHECK_THROWS_AS(metric_and_christoffel(sphere, 0.0, 0.3),
                  std::domain_error);
}

TEST_CASE("curvatures of sphere and cylinder") {
  const SpherePatch sphere(2.0);
  const SecondFundamentalForm sf = second_fundamental_form(sphere, 1.1, 0.4);
  CHECK(sf.principal_curvatures[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(sf.principal_curvatures[1] == doctest::Approx(0.5).epsilon(1e-10));
  // tr l_n (as endomorphism) = 1/R1 + 1/R2 = 1 for R = 2
  CHECK(sf.principal_curvatures[0] + sf.principal_curvatures[1] ==
        doctest::Approx(1.0).epsilon(1e-10));

  const CylinderPatch cyl(2.0);
  const SecondFundamentalForm sc = second_fundamental_form(cyl, 0.8, -0.5);
  CHECK(sc.principal_curvatures[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(sc.principal_curvatures[1] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("numeric patch agrees with the analytic jet") {
  const SpherePatch exact(1.5);
  NumericPatch numeric(
      [](double u, double v) {
        return Vec3(1.5 * std::sin(u) * std::cos(v),
                    1.5 * std::sin(u) * std::sin(v), 1.5 * std::cos(u));
      },
      kPi);
  numeric.orientation = -1.0;
  const double u = 1.2, v = 0.9;
  const PatchJet ja = exact.jet(u, v);
  const PatchJet jn = numeric.jet(u, v);
  CHECK((ja.d1 - jn.d1).norm() < 1e-9);
  CHECK((ja.d2 - jn.d2).norm() < 1e-9);
  CHECK((ja.d11 - jn.d11).norm() < 1e-6);
  CHECK((ja.d12 - jn.d12).norm() < 1e-6);
  CHECK((ja.d22 - jn.d22).norm() < 1e-6);
  const SecondFundamentalForm sa = second_fundamental_form(exact, u, v);
  const SecondFundamentalForm sn = second_fundamental_form(numeric, u, v);
  CHECK(sa.principal_curvatures[0] ==
        doctest::Approx(sn.principal_curvatures[0]).epsilon(1e-5));
}

TEST_CASE("special divergence on simple configurations") {
  // constant field on a plane
  const PlanePatch plane;
  const PolynomialStressField constant(Quadratic::constant(2.0),
                                       Quadratic::constant(-0.5),
                                       Quadratic::constant(1.0));
  CHECK(special_divergence(plane, constant, 0.2, 0.4).norm() == 0.0);
  const DivergenceSplit plane_split =
      divergence_decomposition(plane, constant, 0.2, 0.4);
  CHECK(plane_split.normal_part.norm() == 0.0);
  CHECK(plane_split.tangential_part.norm() == 0.0);

  // constant isotropic field on a sphere: sigma_hat (1/R1 + 1/R2) along n
  const SpherePatch sphere(2.0);
  const IsotropicStressField iso(sphere, Quadratic::constant(3.0));
  const double u = 1.3, v = 0.6;
  const Vec3 div = special_divergence(sphere, iso, u, v);
  const Vec3 n = sphere.normal(u, v);
  CHECK(div.norm() == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(div.dot(n) == doctest::Approx(3.0).epsilon(1e-10));
  const DivergenceSplit split = divergence_decomposition(sphere, iso, u, v);
  CHECK(split.tangential_part.norm() < 1e-12);
}

TEST_CASE("decomposition identity for random polynomial fields") {
  std::mt19937_64 rng(42);
  const SpherePatch sphere(1.3);
  const CylinderPatch cyl(0.8);
  const GraphPatch graph(Quadratic{{0.2, 0.3, -0.4, 0.25, -0.15, 0.35}});
  const PlanePatch plane;
  const SurfacePatch* patches[] = {&sphere, &cyl, &graph, &plane};
  const double at[][2] = {{1.1, 0.6}, {0.7, 0.4}, {0.3, -0.2}, {0.5, 0.5}};
  for (int trial = 0; trial < 50; ++trial) {
    const int pick = trial % 4;
    const PolynomialStressField field(random_quadratic(rng),
                                      random_quadratic(rng),
                                      random_quadratic(rng));
    const double u = at[pick][0], v = at[pick][1];
    const DivergenceSplit split =
        divergence_decomposition(*patches[pick], field, u, v);
    CHECK(split.identity_error <= 1e-8);
    // orthogonality of the two parts
    const PatchJet j = patches[pick]->jet(u, v);
    const double scale = std::max(1.0, split.normal_part.norm());
    CHECK(std::abs(split.normal_part.dot(j.d1)) <= 1e-10 * scale);
    CHECK(std::abs(split.normal_part.dot(j.d2)) <= 1e-10 * scale);
    const Vec3 n = patches[pick]->normal(u, v);
    CHECK(std::abs(split.tangential_part.dot(n)) <=
          1e-10 * std::max(1.0, split.tangential_part.norm()));
  }
}

TEST_CASE("asymmetric stress components are rejected") {
  struct Asymmetric : SurfaceStressField {
    Mat2 components(double, double) const override {
      Mat2 s;
      s << 1.0, 0.5, 0.2, 1.0;  // 0.5 vs 0.2
      return s;
    }
    std::array<Mat2, 2> derivatives(double, double) const override {
      return {Mat2::Zero(), Mat2::Zero()};
    }
  };
  const PlanePatch plane;
  CHECK_THROWS_AS(special_divergence(plane, Asymmetric{}, 0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("laplace balance on the sphere") {
  const SpherePatch sphere(2.0);
  const IsotropicStressField iso(sphere, Quadratic::constant(3.0));
  SurfaceEnvironment env;
  env.pressure = -3.0 * (1.0 / 2.0 + 1.0 / 2.0);  // -sigma_hat (1/R1 + 1/R2)
  const SurfaceResidual res =
      surface_equilibrium_residual(sphere, iso, env, 1.0, 0.7);
  CHECK(res.residual.norm() <= 1e-10);
  CHECK(std::abs(res.normal) <= 1e-10);
  CHECK(res.tangential <= 1e-10);

  // all-zero environment, constant field on a plane
  const PlanePatch plane;
  const PolynomialStressField constant(Quadratic::constant(1.0),
                                       Quadratic::constant(0.0),
                                       Quadratic::constant(2.0));
  const SurfaceResidual flat = surface_equilibrium_residual(
      plane, constant, SurfaceEnvironment{}, 0.1, 0.2);
  CHECK(flat.residual.norm() == 0.0);

  // orientation warning
  SurfaceEnvironment wrong;
  wrong.expected_normal = -sphere.normal(1.0, 0.7);
  CHECK(surface_equilibrium_residual(sphere, iso, wrong, 1.0, 0.7)
            .orientation_warning);
}

TEST_CASE("hydrostatic equilibrium on a vertical plane") {
  // plane spanned by (y, z), gravity along -z, gamma(z) = g0 + rho g z
  const double rho_s = 2.0, g = 9.8;
  const PlanePatch vertical(Vec3::Zero(), Vec3::UnitY(), Vec3::UnitZ());
  Quadratic gamma;
  gamma.c = {5.0, 0.0, rho_s * g, 0.0, 0.0, 0.0};  // gamma = 5 + rho g v
  const IsotropicStressField field(vertical, gamma);
  SurfaceEnvironment env;
  env.rho_s = rho_s;
  env.gravity = Vec3(0.0, 0.0, -g);
  const SurfaceResidual res =
      surface_equilibrium_residual(vertical, field, env, 0.3, 1.2);
  CHECK(res.tangential <= 1e-12 * rho_s * g);
  CHECK(std::abs(res.normal) <= 1e-12 * rho_s * g);
}

TEST_CASE("strain and stress transforms") {
  const Mat2 I = Mat2::Identity();
  // identity transform
  const TransformData ident = TransformData::make(I, I, I);
  CHECK(ident.area_ratio == doctest::Approx(1.0));
  Mat2 eps;
  eps << 0.1, 0.03, 0.03, -0.2;
  CHECK(strain_to_lagrangian(ident, eps).isApprox(eps, 1e-15));
  CHECK(stress_to_lagrangian(ident, eps).isApprox(eps, 1e-15));

  // phi0 = 2 I with flat metrics: covariant pullback scales by 4
  const TransformData twice = TransformData::make(2.0 * I, I, I);
  CHECK(strain_to_lagrangian(twice, eps).isApprox(4.0 * eps, 1e-14));

  // phi0 = diag(2, 3): A = 6
  Mat2 diag;
  diag << 2.0, 0.0, 0.0, 3.0;
  CHECK(TransformData::make(diag, I, I).area_ratio ==
        doctest::Approx(6.0).epsilon(1e-14));

  // round trip
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Mat2 phi;
    do {
      phi << dist(rng), dist(rng), dist(rng), dist(rng);
    } while (std::abs(phi.determinant()) < 0.2);
    const TransformData t = TransformData::make(phi, I, I);
    Mat2 sym;
    const double a = dist(rng), b = dist(rng), c = dist(rng);
    sym << a, b, b, c;
    CHECK(strain_to_eulerian(t, strain_to_lagrangian(t, sym))
              .isApprox(sym, 1e-13));
    CHECK(stress_to_eulerian(t, stress_to_lagrangian(t, sym))
              .isApprox(sym, 1e-13));
  }

  CHECK_THROWS_AS(TransformData::make(Mat2::Zero(), I, I),
                  std::invalid_argument);
}

TEST_CASE("work of deformation is invariant") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int trial = 0; trial < 100; ++trial) {
    Mat2 phi;
    do {
      phi << dist(rng), dist(rng), dist(rng), dist(rng);
    } while (std::abs(phi.determinant()) < 0.15);
    Mat2 spd_seed;
    spd_seed << dist(rng), dist(rng), dist(rng), dist(rng);
    const Mat2 g_ref =
        spd_seed.transpose() * spd_seed + 0.2 * Mat2::Identity();
    spd_seed << dist(rng), dist(rng), dist(rng), dist(rng);
    const Mat2 g_pres =
        spd_seed.transpose() * spd_seed + 0.2 * Mat2::Identity();
    const TransformData t = TransformData::make(phi, g_ref, g_pres);

    Mat2 sigma, deps;
    double a = dist(rng), b = dist(rng), c = dist(rng);
    sigma << a, b, b, c;
    a = dist(rng), b = dist(rng), c = dist(rng);
    deps << a, b, b, c;

    const Mat2 pi = stress_to_lagrangian(t, sigma);
    const Mat2 de = strain_to_lagrangian(t, deps);
    const double lagrangian = (pi * de).trace();
    const double eulerian = (sigma * deps).trace();
    CHECK(std::abs(lagrangian - t.area_ratio * eulerian) <=
          1e-12 * std::max(1.0, std::abs(lagrangian)));
  }
}

TEST_CASE("builtin patch catalog") {
  CHECK_NOTHROW(make_builtin_patch("plane", {}));
  CHECK_NOTHROW(make_builtin_patch("sphere", {2.0}));
  CHECK_NOTHROW(make_builtin_patch("cylinder", {1.0}));
  CHECK_NOTHROW(make_builtin_patch("graph", {0.0, 0.1, 0.2, 0.3, 0.0, 0.1}));
  CHECK_THROWS_AS(make_builtin_patch("torus", {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin_patch("sphere", {}), std::invalid_argument);
}
