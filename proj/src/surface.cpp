#include "elastoline/surface.hpp"

#include <cmath>
#include <stdexcept>

namespace elastoline {

namespace {

void check_symmetric(const Mat2& s) {
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  if (std::abs(s(0, 1) - s(1, 0)) > 1e-12 * scale)
    throw std::invalid_argument(
        "surface stress components must be symmetric");
}

}  // namespace

Vec3 SurfacePatch::normal(double u, double v) const {
  const PatchJet j = jet(u, v);
  const Vec3 cross = j.d1.cross(j.d2);
  const double len = cross.norm();
  if (len <= 0.0)
    throw std::domain_error("SurfacePatch: degenerate tangent plane");
  return orientation * cross / len;
}

PlanePatch::PlanePatch()
    : origin_(Vec3::Zero()), a1_(Vec3::UnitX()), a2_(Vec3::UnitY()) {}

PlanePatch::PlanePatch(Vec3 origin, Vec3 a1, Vec3 a2)
    : origin_(std::move(origin)), a1_(std::move(a1)), a2_(std::move(a2)) {}

PatchJet PlanePatch::jet(double u, double v) const {
  PatchJet j;
  j.x = origin_ + u * a1_ + v * a2_;
  j.d1 = a1_;
  j.d2 = a2_;
  j.d11 = j.d12 = j.d22 = Vec3::Zero();
  return j;
}

SpherePatch::SpherePatch(double radius) : radius_(radius) {
  if (radius <= 0.0)
    throw std::invalid_argument("SpherePatch: radius must be > 0");
  orientation = -1.0;  // inward normal: curvatures +1/R
}

PatchJet SpherePatch::jet(double u, double v) const {
  const double su = std::sin(u), cu = std::cos(u);
  const double sv = std::sin(v), cv = std::cos(v);
  const double R = radius_;
  PatchJet j;
  j.x = R * Vec3(su * cv, su * sv, cu);
  j.d1 = R * Vec3(cu * cv, cu * sv, -su);
  j.d2 = R * Vec3(-su * sv, su * cv, 0.0);
  j.d11 = -j.x;
  j.d12 = R * Vec3(-cu * sv, cu * cv, 0.0);
  j.d22 = R * Vec3(-su * cv, -su * sv, 0.0);
  return j;
}

CylinderPatch::CylinderPatch(double radius) : radius_(radius) {
  if (radius <= 0.0)
    throw std::invalid_argument("CylinderPatch: radius must be > 0");
  orientation = -1.0;  // normal toward the axis: curvatures {1/R, 0}
}

PatchJet CylinderPatch::jet(double u, double v) const {
  const double R = radius_;
  PatchJet j;
  j.x = Vec3(R * std::cos(u), R * std::sin(u), v);
  j.d1 = Vec3(-R * std::sin(u), R * std::cos(u), 0.0);
  j.d2 = Vec3(0.0, 0.0, 1.0);
  j.d11 = Vec3(-R * std::cos(u), -R * std::sin(u), 0.0);
  j.d12 = Vec3::Zero();
  j.d22 = Vec3::Zero();
  return j;
}

GraphPatch::GraphPatch(Quadratic f) : f_(f) {}

PatchJet GraphPatch::jet(double u, double v) const {
  const Eigen::Vector2d df = f_.grad(u, v);
  PatchJet j;
  j.x = Vec3(u, v, f_.value(u, v));
  j.d1 = Vec3(1.0, 0.0, df(0));
  j.d2 = Vec3(0.0, 1.0, df(1));
  j.d11 = Vec3(0.0, 0.0, 2.0 * f_.c[3]);
  j.d12 = Vec3(0.0, 0.0, f_.c[4]);
  j.d22 = Vec3(0.0, 0.0, 2.0 * f_.c[5]);
  return j;
}

NumericPatch::NumericPatch(std::function<Vec3(double, double)> position,
                           double domain_size)
    : position_(std::move(position)), h_(1e-4 * domain_size) {
  if (domain_size <= 0.0)
    throw std::invalid_argument("NumericPatch: domain size must be > 0");
}

PatchJet NumericPatch::jet(double u, double v) const {
  const double h = h_;
  const auto f = position_;
  // fourth-order central stencils
  const auto d_u = [&](double uu, double vv) {
    return (-f(uu + 2 * h, vv) + 8.0 * f(uu + h, vv) - 8.0 * f(uu - h, vv) +
            f(uu - 2 * h, vv)) /
           (12.0 * h);
  };
  const auto d_v = [&](double uu, double vv) {
    return (-f(uu, vv + 2 * h) + 8.0 * f(uu, vv + h) - 8.0 * f(uu, vv - h) +
            f(uu, vv - 2 * h)) /
           (12.0 * h);
  };
  PatchJet j;
  j.x = f(u, v);
  j.d1 = d_u(u, v);
  j.d2 = d_v(u, v);
  j.d11 = (-f(u + 2 * h, v) + 16.0 * f(u + h, v) - 30.0 * f(u, v) +
           16.0 * f(u - h, v) - f(u - 2 * h, v)) /
          (12.0 * h * h);
  j.d22 = (-f(u, v + 2 * h) + 16.0 * f(u, v + h) - 30.0 * f(u, v) +
           16.0 * f(u, v - h) - f(u, v - 2 * h)) /
          (12.0 * h * h);
  j.d12 = (-d_v(u + 2 * h, v) + 8.0 * d_v(u + h, v) - 8.0 * d_v(u - h, v) +
           d_v(u - 2 * h, v)) /
          (12.0 * h);
  return j;
}

std::shared_ptr<SurfacePatch> make_builtin_patch(
    const std::string& name, const std::vector<double>& params) {
  if (name == "plane") return std::make_shared<PlanePatch>();
  if (name == "sphere") {
    if (params.empty())
      throw std::invalid_argument("sphere patch needs a radius");
    return std::make_shared<SpherePatch>(params[0]);
  }
  if (name == "cylinder") {
    if (params.empty())
      throw std::invalid_argument("cylinder patch needs a radius");
    return std::make_shared<CylinderPatch>(params[0]);
  }
  if (name == "graph") {
    Quadratic f;
    for (size_t i = 0; i < f.c.size() && i < params.size(); ++i)
      f.c[i] = params[i];
    return std::make_shared<GraphPatch>(f);
  }
  throw std::invalid_argument("unknown patch name: " + name);
}

MetricChristoffel metric_and_christoffel(const SurfacePatch& patch, double u,
                                         double v) {
  const PatchJet j = patch.jet(u, v);
  MetricChristoffel out;
  out.g(0, 0) = j.d1.dot(j.d1);
  out.g(0, 1) = out.g(1, 0) = j.d1.dot(j.d2);
  out.g(1, 1) = j.d2.dot(j.d2);
  out.det_g = out.g.determinant();
  const double scale = std::max(1.0, out.g.cwiseAbs().maxCoeff());
  if (out.det_g <= 1e-14 * scale * scale)
    throw std::domain_error("metric_and_christoffel: degenerate metric");
  out.g_inv = out.g.inverse();

  // dg[c](a, b) = d_c g_ab, assembled from the jet
  const Vec3 d[2] = {j.d1, j.d2};
  const Vec3 dd[2][2] = {{j.d11, j.d12}, {j.d12, j.d22}};
  Mat2 dg[2];
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        dg[c](a, b) = dd[c][a].dot(d[b]) + d[a].dot(dd[c][b]);

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        double sum = 0.0;
        for (int e = 0; e < 2; ++e)
          sum += out.g_inv(a, e) * (dg[b](e, c) + dg[c](e, b) - dg[e](b, c));
        out.gamma[a](b, c) = 0.5 * sum;
      }
  return out;
}

SecondFundamentalForm second_fundamental_form(const SurfacePatch& patch,
                                              double u, double v) {
  const PatchJet j = patch.jet(u, v);
  const MetricChristoffel mc = metric_and_christoffel(patch, u, v);
  SecondFundamentalForm out;
  out.n = patch.normal(u, v);
  const Vec3 d[2] = {j.d1, j.d2};
  const Vec3 dd[2][2] = {{j.d11, j.d12}, {j.d12, j.d22}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Vec3 l = dd[a][b];
      for (int c = 0; c < 2; ++c) l -= mc.gamma[c](a, b) * d[c];
      out.l[a][b] = l;
      out.l_n(a, b) = l.dot(out.n);
    }
  // eigenvalues of the shape operator g^-1 l_n from its invariants
  const double tr = (mc.g_inv * out.l_n).trace();
  const double det = out.l_n.determinant() / mc.det_g;
  const double disc = std::max(0.0, tr * tr / 4.0 - det);
  out.principal_curvatures = {tr / 2.0 + std::sqrt(disc),
                              tr / 2.0 - std::sqrt(disc)};
  return out;
}

PolynomialStressField::PolynomialStressField(Quadratic s11, Quadratic s12,
                                             Quadratic s22)
    : s11_(s11), s12_(s12), s22_(s22) {}

Mat2 PolynomialStressField::components(double u, double v) const {
  Mat2 s;
  s(0, 0) = s11_.value(u, v);
  s(0, 1) = s(1, 0) = s12_.value(u, v);
  s(1, 1) = s22_.value(u, v);
  return s;
}

std::array<Mat2, 2> PolynomialStressField::derivatives(double u,
                                                       double v) const {
  std::array<Mat2, 2> ds;
  const Eigen::Vector2d d11 = s11_.grad(u, v);
  const Eigen::Vector2d d12 = s12_.grad(u, v);
  const Eigen::Vector2d d22 = s22_.grad(u, v);
  for (int c = 0; c < 2; ++c) {
    ds[c](0, 0) = d11(c);
    ds[c](0, 1) = ds[c](1, 0) = d12(c);
    ds[c](1, 1) = d22(c);
  }
  return ds;
}

IsotropicStressField::IsotropicStressField(const SurfacePatch& patch,
                                           Quadratic sigma_hat)
    : patch_(patch), sigma_hat_(sigma_hat) {}

Mat2 IsotropicStressField::components(double u, double v) const {
  const MetricChristoffel mc = metric_and_christoffel(patch_, u, v);
  return sigma_hat_.value(u, v) * mc.g_inv;
}

std::array<Mat2, 2> IsotropicStressField::derivatives(double u,
                                                      double v) const {
  const PatchJet j = patch_.jet(u, v);
  const MetricChristoffel mc = metric_and_christoffel(patch_, u, v);
  const Vec3 d[2] = {j.d1, j.d2};
  const Vec3 dd[2][2] = {{j.d11, j.d12}, {j.d12, j.d22}};
  const Eigen::Vector2d dhat = sigma_hat_.grad(u, v);
  const double hat = sigma_hat_.value(u, v);
  std::array<Mat2, 2> ds;
  for (int c = 0; c < 2; ++c) {
    Mat2 dg;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        dg(a, b) = dd[c][a].dot(d[b]) + d[a].dot(dd[c][b]);
    const Mat2 dginv = -mc.g_inv * dg * mc.g_inv;
    ds[c] = dhat(c) * mc.g_inv + hat * dginv;
  }
  return ds;
}

Vec3 special_divergence(const SurfacePatch& patch,
                        const SurfaceStressField& stress, double u,
                        double v) {
  const PatchJet j = patch.jet(u, v);
  const MetricChristoffel mc = metric_and_christoffel(patch, u, v);
  const Mat2 s = stress.components(u, v);
  check_symmetric(s);
  const std::array<Mat2, 2> ds = stress.derivatives(u, v);
  const Vec3 d[2] = {j.d1, j.d2};
  const Vec3 dd[2][2] = {{j.d11, j.d12}, {j.d12, j.d22}};

  // d_b (sigma^{ab} d_a) + Gamma^b_{bc} sigma^{ac} d_a
  Vec3 out = Vec3::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      out += ds[b](a, b) * d[a] + s(a, b) * dd[a][b];
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      double trgamma = 0.0;
      for (int b = 0; b < 2; ++b) trgamma += mc.gamma[b](b, c);
      out += trgamma * s(a, c) * d[a];
    }
  return out;
}

DivergenceSplit divergence_decomposition(const SurfacePatch& patch,
                                         const SurfaceStressField& stress,
                                         double u, double v) {
  const PatchJet j = patch.jet(u, v);
  const MetricChristoffel mc = metric_and_christoffel(patch, u, v);
  const SecondFundamentalForm sf = second_fundamental_form(patch, u, v);
  const Mat2 s = stress.components(u, v);
  check_symmetric(s);
  const std::array<Mat2, 2> ds = stress.derivatives(u, v);
  const Vec3 d[2] = {j.d1, j.d2};

  DivergenceSplit split;
  split.normal_part = Vec3::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) split.normal_part += s(a, b) * sf.l[a][b];

  // (div sigma_s)^a = d_b sigma^{ab} + Gamma^a_{bc} sigma^{cb}
  //                 + Gamma^b_{bc} sigma^{ac}
  split.tangential_part = Vec3::Zero();
  for (int a = 0; a < 2; ++a) {
    double div_a = 0.0;
    for (int b = 0; b < 2; ++b) {
      div_a += ds[b](a, b);
      for (int c = 0; c < 2; ++c)
        div_a += mc.gamma[a](b, c) * s(c, b) + mc.gamma[b](b, c) * s(a, c);
    }
    split.tangential_part += div_a * d[a];
  }

  const Vec3 direct = special_divergence(patch, stress, u, v);
  const Vec3 sum = split.normal_part + split.tangential_part;
  const double scale = std::max(1.0, direct.norm());
  split.identity_error = (sum - direct).norm() / scale;
  if (split.identity_error > 1e-8)
    throw std::runtime_error(
        "divergence_decomposition: decomposition identity violated "
        "(inconsistent differencing)");
  return split;
}

SurfaceResidual surface_equilibrium_residual(const SurfacePatch& patch,
                                             const SurfaceStressField& stress,
                                             const SurfaceEnvironment& env,
                                             double u, double v) {
  SurfaceResidual out;
  const Vec3 n = patch.normal(u, v);
  if (env.expected_normal.has_value() &&
      env.expected_normal->dot(n) < 0.0)
    out.orientation_warning = true;
  out.residual = special_divergence(patch, stress, u, v) +
                 env.rho_s * env.gravity + env.traction + env.pressure * n;
  out.normal = out.residual.dot(n);
  out.tangential = (out.residual - out.normal * n).norm();
  return out;
}

TransformData TransformData::make(const Mat2& phi0, const Mat2& g_ref,
                                  const Mat2& g_pres) {
  const double det = phi0.determinant();
  if (std::abs(det) <= 1e-14 * std::max(1.0, phi0.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("TransformData: phi0 is singular");
  TransformData t;
  t.phi0 = phi0;
  t.g_ref = g_ref;
  t.g_pres = g_pres;
  const double num = (phi0.transpose() * g_pres * phi0).determinant();
  const double den = g_ref.determinant();
  if (num <= 0.0 || den <= 0.0)
    throw std::invalid_argument("TransformData: metrics must be positive");
  t.area_ratio = std::sqrt(num / den);
  return t;
}

Mat2 strain_to_lagrangian(const TransformData& t, const Mat2& eps_eulerian) {
  return t.phi0.transpose() * eps_eulerian * t.phi0;
}

Mat2 strain_to_eulerian(const TransformData& t, const Mat2& e_lagrangian) {
  const Mat2 inv = t.phi0.inverse();
  return inv.transpose() * e_lagrangian * inv;
}

Mat2 stress_to_lagrangian(const TransformData& t, const Mat2& sigma_eulerian) {
  const Mat2 inv = t.phi0.inverse();
  return t.area_ratio * inv * sigma_eulerian * inv.transpose();
}

Mat2 stress_to_eulerian(const TransformData& t, const Mat2& pi_lagrangian) {
  return (1.0 / t.area_ratio) * t.phi0 * pi_lagrangian * t.phi0.transpose();
}

}  // namespace elastoline
