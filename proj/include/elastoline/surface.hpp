#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace elastoline {

using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;

/// Bivariate quadratic c0 + c1 u + c2 v + c3 u^2 + c4 uv + c5 v^2.
struct Quadratic {
  std::array<double, 6> c{};
  double value(double u, double v) const {
    return c[0] + c[1] * u + c[2] * v + c[3] * u * u + c[4] * u * v +
           c[5] * v * v;
  }
  Eigen::Vector2d grad(double u, double v) const {
    return {c[1] + 2.0 * c[3] * u + c[4] * v, c[2] + c[4] * u + 2.0 * c[5] * v};
  }
  static Quadratic constant(double value) { return Quadratic{{value}}; }
};

/// Position and parametric derivatives of an embedded surface at a point.
struct PatchJet {
  Vec3 x;
  Vec3 d1, d2;         // first derivatives
  Vec3 d11, d12, d22;  // second derivatives
};

/// Parametrized surface patch over a rectangular domain.
///
/// Normal convention: `orientation` fixes the sign of d1 x d2 so that n
/// points from the fluid into the body; a principal curvature is positive
/// when its centre lies on the side of n.  The built-in sphere and cylinder
/// choose the inward normal, which makes their curvatures +1/R.
class SurfacePatch {
 public:
  virtual ~SurfacePatch() = default;
  virtual PatchJet jet(double u, double v) const = 0;
  Vec3 normal(double u, double v) const;
  double orientation = 1.0;
};

/// x = origin + u a1 + v a2.
class PlanePatch : public SurfacePatch {
 public:
  PlanePatch();
  PlanePatch(Vec3 origin, Vec3 a1, Vec3 a2);
  PatchJet jet(double u, double v) const override;

 private:
  Vec3 origin_, a1_, a2_;
};

/// Colatitude-longitude chart, u in (0, pi), v longitude; inward normal.
class SpherePatch : public SurfacePatch {
 public:
  explicit SpherePatch(double radius);
  PatchJet jet(double u, double v) const override;
  double radius() const { return radius_; }

 private:
  double radius_;
};

/// x = (R cos u, R sin u, v); normal toward the axis.
class CylinderPatch : public SurfacePatch {
 public:
  explicit CylinderPatch(double radius);
  PatchJet jet(double u, double v) const override;

 private:
  double radius_;
};

/// Graph z = f(u, v) with a quadratic f (analytic derivatives).
class GraphPatch : public SurfacePatch {
 public:
  explicit GraphPatch(Quadratic f);
  PatchJet jet(double u, double v) const override;

 private:
  Quadratic f_;
};

/// User-supplied position function; the jet is produced by fourth-order
/// central differences with step 1e-4 of the domain size.
class NumericPatch : public SurfacePatch {
 public:
  NumericPatch(std::function<Vec3(double, double)> position,
               double domain_size = 1.0);
  PatchJet jet(double u, double v) const override;

 private:
  std::function<Vec3(double, double)> position_;
  double h_;
};

/// "plane", "sphere <R>", "cylinder <R>", "graph <6 coefficients>".
std::shared_ptr<SurfacePatch> make_builtin_patch(
    const std::string& name, const std::vector<double>& params);

struct MetricChristoffel {
  Mat2 g;
  Mat2 g_inv;
  double det_g = 0.0;
  std::array<Mat2, 2> gamma;  // gamma[a](b, c) = Gamma^a_{bc}
};

/// First fundamental form and Levi-Civita Christoffel symbols.  Throws on a
/// degenerate metric (chart breakdown, e.g. sphere poles).
MetricChristoffel metric_and_christoffel(const SurfacePatch& patch, double u,
                                         double v);

struct SecondFundamentalForm {
  std::array<std::array<Vec3, 2>, 2> l;  // l[a][b] = vector-valued form
  Mat2 l_n;                              // covariant normal contraction
  std::array<double, 2> principal_curvatures{};
  Vec3 n;
};

/// Vector-valued second fundamental form l_ab = x_ab - Gamma^c_ab x_c, its
/// normal contraction, and the principal curvatures (eigenvalues of the
/// shape operator g^-1 l_n).
SecondFundamentalForm second_fundamental_form(const SurfacePatch& patch,
                                              double u, double v);

/// Contravariant symmetric surface stress field sigma_s^{ab}(u, v).
class SurfaceStressField {
 public:
  virtual ~SurfaceStressField() = default;
  virtual Mat2 components(double u, double v) const = 0;
  virtual std::array<Mat2, 2> derivatives(double u, double v) const = 0;
  virtual bool isotropic() const { return false; }
};

/// Componentwise quadratic stress field.
class PolynomialStressField : public SurfaceStressField {
 public:
  PolynomialStressField(Quadratic s11, Quadratic s12, Quadratic s22);
  Mat2 components(double u, double v) const override;
  std::array<Mat2, 2> derivatives(double u, double v) const override;

 private:
  Quadratic s11_, s12_, s22_;
};

/// Isotropic field sigma_s = sigma_hat I, i.e. contravariant components
/// sigma_hat(u, v) g^{ab}(u, v).
class IsotropicStressField : public SurfaceStressField {
 public:
  IsotropicStressField(const SurfacePatch& patch, Quadratic sigma_hat);
  Mat2 components(double u, double v) const override;
  std::array<Mat2, 2> derivatives(double u, double v) const override;
  bool isotropic() const override { return true; }
  double eigenvalue(double u, double v) const {
    return sigma_hat_.value(u, v);
  }

 private:
  const SurfacePatch& patch_;
  Quadratic sigma_hat_;
};

/// (div sigma_bar_s)^i: divergence with respect to the tensor product of
/// the surface Levi-Civita connection and the flat ambient derivative.
Vec3 special_divergence(const SurfacePatch& patch,
                        const SurfaceStressField& stress, double u, double v);

struct DivergenceSplit {
  Vec3 normal_part;      // sigma^{ab} l_ab  (normal-valued)
  Vec3 tangential_part;  // (div sigma_s)^a d_a
  double identity_error = 0.0;  // vs special_divergence, checked internally
};

/// Decomposition of the special divergence into normal and tangential
/// parts, each computed by its own component formula; the sum is verified
/// against special_divergence.
DivergenceSplit divergence_decomposition(const SurfacePatch& patch,
                                         const SurfaceStressField& stress,
                                         double u, double v);

struct SurfaceEnvironment {
  double rho_s = 0.0;
  Vec3 gravity = Vec3::Zero();
  double pressure = 0.0;
  Vec3 traction = Vec3::Zero();  // sigma . n from the bulk
  std::optional<Vec3> expected_normal;
};

struct SurfaceResidual {
  Vec3 residual = Vec3::Zero();
  double tangential = 0.0;  // norm of the tangential component
  double normal = 0.0;      // signed normal component
  bool orientation_warning = false;
};

/// Residual of the surface balance div sigma_bar_s + rho_s g + sigma.n + p n
/// with its tangential/normal split.
SurfaceResidual surface_equilibrium_residual(const SurfacePatch& patch,
                                             const SurfaceStressField& stress,
                                             const SurfaceEnvironment& env,
                                             double u, double v);

/// Tangent map and metrics linking the reference and present states of a
/// surface element; A = da/da0.
struct TransformData {
  Mat2 phi0 = Mat2::Identity();
  Mat2 g_ref = Mat2::Identity();
  Mat2 g_pres = Mat2::Identity();
  double area_ratio = 1.0;

  static TransformData make(const Mat2& phi0, const Mat2& g_ref,
                            const Mat2& g_pres);
};

/// Covariant pullback/pushforward of the infinitesimal surface strain.
Mat2 strain_to_lagrangian(const TransformData& t, const Mat2& eps_eulerian);
Mat2 strain_to_eulerian(const TransformData& t, const Mat2& e_lagrangian);

/// Contravariant (Piola) transform of the surface stress.
Mat2 stress_to_lagrangian(const TransformData& t, const Mat2& sigma_eulerian);
Mat2 stress_to_eulerian(const TransformData& t, const Mat2& pi_lagrangian);

}  // namespace elastoline
