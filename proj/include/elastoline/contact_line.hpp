#pragma once

#include <Eigen/Dense>

#include "elastoline/surface.hpp"

namespace elastoline {

/// State of a triple line: surface energies, contact angles (summing to
/// 2 pi), surface-stress components of sigma_s . nu in the (nu, tau) bases
/// of the two body-fluid sides, relative-deformation components of
/// phi_r . nu_bf in the basis (-nu_bf', tau), and the coplanar frame of
/// unit vectors in the plane normal to the line.
struct LineConfig {
  double gamma_bf = 0.0, gamma_bfp = 0.0, gamma_ffp = 0.0;
  double phi_f = 0.0, phi_fp = 0.0, phi_b = 0.0;
  double sigma_bf_nn = 0.0, sigma_bf_tn = 0.0;
  double sigma_bfp_nn = 0.0, sigma_bfp_tn = 0.0;
  double ar_nn = 1.0, ar_tn = 0.0;
  Vec3 nu_bf = Vec3::UnitX();
  Vec3 nu_bfp = Vec3::UnitX();
  Vec3 nu_ffp = Vec3::UnitX();
  Vec3 tau = Vec3::UnitZ();

  /// Builds the coplanar frame from the three angles alone: tau along z,
  /// nu_bf at angle 0 in the xy plane, nu_ff' at phi_f, nu_bf' at
  /// phi_f + phi_f' (counterclockwise).
  static LineConfig from_angles(double phi_f, double phi_fp, double phi_b);

  /// Angle sum, unit norms, orthogonality to tau, ar_nn > 0.
  void validate() const;
};

/// The symmetric half-space configuration: isotropic surface stress
/// sigma_s on both sides, gamma_ff' = sigma_l, phi_f = phi_f' = pi - phi
/// with phi = arccos(sigma_l / (2 sigma_s)), undeformed relative map.
LineConfig symmetric_line_config(double sigma_l, double sigma_s,
                                 double gamma_bf = 1.0);

/// sigma_s,bf . nu_bf + sigma_s,bf' . nu_bf' + gamma_ff' nu_ff', assembled
/// from the stress components and the frame vectors.
Vec3 line_force_residual(const LineConfig& c);

enum class YoungForm { A, B, C };

/// Left-hand side of the stated form of the modified Young equation.
/// For phi_b within 1e-6 of pi, form C uses the series limit of
/// (cos phi_b + ar_nn)/sin phi_b, which exists only when ar_nn = 1;
/// otherwise the configuration is genuinely singular and a domain error is
/// thrown.
double modified_young_residual(const LineConfig& c, YoungForm form);

/// Both components, in the (nu_bf, tau) basis, of the free-line balance
/// (sigma_s,bf - gamma_bf I) . nu_bf + phi_r* . (sigma_s,bf' - gamma_bf' I')
/// . nu_bf'.  The nu component equals form A; the tau component equals the
/// tau component of the fixed-line balance.
Eigen::Vector2d free_line_balance(const LineConfig& c);

/// Residual of the classical Young equation
/// -gamma_bf + gamma_bf' - gamma_ff' cos(phi_f).
double classical_young_residual(double gamma_bf, double gamma_bfp,
                                double gamma_ffp, double phi_f);

}  // namespace elastoline
