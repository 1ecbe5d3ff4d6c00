#pragma once

#include <Eigen/Dense>
#include <complex>

#include "elastoline/material.hpp"
#include "elastoline/potentials.hpp"

namespace elastoline {

/// Displacement, displacement gradient, strain and stress at one point of
/// the half-plane solution (unit load scale, unit contact-line offset).
///
/// Plane strain: eps_zz = 0 and u_z = 0 identically; sig_zz is the
/// out-of-plane stress.  At z = 0 the displacement is finite but strain and
/// stress have no limit (eps_xx, sig_xx, sig_yy, sig_zz -> +inf; the others
/// are direction-dependent, see ray_limit); `singular` is set and the
/// affected entries are zeroed rather than stored as non-finite floats.
struct FieldSample {
  Complex z{};
  Complex u{};               // u_x + i u_y
  Eigen::Matrix2d grad_u;    // (i, j) = d_j u_i
  double eps_xx = 0.0, eps_yy = 0.0, eps_xy = 0.0;
  double sig_xx = 0.0, sig_yy = 0.0, sig_xy = 0.0, sig_zz = 0.0;
  bool singular = false;

  FieldSample() : grad_u(Eigen::Matrix2d::Zero()) {}
};

enum class FieldId { EpsXX, EpsYY, EpsXY, SigXX, SigYY, SigXY, SigZZ };

/// Directional limit value at the contact line; divergent entries carry the
/// sign of the infinity instead of a non-finite float.
struct RayLimitValue {
  bool divergent = false;
  int sign = 0;        // +1 / -1 when divergent
  double value = 0.0;  // meaningful only when !divergent
};

/// Full problem scale: load amplitude a' (force per length), length b,
/// line tension sigma_l, surface-stress eigenvalue sigma_s, and the derived
/// rho = sigma_l/(2 sigma_s), contact half-angle phi, displacement
/// amplitude a = a' b / (2 mu).
struct ScaledProblem {
  double a_prime = 0.0;
  double b = 1.0;
  double sigma_l = 0.0;
  double sigma_s = 1.0;
  double rho = 0.0;
  double phi = 0.0;
  double a = 0.0;
};

struct ContactAngle {
  double phi = 0.0;
  double a_over_b2 = 0.0;
};

/// Fields of the unit-scale solution at z (re z >= 0).  Uses the closed
/// potential route with the guard-zone series fallback.
FieldSample eval_fields(Complex z, const Material& m);

/// Closed-form directional limit of a strain/stress component along the ray
/// arg z = theta, theta in (-pi/2, pi/2).
RayLimitValue ray_limit(double theta, const Material& m, FieldId which);

/// Physical-scale fields: u~(z) = a' u(z/b), eps~ = (a'/b) eps(z/b),
/// sig~ = (a'/b) sig(z/b).
FieldSample apply_scaling(const ScaledProblem& p, const Material& m,
                          Complex z);

/// Contact half-angle phi = arccos(sigma_l / (2 sigma_s)) and the edge
/// slope a/b^2 = rho/sqrt(1 - rho^2) fixed by line equilibrium.
/// Throws when sigma_l >= 2 sigma_s (no angle balances the line).
ContactAngle contact_angle(double sigma_l, double sigma_s);

/// The six partial derivatives of the in-plane stress components, from the
/// analytic F'' and F''' forms.  Row order: (d_x, d_y) x (sig_xx, sig_xy,
/// sig_yy); also returns d sig_zz.  Requires z != 0.
struct StressDerivatives {
  double dsxx_dx = 0.0, dsxx_dy = 0.0;
  double dsxy_dx = 0.0, dsxy_dy = 0.0;
  double dsyy_dx = 0.0, dsyy_dy = 0.0;
  double dszz_dx = 0.0, dszz_dy = 0.0;
};
StressDerivatives stress_derivatives(Complex z, const Material& m);

}  // namespace elastoline
