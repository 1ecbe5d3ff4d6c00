#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <vector>

#include "elastoline/fields.hpp"
#include "elastoline/material.hpp"
#include "elastoline/quadrature.hpp"

namespace elastoline {

/// Admissible variation w of the Green identity: an H^1 displacement field
/// vanishing (with two derivatives) on the outer arc r = r0.  Two families:
/// a smooth cutoff times a vector polynomial of degree <= 2, and the same
/// cutoff times the solution's own displacement (so that w carries the
/// solution's singular gradient structure).
class VariationField {
 public:
  enum class Family { BumpPolynomial, BumpTimesSolution };

  // coefficient order: 1, x, y, x^2, xy, y^2
  static VariationField bump_polynomial(double r0,
                                        const std::array<double, 6>& px,
                                        const std::array<double, 6>& py);
  static VariationField bump_times_solution(double r0, const Material& m);

  Eigen::Vector2d value(Complex z) const;
  /// (i, j) = d_j w_i.  For the bump-times-solution family z must not be 0.
  Eigen::Matrix2d gradient(Complex z) const;
  /// Sampled sup-norm bound e with |w_i| <= e on the half-disk (inflated 5%).
  double sup_norm() const;

  Family family() const { return family_; }
  double r0() const { return r0_; }

 private:
  VariationField() = default;
  Family family_ = Family::BumpPolynomial;
  double r0_ = 1.0;
  std::array<double, 6> px_{}, py_{};
  Material m_{};

  double cutoff(double r) const;
  double cutoff_slope_over_r(double r) const;  // chi'(r)/r, smooth at 0
};

struct EnergyResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Elastic energy of the solution over eps < |z| < r0 (per unit out-of-plane
/// length times l0).  The error estimate is the panel-halving difference;
/// throws when that difference exceeds 10x the requested relative tolerance.
EnergyResult elastic_energy(const Material& m, const QuadratureSpec& q,
                            double tol = 1e-8);

/// Pointwise elastic energy density of the solution (>= 0).
double elastic_energy_density(const Material& m, Complex z);

/// The four terms of the Green identity on V_eps and their sum (which is the
/// signed residual; the identity makes it zero up to quadrature error).
/// Normals point into V_eps, matching the sign convention in which
/// volume_gradient + volume_divergence + flat_boundary + arc = 0.
struct GreenBreakdown {
  double volume_gradient = 0.0;   // integral of tr(sigma* . Dw)
  double volume_divergence = 0.0; // integral of div(sigma*) . w
  double flat_boundary = 0.0;     // integral over S_eps and S'_eps
  double arc = 0.0;               // integral over C_eps
  double residual = 0.0;
  double error_estimate = 0.0;
};
GreenBreakdown green_residual(const Material& m, const VariationField& w,
                              const QuadratureSpec& q);

struct DecayEntry {
  double eps = 0.0;
  double line_integral = 0.0;  // signed value of the C_eps integral
  double bound = 0.0;          // fitted (c |log eps| + d) e pi eps l0
};
struct DecayTable {
  std::vector<DecayEntry> entries;
  double c = 0.0, d = 0.0, e = 0.0;
};

/// Half-circle boundary integral per eps with the fitted envelope bound.
/// eps values must be strictly decreasing and < r0.
DecayTable line_integral_decay(const Material& m, const VariationField& w,
                               const std::vector<double>& eps_schedule,
                               const QuadratureSpec& q);

/// Regularity diagnostics: L2 norms of the stress components over V_eps
/// (convergent), L1 norm of d_x sig_xx (convergent), and the L2 norm of
/// d_x sig_xx which grows like slope * log(1/eps).
struct SobolevReport {
  std::vector<double> eps;
  std::vector<std::array<double, 4>> sigma_sq;  // xx, yy, xy, zz
  std::vector<double> dsigma_abs;
  std::vector<double> dsigma_sq;
  double slope = 0.0;
  double intercept = 0.0;
};
SobolevReport sobolev_diagnostics(const Material& m,
                                  const std::vector<double>& eps_schedule,
                                  const QuadratureSpec& q);

/// Least-squares fit y = slope * x + intercept; shared by the diagnostics
/// and by tests that run the same fit on synthetic data.
std::pair<double, double> fit_line(const std::vector<double>& x,
                                   const std::vector<double>& y);

/// Central-difference divergence of an arbitrary plane stress field
/// sigma(z) -> (sig_xx, sig_yy, sig_xy).
Eigen::Vector2d fd_stress_divergence(
    const std::function<std::array<double, 3>(Complex)>& sigma, Complex z,
    double h);

/// Central-difference divergence of the solution's stress at an interior
/// point; vanishes to O(h^2).  Requires |z| > 10 h.
Eigen::Vector2d equilibrium_residual_fd(Complex z, double h,
                                        const Material& m);

}  // namespace elastoline
