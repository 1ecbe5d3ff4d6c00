#include "elastoline/contact_line.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "elastoline/fields.hpp"

namespace elastoline {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSinPhiBGuard = 1e-6;
}  // namespace

LineConfig LineConfig::from_angles(double phi_f, double phi_fp,
                                   double phi_b) {
  LineConfig c;
  c.phi_f = phi_f;
  c.phi_fp = phi_fp;
  c.phi_b = phi_b;
  c.tau = Vec3::UnitZ();
  c.nu_bf = Vec3(1.0, 0.0, 0.0);
  c.nu_ffp = Vec3(std::cos(phi_f), std::sin(phi_f), 0.0);
  c.nu_bfp =
      Vec3(std::cos(phi_f + phi_fp), std::sin(phi_f + phi_fp), 0.0);
  c.validate();
  return c;
}

void LineConfig::validate() const {
  if (std::abs(phi_f + phi_fp + phi_b - 2.0 * kPi) > 1e-12)
    throw std::invalid_argument("LineConfig: contact angles must sum to 2 pi");
  if (!(ar_nn > 0.0))
    throw std::invalid_argument("LineConfig: ar_nn must be > 0");
  for (const Vec3* nu : {&nu_bf, &nu_bfp, &nu_ffp}) {
    if (std::abs(nu->norm() - 1.0) > 1e-12)
      throw std::invalid_argument("LineConfig: nu vectors must be unit");
    if (std::abs(nu->dot(tau)) > 1e-12)
      throw std::invalid_argument(
          "LineConfig: nu vectors must be orthogonal to tau");
  }
  if (std::abs(tau.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("LineConfig: tau must be unit");
}

LineConfig symmetric_line_config(double sigma_l, double sigma_s,
                                 double gamma_bf) {
  const ContactAngle ca = contact_angle(sigma_l, sigma_s);
  const double phi = ca.phi;
  LineConfig c = LineConfig::from_angles(kPi - phi, kPi - phi, 2.0 * phi);
  c.gamma_ffp = sigma_l;
  c.gamma_bf = c.gamma_bfp = gamma_bf;
  c.sigma_bf_nn = c.sigma_bfp_nn = sigma_s;
  c.sigma_bf_tn = c.sigma_bfp_tn = 0.0;
  c.ar_nn = 1.0;
  c.ar_tn = 0.0;
  return c;
}

Vec3 line_force_residual(const LineConfig& c) {
  c.validate();
  return c.sigma_bf_nn * c.nu_bf + c.sigma_bf_tn * c.tau +
         c.sigma_bfp_nn * c.nu_bfp + c.sigma_bfp_tn * c.tau +
         c.gamma_ffp * c.nu_ffp;
}

double modified_young_residual(const LineConfig& c, YoungForm form) {
  c.validate();
  switch (form) {
    case YoungForm::A:
      return c.sigma_bf_nn - c.gamma_bf -
             (c.sigma_bfp_nn - c.gamma_bfp) * c.ar_nn +
             c.sigma_bfp_tn * c.ar_tn;
    case YoungForm::B: {
      if (std::abs(std::sin(c.phi_b)) < kSinPhiBGuard)
        throw std::domain_error(
            "modified_young_residual: form B is singular at sin(phi_b) = 0");
      return -c.gamma_bf + c.gamma_bfp * c.ar_nn +
             c.gamma_ffp *
                 (std::sin(c.phi_fp) - c.ar_nn * std::sin(c.phi_f)) /
                 std::sin(c.phi_b) +
             c.sigma_bfp_tn * c.ar_tn;
    }
    case YoungForm::C: {
      const double sin_b = std::sin(c.phi_b);
      double edge_term;
      if (std::abs(kPi - c.phi_b) < kSinPhiBGuard) {
        // (cos phi_b + ar_nn)/sin phi_b has a finite limit only for
        // ar_nn = 1; with delta = pi - phi_b it is tan(delta/2) -> 0.
        if (std::abs(c.ar_nn - 1.0) > 1e-12)
          throw std::domain_error(
              "modified_young_residual: (cos phi_b + ar_nn)/sin phi_b "
              "diverges at phi_b = pi when ar_nn != 1");
        edge_term = std::tan((kPi - c.phi_b) / 2.0);
      } else {
        if (std::abs(sin_b) < kSinPhiBGuard)
          throw std::domain_error(
              "modified_young_residual: form C is singular at "
              "sin(phi_b) = 0");
        edge_term = (std::cos(c.phi_b) + c.ar_nn) / sin_b;
      }
      return -c.gamma_bf + c.gamma_bfp * c.ar_nn -
             c.gamma_ffp * std::cos(c.phi_f) -
             c.gamma_ffp * std::sin(c.phi_f) * edge_term +
             c.sigma_bfp_tn * c.ar_tn;
    }
  }
  throw std::invalid_argument("modified_young_residual: unknown form");
}

Eigen::Vector2d free_line_balance(const LineConfig& c) {
  c.validate();
  // first side in the (nu_bf, tau) basis
  Eigen::Vector2d lhs(c.sigma_bf_nn - c.gamma_bf, c.sigma_bf_tn);
  // second side in the (-nu_bf', tau) basis, then pulled back by phi_r*
  // whose matrix in these bases is [[ar_nn, 0], [ar_tn, 1]]
  const Eigen::Vector2d rhs(-(c.sigma_bfp_nn - c.gamma_bfp),
                            c.sigma_bfp_tn);
  lhs(0) += c.ar_nn * rhs(0) + c.ar_tn * rhs(1);
  lhs(1) += rhs(1);
  return lhs;
}

double classical_young_residual(double gamma_bf, double gamma_bfp,
                                double gamma_ffp, double phi_f) {
  return -gamma_bf + gamma_bfp - gamma_ffp * std::cos(phi_f);
}

}  // namespace elastoline
