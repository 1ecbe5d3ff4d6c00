#include "elastoline/fields.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elastoline {

namespace {
constexpr double kPi = std::numbers::pi;
}

FieldSample eval_fields(Complex z, const Material& m) {
  if (z.real() < 0.0)
    throw std::domain_error("eval_fields: re(z) must be >= 0");
  FieldSample s;
  s.z = z;
  if (z == Complex(0.0, 0.0)) {
    // u is continuous at the contact line; gradients and stresses are not.
    s.u = Complex(-1.0 / (2.0 * m.mu), 0.0);
    s.singular = true;
    return s;
  }
  const PotentialChain pc = eval_F_closed(z, m);
  const Complex F = pc.F0, F1 = pc.F1, F2 = pc.F2;
  const double zz = 2.0 * z.real();  // z + conj(z)
  const double inv2mu = 1.0 / (2.0 * m.mu);
  const double k = m.k;

  s.u = -inv2mu * (k * (F + std::conj(F)) + zz * std::conj(F1));

  const Complex zzF2 = zz * F2;
  s.eps_xx = inv2mu * std::real(-2.0 * (1.0 + k) * F1 - zzF2);
  s.eps_yy = inv2mu * std::real(zzF2);
  s.eps_xy = inv2mu * std::imag((1.0 + k) * F1 + zzF2);
  s.sig_xx = std::real((1.0 - k) * F1 - zzF2);
  s.sig_yy = std::real((3.0 + k) * F1 + zzF2);
  s.sig_xy = std::imag((1.0 + k) * F1 + zzF2);
  s.sig_zz = (3.0 + k) * std::real(F1);

  s.grad_u(0, 0) = s.eps_xx;
  s.grad_u(0, 1) = inv2mu * std::imag(2.0 * k * F1 + zzF2);
  s.grad_u(1, 0) = inv2mu * std::imag(2.0 * F1 + zzF2);
  s.grad_u(1, 1) = s.eps_yy;
  return s;
}

RayLimitValue ray_limit(double theta, const Material& m, FieldId which) {
  if (!(theta >= -kPi / 2.0 && theta <= kPi / 2.0))
    throw std::invalid_argument("ray_limit: theta must lie in [-pi/2, pi/2]");
  const double kpi = m.k * kPi;
  const double inv2mu = 1.0 / (2.0 * m.mu);
  RayLimitValue v;
  switch (which) {
    case FieldId::EpsYY:
      v.value = inv2mu * (1.0 + std::cos(2.0 * theta)) / kpi;
      return v;
    case FieldId::EpsXY:
      v.value =
          inv2mu * ((1.0 + m.k) * theta - std::sin(2.0 * theta)) / kpi;
      return v;
    case FieldId::SigXY:
      v.value = ((1.0 + m.k) * theta - std::sin(2.0 * theta)) / kpi;
      return v;
    case FieldId::EpsXX:
    case FieldId::SigXX:
    case FieldId::SigYY:
    case FieldId::SigZZ:
      v.divergent = true;
      v.sign = +1;
      return v;
  }
  throw std::invalid_argument("ray_limit: unknown field id");
}

FieldSample apply_scaling(const ScaledProblem& p, const Material& m,
                          Complex z) {
  if (p.b <= 0.0) throw std::invalid_argument("apply_scaling: b must be > 0");
  FieldSample s = eval_fields(z / p.b, m);
  const double strain_scale = p.a_prime / p.b;
  s.z = z;
  s.u *= p.a_prime;
  s.grad_u *= strain_scale;
  s.eps_xx *= strain_scale;
  s.eps_yy *= strain_scale;
  s.eps_xy *= strain_scale;
  s.sig_xx *= strain_scale;
  s.sig_yy *= strain_scale;
  s.sig_xy *= strain_scale;
  s.sig_zz *= strain_scale;
  return s;
}

ContactAngle contact_angle(double sigma_l, double sigma_s) {
  if (sigma_s <= 0.0)
    throw std::invalid_argument("contact_angle: sigma_s must be > 0");
  if (sigma_l < 0.0)
    throw std::invalid_argument("contact_angle: sigma_l must be >= 0");
  if (sigma_l >= 2.0 * sigma_s)
    throw std::domain_error(
        "contact_angle: sigma_l >= 2 sigma_s, no angle balances the line");
  const double rho = sigma_l / (2.0 * sigma_s);
  ContactAngle c;
  c.phi = std::acos(rho);
  c.a_over_b2 = rho / std::sqrt(1.0 - rho * rho);
  return c;
}

StressDerivatives stress_derivatives(Complex z, const Material& m) {
  if (z == Complex(0.0, 0.0))
    throw std::domain_error("stress_derivatives: z = 0 is singular");
  const PotentialChain pc = eval_F_closed(z, m);
  const Complex F2 = pc.F2, F3 = pc.F3;
  const double zz = 2.0 * z.real();
  const double k = m.k;
  const Complex zzF3 = zz * F3;

  StressDerivatives d;
  d.dsxx_dx = std::real(-(1.0 + k) * F2 - zzF3);
  d.dsxx_dy = -std::imag((1.0 - k) * F2 - zzF3);
  d.dsxy_dx = std::imag((3.0 + k) * F2 + zzF3);
  d.dsxy_dy = std::real((1.0 + k) * F2 + zzF3);
  d.dsyy_dx = std::real((5.0 + k) * F2 + zzF3);
  d.dsyy_dy = -std::imag((3.0 + k) * F2 + zzF3);
  d.dszz_dx = (3.0 + k) * std::real(F2);
  d.dszz_dy = -(3.0 + k) * std::imag(F2);
  return d;
}

}  // namespace elastoline
