#include "elastoline/potentials.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elastoline {

namespace {

constexpr double kPi = std::numbers::pi;

// Taylor coefficients about c = +-i of the numerator pi/2 + z log z, which
// vanishes at both centers.  Index m holds the coefficient of (z - c)^m.
std::array<Complex, kSeriesDegree + 2> numerator_series(Complex c) {
  std::array<Complex, kSeriesDegree + 2> n{};
  n[0] = Complex(0.0, 0.0);
  n[1] = principal_log(c) + 1.0;
  // d^m/dz^m (z log z) = (-1)^m (m-2)!/z^(m-1) for m >= 2, so the Taylor
  // coefficient is (-1)^m / (m (m-1) c^(m-1))
  Complex cpow = c;  // c^(m-1)
  double sign = 1.0;
  for (int m = 2; m < static_cast<int>(n.size()); ++m) {
    n[m] = sign / (static_cast<double>(m) * (m - 1) * cpow);
    cpow *= c;
    sign = -sign;
  }
  return n;
}

}  // namespace

Complex principal_log(Complex z) {
  if (z == Complex(0.0, 0.0))
    throw std::domain_error("principal_log: z = 0 is outside the domain");
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw std::domain_error(
        "principal_log: the negative real axis is outside the domain");
  return std::log(z);
}

bool in_guard_zone(Complex z, double guard) {
  return std::abs(z - Complex(0.0, 1.0)) < guard ||
         std::abs(z + Complex(0.0, 1.0)) < guard;
}

PotentialChain eval_g_chain(Complex z, double guard) {
  if (z.real() < 0.0)
    throw std::domain_error("eval_g_chain: re(z) must be >= 0");
  PotentialChain out;
  out.route = PotentialRoute::Chain;
  if (z == Complex(0.0, 0.0)) {
    out.g0 = Complex(kPi / 2.0, 0.0);
    out.g1 = Complex(0.0, 0.0);
    out.g2 = Complex(-kPi, 0.0);  // from 2 g(0) + g''(0) = 0
    out.g3 = Complex(0.0, 0.0);
    out.g3_valid = false;  // only z g''' extends continuously at 0
    return out;
  }
  if (in_guard_zone(z, guard))
    throw std::domain_error(
        "eval_g_chain: denominator 1 + z^2 is near-singular; use the series "
        "fallback");
  const Complex lg = principal_log(z);
  const Complex den = 1.0 + z * z;
  out.g0 = (kPi / 2.0 - z * z * z * lg) / den;
  out.g1 = (-3.0 * z * z * lg - z * z - 2.0 * z * out.g0) / den;
  out.g2 = (-6.0 * z * lg - 5.0 * z - 2.0 * out.g0 - 4.0 * z * out.g1) / den;
  out.g3 = (-6.0 * lg - 11.0 - 6.0 * out.g1 - 6.0 * z * out.g2) / den;
  return out;
}

PotentialChain eval_F_chain(Complex z, const Material& m, double guard) {
  if (z.real() < 0.0)
    throw std::domain_error("eval_F_chain: re(z) must be >= 0");
  if (z == Complex(0.0, 0.0)) {
    PotentialChain out = eval_g_chain(z, guard);
    out.F0 = Complex(1.0 / (2.0 * m.k), 0.0);
    out.derivatives_divergent = true;
    return out;
  }
  if (in_guard_zone(z, guard))
    return eval_F_series(z, m, z.imag() > 0.0);
  PotentialChain out = eval_g_chain(z, guard);
  const Complex lg = principal_log(z);
  const double kpi = m.k * kPi;
  out.F0 = (z * lg + out.g0) / kpi;
  out.F1 = (lg + 1.0 + out.g1) / kpi;
  out.F2 = (1.0 / z + out.g2) / kpi;
  out.F3 = (-1.0 / (z * z) + out.g3) / kpi;
  return out;
}

PotentialChain eval_F_closed(Complex z, const Material& m, double guard) {
  if (z.real() < 0.0)
    throw std::domain_error("eval_F_closed: re(z) must be >= 0");
  PotentialChain out;
  out.route = PotentialRoute::Closed;
  if (z == Complex(0.0, 0.0)) {
    out.g0 = Complex(kPi / 2.0, 0.0);
    out.g1 = Complex(0.0, 0.0);
    out.g2 = Complex(-kPi, 0.0);
    out.g3_valid = false;
    out.F0 = Complex(1.0 / (2.0 * m.k), 0.0);
    out.derivatives_divergent = true;
    return out;
  }
  if (in_guard_zone(z, guard))
    return eval_F_series(z, m, z.imag() > 0.0);

  const Complex lg = principal_log(z);
  const Complex z2 = z * z;
  const Complex den = 1.0 + z2;
  const double kpi = m.k * kPi;

  const Complex kF = (kPi / 2.0 + z * lg) / (kPi * den);
  const Complex kpiF1 =
      (1.0 - kPi * z + z2 + (1.0 - z2) * lg) / (den * den);
  const Complex kpiF2 =
      (1.0 - kPi * z - 2.0 * z2 + 3.0 * kPi * z2 * z - 3.0 * z2 * z2 +
       (-6.0 * z2 + 2.0 * z2 * z2) * lg) /
      (z * den * den * den);
  // third derivative of the closed form over z^2 (1+z^2)^4
  const Complex z4 = z2 * z2;
  const Complex z6 = z4 * z2;
  const Complex kpiF3 =
      (-1.0 - 15.0 * z2 + 12.0 * kPi * z2 * z - 3.0 * z4 -
       12.0 * kPi * z4 * z + 11.0 * z6 +
       (-6.0 * z2 + 36.0 * z4 - 6.0 * z6) * lg) /
      (z2 * den * den * den * den);

  out.F0 = kF / m.k;
  out.F1 = kpiF1 / kpi;
  out.F2 = kpiF2 / kpi;
  out.F3 = kpiF3 / kpi;
  out.g0 = kpi * out.F0 - z * lg;
  out.g1 = kpi * out.F1 - lg - 1.0;
  out.g2 = kpi * out.F2 - 1.0 / z;
  out.g3 = kpi * out.F3 + 1.0 / z2;
  return out;
}

PotentialChain eval_F_series(Complex z, const Material& m,
                             bool around_plus_i) {
  const Complex c = around_plus_i ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
  const Complex w = z - c;

  const auto num = numerator_series(c);
  // (pi/2 + z log z)/(z - c) as a polynomial in w
  std::array<Complex, kSeriesDegree + 1> quot{};
  for (int mdeg = 0; mdeg <= kSeriesDegree; ++mdeg) quot[mdeg] = num[mdeg + 1];
  // 1/(z + c) = 1/(w + 2c) expanded about w = 0
  std::array<Complex, kSeriesDegree + 1> inv{};
  Complex term = 1.0 / (2.0 * c);
  for (int mdeg = 0; mdeg <= kSeriesDegree; ++mdeg) {
    inv[mdeg] = term;
    term *= -1.0 / (2.0 * c);
  }
  // k F = (1/pi) * quot * inv, truncated
  std::array<Complex, kSeriesDegree + 1> p{};
  for (int i = 0; i <= kSeriesDegree; ++i)
    for (int j = 0; i + j <= kSeriesDegree; ++j)
      p[i + j] += quot[i] * inv[j] / kPi;

  Complex kF{}, kF1{}, kF2{}, kF3{};
  for (int mdeg = kSeriesDegree; mdeg >= 0; --mdeg) kF = kF * w + p[mdeg];
  for (int mdeg = kSeriesDegree; mdeg >= 1; --mdeg)
    kF1 = kF1 * w + static_cast<double>(mdeg) * p[mdeg];
  for (int mdeg = kSeriesDegree; mdeg >= 2; --mdeg)
    kF2 = kF2 * w + static_cast<double>(mdeg) * (mdeg - 1) * p[mdeg];
  for (int mdeg = kSeriesDegree; mdeg >= 3; --mdeg)
    kF3 = kF3 * w + static_cast<double>(mdeg) * (mdeg - 1) * (mdeg - 2) * p[mdeg];

  PotentialChain out;
  out.route = PotentialRoute::SeriesFallback;
  out.F0 = kF / m.k;
  out.F1 = kF1 / m.k;
  out.F2 = kF2 / m.k;
  out.F3 = kF3 / m.k;
  const Complex lg = principal_log(z);
  const double kpi = m.k * kPi;
  out.g0 = kpi * out.F0 - z * lg;
  out.g1 = kpi * out.F1 - lg - 1.0;
  out.g2 = kpi * out.F2 - 1.0 / z;
  out.g3 = kpi * out.F3 + 1.0 / (z * z);
  return out;
}

Complex mobius_involution(Complex w) {
  if (w == Complex(-1.0, 0.0))
    throw std::domain_error("mobius_involution: pole at -1");
  return (1.0 - w) / (1.0 + w);
}

Complex disk_potential(Complex zeta) {
  if (std::abs(zeta) >= 1.0)
    throw std::domain_error("disk_potential: |zeta| must be < 1");
  const Complex one(1.0, 0.0);
  const Complex den = one + zeta * zeta;
  if (std::abs(den) < 2.0 * kGuardRadius)
    throw std::domain_error("disk_potential: zeta too close to +-i");
  const Complex lg = principal_log((one - zeta) / (one + zeta));
  return (one + zeta + zeta * zeta + (one - zeta * zeta) / kPi * lg) /
             (2.0 * den) -
         0.25;
}

double conformal_check(Complex zeta, const Material& m) {
  const Complex z = mobius_involution(zeta);
  if (in_guard_zone(z))
    throw std::domain_error("conformal_check: omega(zeta) in a guard zone");
  const PotentialChain f = eval_F_closed(z, m);
  return std::abs(disk_potential(zeta) - m.k * f.F0);
}

}  // namespace elastoline
