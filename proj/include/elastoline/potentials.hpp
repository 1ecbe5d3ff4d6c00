#pragma once

#include <complex>

#include "elastoline/material.hpp"

namespace elastoline {

using Complex = std::complex<double>;

/// Radius of the disks around z = +i and z = -i inside which the closed
/// forms are 0/0 quotients and a local Taylor expansion is used instead.
inline constexpr double kGuardRadius = 0.05;

/// Truncation degree of the local Taylor expansion near z = +-i.
inline constexpr int kSeriesDegree = 8;

enum class PotentialRoute { Chain, Closed, SeriesFallback };

/// Values of the auxiliary function g and the analytic potential F together
/// with their first three derivatives at one point of the closed right
/// half-plane.
///
/// At z = 0 only the continuous extensions exist: F(0) = 1/(2k),
/// g(0) = pi/2, g'(0) = 0, g''(0) = -pi.  The derivatives of F diverge
/// there (Re F' -> +inf) and g''' has no extension (only z*g''' does), so
/// the corresponding flags are cleared instead of storing non-finite
/// numbers.
struct PotentialChain {
  Complex g0{}, g1{}, g2{}, g3{};
  Complex F0{}, F1{}, F2{}, F3{};
  PotentialRoute route = PotentialRoute::Chain;
  bool g3_valid = true;
  bool derivatives_divergent = false;  // set at z = 0; Re F' -> +inf there
};

/// log with arg in (-pi, pi); domain error on 0 and the negative real axis.
Complex principal_log(Complex z);

/// True when z lies within the guard radius of +i or -i.
bool in_guard_zone(Complex z, double guard = kGuardRadius);

/// g-chain evaluation: each defining identity solved for the highest
/// derivative.  Requires re(z) >= 0.  Throws on the guard zone around +-i
/// (the caller is expected to switch to the series fallback).
PotentialChain eval_g_chain(Complex z, double guard = kGuardRadius);

/// F and derivatives through the g-chain (k pi F = z log z + g, ...).
/// Inside the guard zone the series fallback is used automatically.
PotentialChain eval_F_chain(Complex z, const Material& m,
                            double guard = kGuardRadius);

/// F and derivatives from the explicit rational closed forms.
/// Inside the guard zone the series fallback is used automatically.
PotentialChain eval_F_closed(Complex z, const Material& m,
                             double guard = kGuardRadius);

/// Taylor evaluation about +i (or -i) of the analytic continuation of F.
/// Valid for |z -+ i| well below 1; used as the guard-zone fallback.
PotentialChain eval_F_series(Complex z, const Material& m, bool around_plus_i);

/// The involution (1 - w)/(1 + w) mapping the unit disk onto the right
/// half-plane (and itself onto itself).
Complex mobius_involution(Complex w);

/// k * Phi(zeta): the disk-side potential, defined for |zeta| < 1.
Complex disk_potential(Complex zeta);

/// |k Phi(zeta) - k F(omega(zeta))|: consistency of the disk-side and
/// half-plane-side expressions.
double conformal_check(Complex zeta, const Material& m);

}  // namespace elastoline
