#pragma once

#include <functional>
#include <vector>

namespace elastoline {

/// Quadrature layout for the half-disk eps < |z| < r0, re z > 0.
/// Radial panels are geometrically graded toward r = eps (ratio at most 2)
/// so that log r and (log r)^2 integrands are resolved; 8-point
/// Gauss-Legendre per panel in each direction.  l0 is the out-of-plane
/// length carried by the volume and boundary measures.
struct QuadratureSpec {
  double r0 = 1.0;
  double eps = 1e-4;
  int radial_panels = 24;   // lower bound; grading may add panels
  int angular_nodes = 32;   // total node target on (-pi/2, pi/2)
  double l0 = 1.0;
};

/// Compensated (Kahan) accumulator; summation order is fixed by the loop
/// structure so results are deterministic.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

/// Geometric breakpoints from a to b (0 < a < b) with at least min_panels
/// panels and per-panel ratio at most 2.
std::vector<double> graded_breakpoints(double a, double b, int min_panels);

/// Integral of f over [a, b], 8-point Gauss-Legendre on n uniform panels.
double integrate_uniform(const std::function<double(double)>& f, double a,
                         double b, int panels);

/// Integral of f over [a, b] (0 < a < b) on geometrically graded panels.
double integrate_graded(const std::function<double(double)>& f, double a,
                        double b, int min_panels);

/// Integral of f(r, theta) * r over (eps, r0) x (-pi/2, pi/2):
/// radially graded panels, uniform angular panels.  `refine` multiplies
/// both panel counts (used for error estimation by comparison).
double integrate_polar(const std::function<double(double, double)>& f,
                       const QuadratureSpec& q, int refine = 1);

}  // namespace elastoline
