#include "elastoline/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elastoline {

namespace {

// 8-point Gauss-Legendre on [-1, 1]
constexpr double kGlNode[8] = {
    -0.9602898564975362316, -0.7966664774136267395, -0.5255324099163289858,
    -0.1834346424956498049, 0.1834346424956498049,  0.5255324099163289858,
    0.7966664774136267395,  0.9602898564975362316};
constexpr double kGlWeight[8] = {
    0.1012285362903762592, 0.2223810344533744705, 0.3137066458778872873,
    0.3626837833783619830, 0.3626837833783619830, 0.3137066458778872873,
    0.2223810344533744705, 0.1012285362903762592};

}  // namespace

std::vector<double> graded_breakpoints(double a, double b, int min_panels) {
  if (!(0.0 < a && a < b))
    throw std::invalid_argument("graded_breakpoints: need 0 < a < b");
  min_panels = std::max(min_panels, 1);
  const double decades = std::log2(b / a);
  const int n = std::max(min_panels, static_cast<int>(std::ceil(decades)));
  std::vector<double> pts(n + 1);
  const double ratio = std::pow(b / a, 1.0 / n);
  pts[0] = a;
  for (int i = 1; i < n; ++i) pts[i] = pts[i - 1] * ratio;
  pts[n] = b;
  return pts;
}

double integrate_uniform(const std::function<double(double)>& f, double a,
                         double b, int panels) {
  panels = std::max(panels, 1);
  const double h = (b - a) / panels;
  KahanSum s;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int i = 0; i < 8; ++i)
      s.add(0.5 * h * kGlWeight[i] * f(mid + 0.5 * h * kGlNode[i]));
  }
  return s.value();
}

double integrate_graded(const std::function<double(double)>& f, double a,
                        double b, int min_panels) {
  const std::vector<double> pts = graded_breakpoints(a, b, min_panels);
  KahanSum s;
  for (size_t p = 0; p + 1 < pts.size(); ++p) {
    const double lo = pts[p], hi = pts[p + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < 8; ++i)
      s.add(half * kGlWeight[i] * f(mid + half * kGlNode[i]));
  }
  return s.value();
}

double integrate_polar(const std::function<double(double, double)>& f,
                       const QuadratureSpec& q, int refine) {
  if (!(0.0 < q.eps && q.eps < q.r0))
    throw std::invalid_argument("integrate_polar: need 0 < eps < r0");
  refine = std::max(refine, 1);
  const std::vector<double> rpts =
      graded_breakpoints(q.eps, q.r0, q.radial_panels * refine);
  const int apanels =
      std::max(1, (q.angular_nodes * refine + 7) / 8);
  const double theta_lo = -std::numbers::pi / 2.0;
  const double ah = std::numbers::pi / apanels;

  KahanSum s;
  for (size_t p = 0; p + 1 < rpts.size(); ++p) {
    const double rmid = 0.5 * (rpts[p] + rpts[p + 1]);
    const double rhalf = 0.5 * (rpts[p + 1] - rpts[p]);
    for (int i = 0; i < 8; ++i) {
      const double r = rmid + rhalf * kGlNode[i];
      const double wr = rhalf * kGlWeight[i];
      for (int ap = 0; ap < apanels; ++ap) {
        const double amid = theta_lo + (ap + 0.5) * ah;
        for (int j = 0; j < 8; ++j) {
          const double th = amid + 0.5 * ah * kGlNode[j];
          s.add(wr * 0.5 * ah * kGlWeight[j] * f(r, th) * r);
        }
      }
    }
  }
  return s.value();
}

}  // namespace elastoline
