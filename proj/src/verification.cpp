#include "elastoline/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elastoline {

namespace {

constexpr double kPi = std::numbers::pi;

double poly_value(const std::array<double, 6>& c, double x, double y) {
  return c[0] + c[1] * x + c[2] * y + c[3] * x * x + c[4] * x * y +
         c[5] * y * y;
}

Eigen::Vector2d poly_gradient(const std::array<double, 6>& c, double x,
                              double y) {
  return {c[1] + 2.0 * c[3] * x + c[4] * y, c[2] + c[4] * x + 2.0 * c[5] * y};
}

}  // namespace

VariationField VariationField::bump_polynomial(
    double r0, const std::array<double, 6>& px,
    const std::array<double, 6>& py) {
  VariationField w;
  w.family_ = Family::BumpPolynomial;
  w.r0_ = r0;
  w.px_ = px;
  w.py_ = py;
  return w;
}

VariationField VariationField::bump_times_solution(double r0,
                                                   const Material& m) {
  VariationField w;
  w.family_ = Family::BumpTimesSolution;
  w.r0_ = r0;
  w.m_ = m;
  return w;
}

double VariationField::cutoff(double r) const {
  if (r >= r0_) return 0.0;
  const double s = 1.0 - (r / r0_) * (r / r0_);
  return s * s * s;
}

double VariationField::cutoff_slope_over_r(double r) const {
  // chi(r) = (1 - (r/r0)^2)^3, chi'(r)/r = -6 (1 - (r/r0)^2)^2 / r0^2
  if (r >= r0_) return 0.0;
  const double s = 1.0 - (r / r0_) * (r / r0_);
  return -6.0 * s * s / (r0_ * r0_);
}

Eigen::Vector2d VariationField::value(Complex z) const {
  const double x = z.real(), y = z.imag();
  const double r = std::abs(z);
  const double chi = cutoff(r);
  if (chi == 0.0) return Eigen::Vector2d::Zero();
  if (family_ == Family::BumpPolynomial)
    return chi * Eigen::Vector2d(poly_value(px_, x, y), poly_value(py_, x, y));
  const FieldSample s = eval_fields(z, m_);
  return chi * Eigen::Vector2d(s.u.real(), s.u.imag());
}

Eigen::Matrix2d VariationField::gradient(Complex z) const {
  const double x = z.real(), y = z.imag();
  const double r = std::abs(z);
  if (r >= r0_) return Eigen::Matrix2d::Zero();
  const double chi = cutoff(r);
  const double slope = cutoff_slope_over_r(r);  // chi'(r)/r
  Eigen::Vector2d p;
  Eigen::Matrix2d dp;
  if (family_ == Family::BumpPolynomial) {
    p = {poly_value(px_, x, y), poly_value(py_, x, y)};
    dp.row(0) = poly_gradient(px_, x, y).transpose();
    dp.row(1) = poly_gradient(py_, x, y).transpose();
  } else {
    if (z == Complex(0.0, 0.0))
      throw std::domain_error(
          "VariationField: gradient of the solution family is singular at 0");
    const FieldSample s = eval_fields(z, m_);
    p = {s.u.real(), s.u.imag()};
    dp = s.grad_u;
  }
  // d_j (chi p_i) = (chi'(r)/r) x_j p_i + chi d_j p_i
  Eigen::Matrix2d g = chi * dp;
  g.col(0) += slope * x * p;
  g.col(1) += slope * y * p;
  return g;
}

double VariationField::sup_norm() const {
  double e = 0.0;
  const int nr = 64, nt = 64;
  for (int i = 0; i <= nr; ++i) {
    const double r = r0_ * i / nr;
    for (int j = 0; j <= nt; ++j) {
      const double th = -kPi / 2.0 + kPi * j / nt;
      const Eigen::Vector2d w = value(Complex(r * std::cos(th),
                                              r * std::sin(th)));
      e = std::max({e, std::abs(w(0)), std::abs(w(1))});
    }
  }
  return 1.05 * e;
}

double elastic_energy_density(const Material& m, Complex z) {
  const FieldSample s = eval_fields(z, m);
  const double tr = s.eps_xx + s.eps_yy;
  return 0.5 * m.lambda * tr * tr +
         m.mu * (s.eps_xx * s.eps_xx + s.eps_yy * s.eps_yy +
                 2.0 * s.eps_xy * s.eps_xy);
}

EnergyResult elastic_energy(const Material& m, const QuadratureSpec& q,
                            double tol) {
  const auto density = [&](double r, double th) {
    return elastic_energy_density(m, Complex(r * std::cos(th),
                                             r * std::sin(th)));
  };
  const double coarse = integrate_polar(density, q, 1) * q.l0;
  const double fine = integrate_polar(density, q, 2) * q.l0;
  EnergyResult res;
  res.value = fine;
  res.error_estimate = std::abs(fine - coarse);
  if (res.error_estimate > 10.0 * tol * std::max(1e-300, std::abs(fine)))
    throw std::runtime_error(
        "elastic_energy: quadrature did not converge at the requested "
        "tolerance");
  return res;
}

namespace {

struct GreenTerms {
  double t_grad = 0.0, t_div = 0.0, t_flat = 0.0, t_arc = 0.0;
};

GreenTerms green_terms(const Material& m, const VariationField& w,
                       const QuadratureSpec& q, int refine) {
  GreenTerms t;

  t.t_grad = q.l0 * integrate_polar(
      [&](double r, double th) {
        const Complex z(r * std::cos(th), r * std::sin(th));
        const FieldSample s = eval_fields(z, m);
        const Eigen::Matrix2d dw = w.gradient(z);
        return s.sig_xx * dw(0, 0) + s.sig_xy * (dw(0, 1) + dw(1, 0)) +
               s.sig_yy * dw(1, 1);
      },
      q, refine);

  t.t_div = q.l0 * integrate_polar(
      [&](double r, double th) {
        const Complex z(r * std::cos(th), r * std::sin(th));
        const StressDerivatives d = stress_derivatives(z, m);
        const Eigen::Vector2d wv = w.value(z);
        return (d.dsxx_dx + d.dsxy_dy) * wv(0) +
               (d.dsxy_dx + d.dsyy_dy) * wv(1);
      },
      q, refine);

  // S_eps and S'_eps lie on x = 0 with inward normal e_x.
  const auto flat = [&](double y) {
    const Complex z(0.0, y);
    const FieldSample s = eval_fields(z, m);
    const Eigen::Vector2d wv = w.value(z);
    return s.sig_xx * wv(0) + s.sig_xy * wv(1);
  };
  const int bpanels = q.radial_panels * refine;
  t.t_flat = q.l0 * (integrate_graded([&](double y) { return flat(y); },
                                      q.eps, q.r0, bpanels) +
                     integrate_graded([&](double y) { return flat(-y); },
                                      q.eps, q.r0, bpanels));

  // C_eps with inward normal e_r.
  const int apanels = std::max(1, (q.angular_nodes * refine + 7) / 8);
  t.t_arc = q.l0 * q.eps *
            integrate_uniform(
                [&](double th) {
                  const double c = std::cos(th), sn = std::sin(th);
                  const Complex z(q.eps * c, q.eps * sn);
                  const FieldSample s = eval_fields(z, m);
                  const Eigen::Vector2d wv = w.value(z);
                  const double tx = s.sig_xx * c + s.sig_xy * sn;
                  const double ty = s.sig_xy * c + s.sig_yy * sn;
                  return tx * wv(0) + ty * wv(1);
                },
                -kPi / 2.0, kPi / 2.0, apanels);
  return t;
}

}  // namespace

GreenBreakdown green_residual(const Material& m, const VariationField& w,
                              const QuadratureSpec& q) {
  const GreenTerms coarse = green_terms(m, w, q, 1);
  const GreenTerms fine = green_terms(m, w, q, 2);

  GreenBreakdown b;
  b.volume_gradient = fine.t_grad;
  b.volume_divergence = fine.t_div;
  b.flat_boundary = fine.t_flat;
  b.arc = fine.t_arc;
  b.residual = fine.t_grad + fine.t_div + fine.t_flat + fine.t_arc;

  const double magnitude = std::abs(fine.t_grad) + std::abs(fine.t_div) +
                           std::abs(fine.t_flat) + std::abs(fine.t_arc);
  b.error_estimate = std::abs(fine.t_grad - coarse.t_grad) +
                     std::abs(fine.t_div - coarse.t_div) +
                     std::abs(fine.t_flat - coarse.t_flat) +
                     std::abs(fine.t_arc - coarse.t_arc) +
                     1e-13 * magnitude + 1e-16;
  return b;
}

std::pair<double, double> fit_line(const std::vector<double>& x,
                                   const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  const double slope = (n * sxy - sx * sy) / det;
  const double intercept = (sy - slope * sx) / n;
  return {slope, intercept};
}

DecayTable line_integral_decay(const Material& m, const VariationField& w,
                               const std::vector<double>& eps_schedule,
                               const QuadratureSpec& q) {
  if (eps_schedule.empty())
    throw std::invalid_argument("line_integral_decay: empty schedule");
  for (size_t i = 0; i + 1 < eps_schedule.size(); ++i)
    if (eps_schedule[i + 1] >= eps_schedule[i])
      throw std::invalid_argument(
          "line_integral_decay: eps values must be strictly decreasing");
  if (eps_schedule.front() >= q.r0)
    throw std::invalid_argument("line_integral_decay: eps must be < r0");

  DecayTable table;
  table.e = w.sup_norm();
  const int apanels = std::max(1, (q.angular_nodes + 7) / 8);
  for (double eps : eps_schedule) {
    DecayEntry entry;
    entry.eps = eps;
    entry.line_integral =
        q.l0 * eps *
        integrate_uniform(
            [&](double th) {
              const double c = std::cos(th), sn = std::sin(th);
              const Complex z(eps * c, eps * sn);
              const FieldSample s = eval_fields(z, m);
              const Eigen::Vector2d wv = w.value(z);
              return (s.sig_xx * c + s.sig_xy * sn) * wv(0) +
                     (s.sig_xy * c + s.sig_yy * sn) * wv(1);
            },
            -kPi / 2.0, kPi / 2.0, apanels);
    table.entries.push_back(entry);
  }

  if (table.e == 0.0) return table;  // zero variation: zero integrals, zero bounds

  // Envelope fit of |I| / (e pi eps l0) against |log eps|: least squares,
  // then the intercept is raised so every entry obeys the bound.
  std::vector<double> xs, ys;
  for (const DecayEntry& entry : table.entries) {
    xs.push_back(std::abs(std::log(entry.eps)));
    ys.push_back(std::abs(entry.line_integral) /
                 (table.e * kPi * entry.eps * q.l0));
  }
  double c, d;
  if (xs.size() >= 2) {
    std::tie(c, d) = fit_line(xs, ys);
  } else {
    c = 0.0;
    d = ys[0];
  }
  if (c < 0.0) c = 0.0;
  double lift = 0.0;
  for (size_t i = 0; i < xs.size(); ++i)
    lift = std::max(lift, ys[i] - (c * xs[i] + d));
  d += lift;
  if (!(std::isfinite(c) && std::isfinite(d)))
    throw std::runtime_error("line_integral_decay: bound fit failed");
  table.c = c;
  table.d = d;
  for (size_t i = 0; i < table.entries.size(); ++i)
    table.entries[i].bound =
        (c * xs[i] + d) * table.e * kPi * table.entries[i].eps * q.l0;
  return table;
}

SobolevReport sobolev_diagnostics(const Material& m,
                                  const std::vector<double>& eps_schedule,
                                  const QuadratureSpec& q) {
  SobolevReport rep;
  for (double eps : eps_schedule) {
    QuadratureSpec qe = q;
    qe.eps = eps;
    rep.eps.push_back(eps);

    std::array<double, 4> s2{};
    for (int comp = 0; comp < 4; ++comp) {
      s2[comp] = integrate_polar(
          [&](double r, double th) {
            const FieldSample s =
                eval_fields(Complex(r * std::cos(th), r * std::sin(th)), m);
            const double v = comp == 0   ? s.sig_xx
                             : comp == 1 ? s.sig_yy
                             : comp == 2 ? s.sig_xy
                                         : s.sig_zz;
            return v * v;
          },
          qe, 1);
    }
    rep.sigma_sq.push_back(s2);

    rep.dsigma_abs.push_back(integrate_polar(
        [&](double r, double th) {
          const StressDerivatives d = stress_derivatives(
              Complex(r * std::cos(th), r * std::sin(th)), m);
          return std::abs(d.dsxx_dx);
        },
        qe, 1));
    rep.dsigma_sq.push_back(integrate_polar(
        [&](double r, double th) {
          const StressDerivatives d = stress_derivatives(
              Complex(r * std::cos(th), r * std::sin(th)), m);
          return d.dsxx_dx * d.dsxx_dx;
        },
        qe, 1));
  }

  std::vector<double> xs;
  for (double eps : eps_schedule) xs.push_back(std::log(1.0 / eps));
  std::tie(rep.slope, rep.intercept) = fit_line(xs, rep.dsigma_sq);
  if (rep.slope <= 0.0)
    throw std::runtime_error(
        "sobolev_diagnostics: fitted L2-divergence slope is not positive");
  return rep;
}

Eigen::Vector2d fd_stress_divergence(
    const std::function<std::array<double, 3>(Complex)>& sigma, Complex z,
    double h) {
  const Complex dx(h, 0.0), dy(0.0, h);
  const auto sxp = sigma(z + dx), sxm = sigma(z - dx);
  const auto syp = sigma(z + dy), sym = sigma(z - dy);
  // components: [0] = sig_xx, [1] = sig_yy, [2] = sig_xy
  return {(sxp[0] - sxm[0]) / (2.0 * h) + (syp[2] - sym[2]) / (2.0 * h),
          (sxp[2] - sxm[2]) / (2.0 * h) + (syp[1] - sym[1]) / (2.0 * h)};
}

Eigen::Vector2d equilibrium_residual_fd(Complex z, double h,
                                        const Material& m) {
  if (std::abs(z) <= 10.0 * h)
    throw std::invalid_argument(
        "equilibrium_residual_fd: step too large relative to the distance "
        "to the singularity");
  return fd_stress_divergence(
      [&](Complex p) -> std::array<double, 3> {
        const FieldSample s = eval_fields(p, m);
        return {s.sig_xx, s.sig_yy, s.sig_xy};
      },
      z, h);
}

}  // namespace elastoline
