#include "elastoline/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace elastoline {

Problem build_problem(double sigma_l, double sigma_s, double lambda,
                      double mu, std::optional<double> a_prime, double b) {
  if (b <= 0.0) throw std::invalid_argument("build_problem: b must be > 0");
  Problem pr;
  pr.material = Material::from_lame(lambda, mu);

  const ContactAngle ca = contact_angle(sigma_l, sigma_s);
  ScaledProblem& p = pr.scale;
  p.b = b;
  p.sigma_l = sigma_l;
  p.sigma_s = sigma_s;
  p.rho = sigma_l / (2.0 * sigma_s);
  p.phi = ca.phi;

  const double a_prime_derived = 2.0 * mu * b * ca.a_over_b2;
  if (a_prime.has_value()) {
    const double tol = 1e-10 * std::max(1.0, std::abs(a_prime_derived));
    if (std::abs(*a_prime - a_prime_derived) > tol)
      throw std::invalid_argument(
          "build_problem: supplied a' disagrees with the line-equilibrium "
          "constraint a' = 2 mu b rho/sqrt(1-rho^2)");
    p.a_prime = *a_prime;
  } else {
    p.a_prime = a_prime_derived;
  }
  p.a = p.a_prime * b / (2.0 * mu);
  return pr;
}

}  // namespace elastoline
