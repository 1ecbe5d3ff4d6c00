#pragma once

#include <optional>

#include "elastoline/fields.hpp"
#include "elastoline/material.hpp"

namespace elastoline {

struct Problem {
  Material material;
  ScaledProblem scale;
};

/// Bind physical inputs into a consistent problem.  The displacement
/// amplitude a is always derived from line equilibrium (a/b^2 =
/// rho/sqrt(1-rho^2)); when a_prime is supplied it must agree with the value
/// that constraint forces, a' = 2 mu b rho/sqrt(1-rho^2), to 1e-10.
Problem build_problem(double sigma_l, double sigma_s, double lambda,
                      double mu, std::optional<double> a_prime, double b);

}  // namespace elastoline
