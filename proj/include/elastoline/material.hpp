#pragma once

#include <stdexcept>

namespace elastoline {

/// Isotropic linear-elastic material in plane strain.  The constant
/// k = -(lambda + 3 mu)/(lambda + mu) lies in (-3, -1) whenever
/// mu > 0 and lambda + mu > 0.
struct Material {
  double lambda = 1.0;
  double mu = 1.0;
  double k = -2.0;

  static Material from_lame(double lambda, double mu) {
    if (mu <= 0.0) throw std::invalid_argument("Material: mu must be > 0");
    if (lambda + mu <= 0.0)
      throw std::invalid_argument("Material: lambda + mu must be > 0");
    Material m;
    m.lambda = lambda;
    m.mu = mu;
    m.k = -(lambda + 3.0 * mu) / (lambda + mu);
    return m;
  }
};

}  // namespace elastoline
