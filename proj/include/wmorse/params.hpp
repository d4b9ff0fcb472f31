#pragma once

#include <cmath>

#include "wmorse/errors.hpp"

namespace wmorse {

// Potential parameters.  g > 0 is the coupling, k the shape parameter;
// h = k - 1/2 is the equivalent full-line Morse parameter.  The mirror
// coordinate rho(x) = 2 g exp(|x|) maps the half line to [rho0, inf).
struct PotentialParams {
  double g = 1.0;
  double k = 0.0;

  double h() const { return k - 0.5; }
  double rho0() const { return 2.0 * g; }
  double rho(double x) const { return 2.0 * g * std::exp(std::fabs(x)); }

  void validate() const {
    if (!(g > 0.0)) raise(Errc::BadConfig, "coupling g must be positive");
    if (!std::isfinite(k)) raise(Errc::BadConfig, "shape parameter k must be finite");
  }
};

struct Tolerances {
  double root_tol = 1e-10;  // bisection width on the spectral parameter
  double ode_tol = 1e-11;   // local relative error of the ODE integrator
  double quad_tol = 1e-10;  // quadrature tolerance
};

}  // namespace wmorse
