#include "wmorse/quadrature.hpp"

#include <cmath>

#include "wmorse/errors.hpp"

namespace wmorse::quad {

namespace {

double adapt_rec(const std::function<double(double)>& f, double a, double b, double whole,
                 double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = gl15(f, a, m);
  const double right = gl15(f, m, b);
  const double diff = left + right - whole;
  if (std::fabs(diff) <= tol || b - a < 1e-14 * (1.0 + std::fabs(a)))
    return left + right;
  if (depth <= 0)
    raise(Errc::QuadratureFailure, "adaptive quadrature depth exhausted");
  return adapt_rec(f, a, m, left, 0.5 * tol, depth - 1) +
         adapt_rec(f, m, b, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                int max_depth) {
  if (a == b) return 0.0;
  const double whole = gl15(f, a, b);
  const double scale = std::max(std::fabs(whole), 1e-300);
  return adapt_rec(f, a, b, whole, tol * std::max(1.0, scale), max_depth);
}

}  // namespace wmorse::quad
