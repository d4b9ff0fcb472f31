#pragma once

#include <functional>

namespace wmorse::quad {

// 15-point Gauss-Legendre rule on [a, b].
template <class F>
double gl15(F&& f, double a, double b) {
  static constexpr double xs[8] = {
      0.0,
      0.201194093997434522,
      0.394151347077563370,
      0.570972172608538848,
      0.724417731360170047,
      0.848206583410427216,
      0.937273392400705904,
      0.987992518020485428,
  };
  static constexpr double ws[8] = {
      0.202578241925561273,
      0.198431485327111576,
      0.186161000015562211,
      0.166269205816993934,
      0.139570677926154314,
      0.107159220467171935,
      0.0703660474881081247,
      0.0307532419961172684,
  };
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  double s = ws[0] * f(c);
  for (int i = 1; i < 8; ++i)
    s += ws[i] * (f(c + hw * xs[i]) + f(c - hw * xs[i]));
  return s * hw;
}

// Adaptive quadrature: bisect until the two-panel refinement of each panel
// agrees with the single-panel estimate.  Throws QuadratureFailure when the
// recursion depth is exhausted before the target accuracy is met.
double adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                int max_depth = 48);

}  // namespace wmorse::quad
