#pragma once

// Embedded Dormand-Prince 5(4) integrator for small dense systems.
//
// Supports integration in either direction, exact landing on a sorted list
// of checkpoints, and an interpolation-defect diagnostic: on each accepted
// step the cubic Hermite interpolant built from the step endpoints is
// differentiated at the midpoint and compared against the right-hand side.
// A healthy trajectory keeps the normalised defect orders of magnitude
// below one; a wrong sign or a corrupted state blows it up to O(1).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "wmorse/errors.hpp"

namespace wmorse::ode {

struct Options {
  double rtol = 1e-11;
  double atol = 0.0;          // absolute floor added to the per-component scale
  double h_max = 0.0;         // 0 = no cap
  long max_steps = 4'000'000;
};

struct Stats {
  long n_steps = 0;
  long n_rejected = 0;
  double max_defect = 0.0;  // worst normalised midpoint defect
};

namespace detail {
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
inline constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
}  // namespace detail

// Integrates y' = f(t, y) from t0 to t1 in place.  `checkpoints` must be
// sorted in the direction of integration and lie within [t0, t1]; `visit`
// is called with (t, y) at every checkpoint (and nowhere else).
template <class Rhs, class Visit>
Stats integrate(Rhs&& f, int dim, double t0, double t1, double* y, const Options& opt,
                std::span<const double> checkpoints, Visit&& visit) {
  using namespace detail;
  Stats st;
  if (t0 == t1) {
    for (double c : checkpoints) {
      (void)c;
      visit(t0, y);
    }
    return st;
  }
  const double dir = (t1 > t0) ? 1.0 : -1.0;
  const double span_len = std::fabs(t1 - t0);

  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim), k7(dim);
  std::vector<double> ytmp(dim), ynew(dim), ymid(dim), fmid(dim);

  size_t next_cp = 0;
  auto flush_checkpoints_at = [&](double t, const double* yy) {
    while (next_cp < checkpoints.size() && std::fabs(checkpoints[next_cp] - t) < 1e-12 * (1.0 + std::fabs(t))) {
      visit(t, yy);
      ++next_cp;
    }
  };

  double t = t0;
  f(t, y, k1.data());
  double h = dir * std::min(1e-2 * span_len, 0.1);
  if (opt.h_max > 0.0) h = dir * std::min(std::fabs(h), opt.h_max);

  flush_checkpoints_at(t, y);

  while (dir * (t1 - t) > 0.0) {
    if (++st.n_steps > opt.max_steps)
      raise(Errc::NonConvergence, "ODE step budget exhausted");
    // clamp to the endpoint and to the next checkpoint
    if (dir * (t + h - t1) > 0.0) h = t1 - t;
    if (next_cp < checkpoints.size() && dir * (t + h - checkpoints[next_cp]) > 0.0)
      h = checkpoints[next_cp] - t;

    for (int i = 0; i < dim; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    f(t + c2 * h, ytmp.data(), k2.data());
    for (int i = 0; i < dim; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, ytmp.data(), k3.data());
    for (int i = 0; i < dim; ++i) ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * h, ytmp.data(), k4.data());
    for (int i = 0; i < dim; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, ytmp.data(), k5.data());
    for (int i = 0; i < dim; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(t + h, ytmp.data(), k6.data());
    for (int i = 0; i < dim; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f(t + h, ynew.data(), k7.data());

    double err = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double ei =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale =
          opt.atol + opt.rtol * (std::max(std::fabs(y[i]), std::fabs(ynew[i])) +
                                 std::fabs(h) * std::max(std::fabs(k1[i]), std::fabs(k7[i])));
      if (scale > 0.0) err = std::max(err, std::fabs(ei) / scale);
    }

    if (err <= 1.0) {
      // midpoint defect of the cubic Hermite through the step endpoints
      const double tm = t + 0.5 * h;
      double fscale = 0.0;
      for (int i = 0; i < dim; ++i) {
        ymid[i] = 0.5 * (y[i] + ynew[i]) + 0.125 * h * (k1[i] - k7[i]);
        fscale = std::max(fscale, std::max(std::fabs(k1[i]), std::fabs(k7[i])));
      }
      f(tm, ymid.data(), fmid.data());
      double defect = 0.0;
      for (int i = 0; i < dim; ++i) {
        const double hderiv = 1.5 * (ynew[i] - y[i]) / h - 0.25 * (k1[i] + k7[i]);
        defect = std::max(defect, std::fabs(hderiv - fmid[i]));
      }
      if (fscale > 0.0) st.max_defect = std::max(st.max_defect, defect / fscale);

      t += h;
      std::copy(ynew.begin(), ynew.end(), y);
      std::swap(k1, k7);  // FSAL
      flush_checkpoints_at(t, y);

      double fac = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
      h *= std::clamp(fac, 0.2, 5.0);
    } else {
      ++st.n_rejected;
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
    }
    if (opt.h_max > 0.0 && std::fabs(h) > opt.h_max) h = dir * opt.h_max;
    if (std::fabs(h) < 1e-15 * (1.0 + std::fabs(t)))
      raise(Errc::NonConvergence, "ODE step size underflow");
  }
  return st;
}

template <class Rhs>
Stats integrate(Rhs&& f, int dim, double t0, double t1, double* y, const Options& opt = {}) {
  return integrate(std::forward<Rhs>(f), dim, t0, t1, y, opt, {}, [](double, const double*) {});
}

}  // namespace wmorse::ode
