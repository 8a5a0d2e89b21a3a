#pragma once

#include <cmath>
#include <utility>

#include "abwave/errors.hpp"
#include "abwave/field.hpp"

namespace abwave {

// Adaptive Simpson with the classic 15x error estimate.  The tolerance is
// relative to the coarse whole-interval estimate (or abs_floor when that is
// larger, so that near-zero integrals do not demand infinite refinement).
// Throws QuadratureNonConvergence when max_depth is hit with the local error
// estimate still above tolerance.
template <class F>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(F f, QuadratureOptions opt) : f_(std::move(f)), opt_(opt) {}

  double integrate(double a, double b) {
    const double fa = f_(a);
    const double fb = f_(b);
    const double m = 0.5 * (a + b);
    const double fm = f_(m);
    const double whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0;
    double scale = std::abs(whole);
    if (scale < opt_.abs_floor) scale = opt_.abs_floor;
    if (scale < 1e-300) scale = 1e-300;
    return recurse(a, b, fa, fm, fb, whole, opt_.rel_tol * scale, 0);
  }

 private:
  double recurse(double a, double b, double fa, double fm, double fb,
                 double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f_(lm);
    const double frm = f_(rm);
    const double left = (m - a) * (fa + 4.0 * flm + fm) / 6.0;
    const double right = (b - m) * (fm + 4.0 * frm + fb) / 6.0;
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
      return left + right + delta / 15.0;
    }
    if (depth >= opt_.max_depth) {
      throw QuadratureNonConvergence(
          "adaptive Simpson stalled before reaching tolerance");
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }

  F f_;
  QuadratureOptions opt_;
};

template <class F>
double adaptive_simpson(F&& f, double a, double b,
                        const QuadratureOptions& opt = {}) {
  AdaptiveSimpson<std::decay_t<F>> q(std::forward<F>(f), opt);
  return q.integrate(a, b);
}

}  // namespace abwave
