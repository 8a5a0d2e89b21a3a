#pragma once

// Closed-form references the test suites check the solver against.  These
// are deliberately independent of the library's evaluation paths: Fraunhofer
// formulas, the two-path interference phase, and small synthetic patterns.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "abwave/pattern.hpp"

namespace oracles {

inline double sinc(double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; }

// Fraunhofer single-slit intensity envelope, normalized to 1 on axis.
inline double single_slit(double x, double width, double lambda,
                          double dist) {
  const double u = std::numbers::pi * width * x / (lambda * dist);
  return sinc(u) * sinc(u);
}

// Ideal two-slit Fraunhofer pattern with an extra right-minus-left path
// phase delta (radians); maxima sit at x = (lambda dist / sep)(n + delta/2pi).
inline double double_slit(double x, double width, double sep, double lambda,
                          double dist, double delta = 0.0) {
  const double arg =
      std::numbers::pi * sep * x / (lambda * dist) - 0.5 * delta;
  const double c = std::cos(arg);
  return single_slit(x, width, lambda, dist) * c * c;
}

inline abwave::Pattern synthetic_pattern(double half_extent, int samples,
                                         double period, double phase = 0.0,
                                         double amplitude = 1.0) {
  abwave::Pattern p;
  const double step = 2.0 * half_extent / samples;
  const double mid = 0.5 * (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double x = (i - mid) * step;
    const double c = std::cos(std::numbers::pi * x / period - 0.5 * phase);
    p.xs.push_back(x);
    p.intensity.push_back(amplitude * c * c);
  }
  return p;
}

// Integral of the toroid-bore axial blend profile over [z0, z1]: flat part
// plus cosine ramps, written out independently of the library.
inline double bore_profile_integral(double z_lo, double z_hi, double ramp,
                                    double z0, double z1) {
  auto w = [&](double z) {
    if (z <= z_lo || z >= z_hi) return 0.0;
    if (z < z_lo + ramp) {
      return 0.5 * (1.0 - std::cos(std::numbers::pi * (z - z_lo) / ramp));
    }
    if (z > z_hi - ramp) {
      return 0.5 * (1.0 - std::cos(std::numbers::pi * (z_hi - z) / ramp));
    }
    return 1.0;
  };
  // Dense Simpson reference; plenty for 1e-9-level comparisons.
  const int n = 20001;
  const double h = (z1 - z0) / (n - 1);
  double acc = w(z0) + w(z1);
  for (int i = 1; i + 1 < n; ++i) {
    acc += w(z0 + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64{seed}; }

}  // namespace oracles
