#pragma once

#include <string>
#include <vector>

#include "abwave/pattern.hpp"
#include "abwave/scenario.hpp"

namespace abwave {

struct PatternMetrics {
  double central_max_x = 0.0;   // interpolated position of the highest peak
  double fringe_spacing = 0.0;  // median adjacent-peak gap
  double visibility = 0.0;      // (Imax - Imin)/(Imax + Imin) in the window
  int n_fringes = 0;
};

// Peak metrics over the central 60% of the screen, 3-point parabolic peak
// interpolation, peak floor 1e-6 of the window maximum.
// Throws TooFewFringes below 3 local maxima.
PatternMetrics metrics(const Pattern& p);

// Lag of the cyclic cross-correlation maximum divided by the fringe spacing
// of b, wrapped into (-0.5, 0.5].  Positive when a is b shifted toward +x.
// Throws GridMismatch unless the grids coincide.
double shift_fraction(const Pattern& a, const Pattern& b);

struct RescaleResult {
  double scale = 1.0;
  double residual = 0.0;
};

// Best horizontal rescale: minimizes the relative RMS between a(x) and the
// reference b resampled at x/s, coarse scan plus golden-section refinement
// over s in [0.8, 1.25].  scale < 1 means the features of a are compressed
// relative to b.
RescaleResult rescale_equivalence(const Pattern& a, const Pattern& b);

// max_i |Ia - Ib| normalized by the larger pattern maximum; the working
// definition of "relative" pattern agreement (pointwise ratios are
// meaningless at fringe nulls).
double max_profile_deviation(const Pattern& a, const Pattern& b);

struct SweepRow {
  double value = 0.0;
  PatternMetrics metrics;
  double channel_phase_diff = 0.0;  // last minus first slit diagnostic
};

// One metrics row per parameter value; param is "B", "flux" or "thickness".
// Rows are computed value-parallel and emitted in input order.
std::vector<SweepRow> visibility_sweep(const Scenario& s,
                                       const std::string& param,
                                       const std::vector<double>& values,
                                       int threads = 1);

}  // namespace abwave
