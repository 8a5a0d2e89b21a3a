#pragma once

#include <complex>
#include <vector>

#include "abwave/kinematics.hpp"

namespace abwave {

// Complex amplitude on a transverse line at a fixed axial station.
// Abscissae are strictly increasing with uniform spacing.
struct Wavefront {
  double z = 0.0;
  std::vector<double> xs;
  std::vector<std::complex<double>> amps;
  SourceRef src;

  double spacing() const { return xs.size() > 1 ? xs[1] - xs[0] : 0.0; }
};

// Throws ValidationError if the grid or sizes are malformed.
void validate_wavefront(const Wavefront& w);

// Midpoint-sampled uniform grid over [-half_extent, half_extent] around
// center.  Midpoint placement keeps the grid exactly mirror symmetric.
std::vector<double> uniform_grid(double center, double half_extent,
                                 int samples);

struct Slit {
  double center = 0.0;
  double width = 1.0;
  bool contains(double x) const {
    return x >= center - 0.5 * width && x <= center + 0.5 * width;
  }
};

struct Aperture {
  double z = 0.0;
  std::vector<Slit> slits;
};

// Throws ValidationError on overlapping slits or nonpositive widths.
void validate_aperture(const Aperture& a);

// Hard-edged masking; amplitudes outside every slit become zero.
// Throws StationMismatch unless w.z == a.z within 1e-12.
Wavefront apply_aperture(Wavefront w, const Aperture& a);

}  // namespace abwave
