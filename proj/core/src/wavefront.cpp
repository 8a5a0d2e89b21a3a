#include "abwave/wavefront.hpp"

#include <algorithm>
#include <cmath>

#include "abwave/errors.hpp"

namespace abwave {

void validate_wavefront(const Wavefront& w) {
  if (w.xs.size() < 2) {
    throw ValidationError("wavefront", "needs at least 2 samples");
  }
  if (w.xs.size() != w.amps.size()) {
    throw ValidationError("wavefront", "xs and amps lengths differ");
  }
  const double d0 = w.xs[1] - w.xs[0];
  if (!(d0 > 0.0)) {
    throw ValidationError("wavefront", "abscissae must be strictly increasing");
  }
  for (std::size_t i = 1; i + 1 < w.xs.size(); ++i) {
    const double d = w.xs[i + 1] - w.xs[i];
    if (std::abs(d - d0) > 1e-9 * d0) {
      throw ValidationError("wavefront", "abscissae must be uniformly spaced");
    }
  }
  for (const auto& a : w.amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ValidationError("wavefront", "non-finite amplitude");
    }
  }
}

std::vector<double> uniform_grid(double center, double half_extent,
                                 int samples) {
  std::vector<double> xs(static_cast<std::size_t>(samples));
  const double step = 2.0 * half_extent / samples;
  const double mid = 0.5 * (samples - 1);
  // (i - mid) negates exactly under i -> samples-1-i, so the grid is mirror
  // symmetric to the bit for any sample count; odd counts place a sample at
  // the center exactly.
  for (int i = 0; i < samples; ++i) {
    xs[static_cast<std::size_t>(i)] = center + (i - mid) * step;
  }
  return xs;
}

void validate_aperture(const Aperture& a) {
  for (const auto& s : a.slits) {
    if (!(s.width > 0.0)) {
      throw ValidationError("aperture", "slit width must be positive");
    }
  }
  std::vector<Slit> sorted = a.slits;
  std::sort(sorted.begin(), sorted.end(),
            [](const Slit& l, const Slit& r) { return l.center < r.center; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double gap = (sorted[i].center - 0.5 * sorted[i].width) -
                       (sorted[i - 1].center + 0.5 * sorted[i - 1].width);
    if (gap < 0.0) {
      throw ValidationError("aperture", "slits overlap");
    }
  }
}

Wavefront apply_aperture(Wavefront w, const Aperture& a) {
  if (std::abs(w.z - a.z) > 1e-12) {
    throw StationMismatch("wavefront and aperture stations differ");
  }
  for (std::size_t i = 0; i < w.xs.size(); ++i) {
    bool open = false;
    for (const auto& s : a.slits) {
      if (s.contains(w.xs[i])) {
        open = true;
        break;
      }
    }
    if (!open) w.amps[i] = 0.0;
  }
  return w;
}

}  // namespace abwave
