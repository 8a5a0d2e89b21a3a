#include "abwave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "abwave/errors.hpp"
#include "abwave/parallel.hpp"

namespace abwave {

namespace {

struct Window {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open
};

// Central 60% of the sampled span.
Window analysis_window(const std::vector<double>& xs) {
  const double lo = xs.front();
  const double hi = xs.back();
  const double cut = 0.2 * (hi - lo);
  Window w;
  w.begin = static_cast<std::size_t>(
      std::lower_bound(xs.begin(), xs.end(), lo + cut) - xs.begin());
  w.end = static_cast<std::size_t>(
      std::upper_bound(xs.begin(), xs.end(), hi - cut) - xs.begin());
  return w;
}

struct Peak {
  double x = 0.0;
  double height = 0.0;
};

std::vector<Peak> find_peaks(const Pattern& p, const Window& w) {
  double top = 0.0;
  for (std::size_t i = w.begin; i < w.end; ++i) {
    top = std::max(top, p.intensity[i]);
  }
  const double floor = 1e-6 * top;
  std::vector<Peak> peaks;
  for (std::size_t i = std::max<std::size_t>(w.begin, 1);
       i + 1 < p.intensity.size() && i < w.end; ++i) {
    const double ym = p.intensity[i - 1];
    const double y0 = p.intensity[i];
    const double yp = p.intensity[i + 1];
    if (!(y0 > ym && y0 > yp) || y0 < floor) continue;
    const double denom = ym - 2.0 * y0 + yp;
    double delta = 0.0;
    double height = y0;
    if (denom != 0.0) {
      delta = 0.5 * (ym - yp) / denom;
      height = y0 - 0.125 * (ym - yp) * (ym - yp) / denom;
    }
    const double dx = p.xs[1] - p.xs[0];
    peaks.push_back({p.xs[i] + delta * dx, height});
  }
  return peaks;
}

void check_same_grid(const Pattern& a, const Pattern& b) {
  if (a.xs.size() != b.xs.size() || a.xs.size() < 4) {
    throw GridMismatch("patterns must share the same abscissae");
  }
  const double scale = std::abs(a.xs.back() - a.xs.front());
  for (std::size_t i = 0; i < a.xs.size(); ++i) {
    if (std::abs(a.xs[i] - b.xs[i]) > 1e-9 * scale) {
      throw GridMismatch("patterns must share the same abscissae");
    }
  }
}

// Catmull-Rom interpolation on the uniform grid; NaN outside the supported
// interior range.
double interp_cubic(const std::vector<double>& xs,
                    const std::vector<double>& ys, double x) {
  const double dx = xs[1] - xs[0];
  const double u = (x - xs.front()) / dx;
  const double fi = std::floor(u);
  const long i = static_cast<long>(fi);
  if (i < 1 || i + 2 >= static_cast<long>(xs.size())) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double s = u - fi;
  const double y0 = ys[static_cast<std::size_t>(i - 1)];
  const double y1 = ys[static_cast<std::size_t>(i)];
  const double y2 = ys[static_cast<std::size_t>(i + 1)];
  const double y3 = ys[static_cast<std::size_t>(i + 2)];
  const double a0 = -0.5 * y0 + 1.5 * y1 - 1.5 * y2 + 0.5 * y3;
  const double a1 = y0 - 2.5 * y1 + 2.0 * y2 - 0.5 * y3;
  const double a2 = -0.5 * y0 + 0.5 * y2;
  return ((a0 * s + a1) * s + a2) * s + y1;
}

}  // namespace

PatternMetrics metrics(const Pattern& p) {
  if (p.xs.size() < 8 || p.xs.size() != p.intensity.size()) {
    throw TooFewFringes("pattern too short for metrics");
  }
  const Window w = analysis_window(p.xs);
  const std::vector<Peak> peaks = find_peaks(p, w);
  if (peaks.size() < 3) {
    throw TooFewFringes("fewer than 3 fringe maxima in the analysis window");
  }
  std::vector<double> gaps;
  gaps.reserve(peaks.size() - 1);
  for (std::size_t i = 1; i < peaks.size(); ++i) {
    gaps.push_back(peaks[i].x - peaks[i - 1].x);
  }
  std::sort(gaps.begin(), gaps.end());
  const double spacing = gaps.size() % 2 == 1
                             ? gaps[gaps.size() / 2]
                             : 0.5 * (gaps[gaps.size() / 2 - 1] +
                                      gaps[gaps.size() / 2]);

  const Peak* best = &peaks.front();
  for (const auto& peak : peaks) {
    if (peak.height > best->height) best = &peak;
  }

  double imax = 0.0;
  double imin = std::numeric_limits<double>::infinity();
  for (std::size_t i = w.begin; i < w.end; ++i) {
    imax = std::max(imax, p.intensity[i]);
    imin = std::min(imin, p.intensity[i]);
  }
  PatternMetrics out;
  out.central_max_x = best->x;
  out.fringe_spacing = spacing;
  out.visibility = (imax + imin) > 0.0 ? (imax - imin) / (imax + imin) : 0.0;
  out.n_fringes = static_cast<int>(peaks.size());
  return out;
}

double shift_fraction(const Pattern& a, const Pattern& b) {
  check_same_grid(a, b);
  const std::size_t n = a.xs.size();
  const Window w = analysis_window(a.xs);

  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_a += a.intensity[i];
    mean_b += b.intensity[i];
  }
  mean_a /= static_cast<double>(n);
  mean_b /= static_cast<double>(n);

  // Cyclic cross-correlation of the mean-removed profiles.
  std::vector<double> corr(n, 0.0);
  for (std::size_t lag = 0; lag < n; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + n - lag) % n;
      acc += (a.intensity[i] - mean_a) * (b.intensity[j] - mean_b);
    }
    corr[lag] = acc;
  }
  std::size_t best = 0;
  for (std::size_t lag = 1; lag < n; ++lag) {
    if (corr[lag] > corr[best]) best = lag;
  }
  const double ym = corr[(best + n - 1) % n];
  const double y0 = corr[best];
  const double yp = corr[(best + 1) % n];
  const double denom = ym - 2.0 * y0 + yp;
  const double delta = denom != 0.0 ? 0.5 * (ym - yp) / denom : 0.0;
  double lag_samples = static_cast<double>(best) + delta;
  if (lag_samples > 0.5 * static_cast<double>(n)) {
    lag_samples -= static_cast<double>(n);
  }

  const double spacing = metrics(b).fringe_spacing;
  const double dx = a.xs[1] - a.xs[0];
  double fraction = lag_samples * dx / spacing;
  fraction -= std::floor(fraction);  // into [0,1)
  if (fraction > 0.5) fraction -= 1.0;
  (void)w;
  return fraction;
}

namespace {

double rescale_residual(const Pattern& a, const Pattern& b, const Window& w,
                        double norm_a, double norm_b, double s) {
  double acc = 0.0;
  double ref = 0.0;
  std::size_t count = 0;
  for (std::size_t i = w.begin; i < w.end; ++i) {
    const double bx = a.xs[i] / s;
    const double bv = interp_cubic(b.xs, b.intensity, bx);
    if (std::isnan(bv)) continue;
    const double da = a.intensity[i] / norm_a;
    const double db = bv / norm_b;
    acc += (da - db) * (da - db);
    ref += db * db;
    ++count;
  }
  if (count < 8 || ref <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(acc / ref);
}

}  // namespace

RescaleResult rescale_equivalence(const Pattern& a, const Pattern& b) {
  check_same_grid(a, b);
  const Window w = analysis_window(a.xs);

  double norm_a = 0.0, norm_b = 0.0;
  std::size_t cnt = 0;
  for (std::size_t i = w.begin; i < w.end; ++i) {
    norm_a += a.intensity[i];
    norm_b += b.intensity[i];
    ++cnt;
  }
  norm_a = std::max(norm_a / static_cast<double>(cnt), 1e-300);
  norm_b = std::max(norm_b / static_cast<double>(cnt), 1e-300);

  auto residual = [&](double s) {
    return rescale_residual(a, b, w, norm_a, norm_b, s);
  };

  // Fringe realignment makes the residual multi-valley; a coarse scan picks
  // the right valley before golden-section refinement.
  const double s_lo = 0.8, s_hi = 1.25;
  double best_s = 1.0;
  double best_r = std::numeric_limits<double>::infinity();
  const int coarse = 181;
  for (int i = 0; i < coarse; ++i) {
    const double s = s_lo + (s_hi - s_lo) * i / (coarse - 1);
    const double r = residual(s);
    if (r < best_r) {
      best_r = r;
      best_s = s;
    }
  }
  const double step = (s_hi - s_lo) / (coarse - 1);
  double lo = std::max(s_lo, best_s - step);
  double hi = std::min(s_hi, best_s + step);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = residual(c);
  double fd = residual(d);
  for (int it = 0; it < 80 && (hi - lo) > 1e-10; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = residual(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = residual(d);
    }
  }
  double s_star = 0.5 * (lo + hi);
  double r_star = residual(s_star);
  // Identity fixed point: prefer exact 1.0 when it is at least as good.
  const double r_one = residual(1.0);
  if (r_one <= r_star) {
    s_star = 1.0;
    r_star = r_one;
  }
  return {s_star, r_star};
}

double max_profile_deviation(const Pattern& a, const Pattern& b) {
  check_same_grid(a, b);
  double top = 0.0;
  for (std::size_t i = 0; i < a.intensity.size(); ++i) {
    top = std::max({top, a.intensity[i], b.intensity[i]});
  }
  if (top == 0.0) return 0.0;
  double dev = 0.0;
  for (std::size_t i = 0; i < a.intensity.size(); ++i) {
    dev = std::max(dev, std::abs(a.intensity[i] - b.intensity[i]));
  }
  return dev / top;
}

namespace {

FieldModel with_param(const FieldModel& field, const std::string& param,
                      double value) {
  if (param == "B" || param == "thickness") {
    const ToroidBore* bore = field.get_if<ToroidBore>();
    if (!bore) {
      throw ValidationError("sweep", param + " needs a toroid_bore field");
    }
    ToroidBore out = *bore;
    if (param == "B") {
      out.b_field = value;
    } else {
      out.thickness = value;
    }
    return FieldModel{out};
  }
  if (param == "flux") {
    if (const FluxTube* tube = field.get_if<FluxTube>()) {
      FluxTube out = *tube;
      out.flux = value;
      return FieldModel{out};
    }
    if (const FluxTubePair* pair = field.get_if<FluxTubePair>()) {
      FluxTubePair out = *pair;
      const double base = out.first.flux;
      const double factor = base != 0.0 ? value / base : 0.0;
      if (base != 0.0) {
        out.first.flux = value;
        out.second.flux *= factor;
      } else {
        out.first.flux = value;
        out.second.flux = -value;
      }
      return FieldModel{out};
    }
    throw ValidationError("sweep", "flux needs a flux-tube field");
  }
  throw ValidationError("sweep", "unknown parameter " + param);
}

}  // namespace

std::vector<SweepRow> visibility_sweep(const Scenario& s,
                                       const std::string& param,
                                       const std::vector<double>& values,
                                       int threads) {
  std::vector<SweepRow> rows(values.size());
  // Value-parallel, never nested with per-run parallelism; rows land in
  // input order regardless.
  parallel_for(values.size(), threads, [&](std::size_t i) {
    Scenario variant = s;
    variant.field = with_param(s.field, param, values[i]);
    const ScenarioResult r = run(variant, 1);
    SweepRow row;
    row.value = values[i];
    row.metrics = metrics(r.pattern);
    if (r.slit_diagnostics.size() >= 2) {
      row.channel_phase_diff = r.slit_diagnostics.back().phase_field -
                               r.slit_diagnostics.front().phase_field;
    }
    rows[i] = row;
  });
  return rows;
}

}  // namespace abwave
