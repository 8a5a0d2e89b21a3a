#include "abwave/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abwave/errors.hpp"

namespace abwave {

std::string to_string(Coverage c) {
  switch (c) {
    case Coverage::none: return "none";
    case Coverage::all_except_source: return "all_except_source";
    case Coverage::after_slit: return "after_slit";
    case Coverage::slit_and_source: return "slit_and_source";
    case Coverage::slit_only: return "slit_only";
    case Coverage::source_only: return "source_only";
  }
  return "none";
}

std::optional<Coverage> coverage_from_string(const std::string& s) {
  if (s == "none") return Coverage::none;
  if (s == "all_except_source") return Coverage::all_except_source;
  if (s == "after_slit") return Coverage::after_slit;
  if (s == "slit_and_source") return Coverage::slit_and_source;
  if (s == "slit_only") return Coverage::slit_only;
  if (s == "source_only") return Coverage::source_only;
  return std::nullopt;
}

void validate(const Scenario& s) {
  if (s.apertures.empty()) {
    throw ValidationError("apertures", "at least one aperture plane required");
  }
  for (const auto& a : s.apertures) {
    validate_aperture(a);
    if (a.slits.empty()) {
      throw ValidationError("apertures", "aperture has no slits");
    }
  }
  for (std::size_t i = 1; i < s.apertures.size(); ++i) {
    if (!(s.apertures[i].z > s.apertures[i - 1].z)) {
      throw ValidationError("apertures", "planes must be strictly ascending");
    }
  }
  if (!(s.screen.z > s.apertures.back().z)) {
    throw ValidationError("screen", "screen must sit beyond every aperture");
  }
  if (s.screen.samples < 64) {
    throw ValidationError("screen", "needs at least 64 samples");
  }
  if (!(s.screen.half_extent > 0.0)) {
    throw ValidationError("screen", "half_extent must be positive");
  }
  if (s.source.samples < 2) {
    throw ValidationError("source", "needs at least 2 samples");
  }
  if (!(s.source.lambda0 > 0.0)) {
    throw ValidationError("source", "lambda0 must be positive");
  }
  if (s.source.z0 > s.apertures.front().z) {
    throw ValidationError("source", "source must not sit beyond the first aperture");
  }
  if (s.coverage != Coverage::none) {
    if (!s.field.get_if<ToroidBore>()) {
      throw ValidationError("field", "coverage requires a toroid_bore field");
    }
    if (s.coverage != Coverage::after_slit &&
        !(s.source.z0 < s.apertures.front().z)) {
      throw ValidationError(
          "field", "this coverage needs the source before the first aperture");
    }
  }
  if (s.model.is_alternative()) {
    const auto& slits = s.apertures.back().slits;
    if (s.slit_channel.size() != slits.size()) {
      throw ValidationError("model",
                            "every slit needs exactly one channel assignment");
    }
    if (s.channel_paths.empty()) {
      throw ValidationError("model", "alternative model needs channel paths");
    }
    for (int c : s.slit_channel) {
      if (c < 0 || static_cast<std::size_t>(c) >= s.channel_paths.size()) {
        throw ValidationError("model", "channel id out of range");
      }
    }
    for (const auto& p : s.channel_paths) {
      if (p.size() < 2) {
        throw ValidationError("model", "representative path needs >= 2 points");
      }
    }
  }
}

FieldModel effective_field(const Scenario& s) {
  FieldModel f = s.field;
  if (s.coverage != Coverage::none) {
    const ToroidBore* base = f.get_if<ToroidBore>();
    if (!base) {
      throw ValidationError("field", "coverage requires a toroid_bore field");
    }
    ToroidBore bore = *base;
    const double slit_z = s.apertures.front().z;
    const double z0 = s.source.z0;
    const double post = s.screen.z - slit_z;  // slit-to-screen length
    const double pre = slit_z - z0;           // source-to-slit length
    switch (s.coverage) {
      case Coverage::after_slit:
        bore.z_lo = slit_z - 0.012 * post;
        bore.z_hi = s.screen.z + 0.1 * post;
        break;
      case Coverage::all_except_source:
        bore.z_lo = z0 + 0.04 * pre;
        bore.z_hi = s.screen.z + 0.1 * post;
        break;
      case Coverage::slit_and_source:
        bore.z_lo = z0 - 0.05 * pre;
        bore.z_hi = slit_z + 0.02 * post;
        break;
      case Coverage::slit_only:
        bore.z_lo = slit_z - 0.02 * post;
        bore.z_hi = slit_z + 0.02 * post;
        break;
      case Coverage::source_only:
        bore.z_lo = z0 - 0.05 * pre;
        bore.z_hi = z0 + 0.05 * pre;
        break;
      case Coverage::none:
        break;
    }
    f = FieldModel{bore};
  }
  if (s.source.zero_source_momentum_gauge) {
    const Vec2 a0 =
        sample(f, {s.source.x0, s.source.z0}, s.source.t0).a;
    if (a0.x != 0.0 || a0.z != 0.0) {
      f = apply_gauge(f, GaugeFunction{LinearGauge{-a0}});
    }
  }
  return f;
}

SourceRef make_source(const Scenario& s, const FieldModel& field) {
  const double k0_mag = 2.0 * std::numbers::pi / s.source.lambda0;
  return SourceRef::create(s.source.charge, s.source.mass,
                           {s.source.x0, s.source.z0}, s.source.t0,
                           {0.0, k0_mag}, s.source.nu0, field, s.units());
}

namespace {

// Sampling window of an aperture-plane wavefront: the slit support padded by
// a sixth of its span on each side.
std::vector<double> aperture_window(const Aperture& a, int samples) {
  double lo = a.slits.front().center - 0.5 * a.slits.front().width;
  double hi = lo + a.slits.front().width;
  for (const auto& s : a.slits) {
    lo = std::min(lo, s.center - 0.5 * s.width);
    hi = std::max(hi, s.center + 0.5 * s.width);
  }
  const double span = hi - lo;
  const double pad = span / 6.0;
  return uniform_grid(0.5 * (lo + hi), 0.5 * span + pad, samples);
}

// Plane wavefront transported from the source station to the first aperture
// along axial rays (exact for an unbounded plane wave; the path-phase model
// supplies any field contribution).
Wavefront incident_wavefront(const Scenario& s, const FieldModel& field,
                             const SourceRef& src, const Aperture& ap0,
                             double t) {
  Wavefront w;
  w.z = ap0.z;
  w.xs = aperture_window(ap0, s.source.samples);
  w.amps.assign(w.xs.size(), {1.0, 0.0});
  w.src = src;
  if (s.source.z0 == ap0.z) return w;

  const PhaseEngine engine(s.model, field, src, t);
  const double mid = 0.5 * (w.xs.front() + w.xs.back());
  const Segment ref{{mid, s.source.z0}, {mid, ap0.z}};
  const double ref_field = engine.field_phase(ref);
  for (std::size_t i = 0; i < w.xs.size(); ++i) {
    const Segment ray{{w.xs[i], s.source.z0}, {w.xs[i], ap0.z}};
    const double phase = engine.field_phase(ray) - ref_field;
    w.amps[i] = std::polar(1.0, phase);
  }
  return w;
}

AlternativeMinimal make_alternative(const Scenario& s) {
  AlternativeMinimal am;
  am.slit_channel = s.slit_channel;
  am.channel_paths = s.channel_paths;
  return am;
}

}  // namespace

ScenarioResult run(const Scenario& s, int threads, double t,
                   const GaugeFunction* extra_gauge) {
  validate(s);
  FieldModel field = effective_field(s);
  if (extra_gauge) {
    field = apply_gauge(field, *extra_gauge);
  }
  const SourceRef src = make_source(s, field);

  Wavefront w = incident_wavefront(s, field, src, s.apertures.front(), t);
  for (std::size_t i = 0; i < s.apertures.size(); ++i) {
    const Aperture& ap = s.apertures[i];
    if (i > 0) {
      w = huygens_step(w, ap.z, aperture_window(ap, s.source.samples), field,
                       s.model, t, threads);
    }
    w = apply_aperture(std::move(w), ap);
  }

  std::vector<double> screen_xs =
      uniform_grid(0.0, s.screen.half_extent, s.screen.samples);

  Wavefront on_screen;
  if (s.model.is_alternative()) {
    const AlternativeMinimal am = make_alternative(s);
    const std::size_t n_channels = s.channel_paths.size();
    const auto& slits = s.apertures.back().slits;
    std::vector<Wavefront> per_channel;
    per_channel.reserve(n_channels);
    for (std::size_t c = 0; c < n_channels; ++c) {
      Aperture channel_mask{s.apertures.back().z, {}};
      for (std::size_t k = 0; k < slits.size(); ++k) {
        if (s.slit_channel[k] == static_cast<int>(c)) {
          channel_mask.slits.push_back(slits[k]);
        }
      }
      Wavefront wc = w;
      if (channel_mask.slits.empty()) {
        for (auto& amp : wc.amps) amp = 0.0;
      } else {
        wc = apply_aperture(std::move(wc), channel_mask);
      }
      per_channel.push_back(
          huygens_step(wc, s.screen.z, screen_xs, field, s.model, t, threads));
    }
    on_screen = combine_channels(per_channel, am, field, src, t);
  } else {
    on_screen =
        huygens_step(w, s.screen.z, screen_xs, field, s.model, t, threads);
  }

  ScenarioResult result;
  result.pattern.xs = on_screen.xs;
  result.pattern.intensity.resize(on_screen.amps.size());
  for (std::size_t i = 0; i < on_screen.amps.size(); ++i) {
    result.pattern.intensity[i] = std::norm(on_screen.amps[i]);
  }
  result.pattern.scenario = s.name;
  result.pattern.model = s.model.name();
  result.model_used = s.model.name();
  result.field_summary = field_summary(field);

  const PhaseEngine diag_engine(s.model, field, src, t);
  const Aperture& last = s.apertures.back();
  for (std::size_t k = 0; k < last.slits.size(); ++k) {
    const Slit& slit = last.slits[k];
    const Segment ray{{slit.center, last.z}, {slit.center, s.screen.z}};
    SlitDiagnostic d;
    d.slit = static_cast<int>(k);
    d.center = slit.center;
    d.phase_field = diag_engine.field_phase(ray);
    d.phase_total = diag_engine.raw_phase(ray);
    result.slit_diagnostics.push_back(d);
  }
  return result;
}

std::vector<ScenarioResult> run_time_series(const Scenario& s,
                                            const std::vector<double>& ts,
                                            int threads) {
  std::vector<ScenarioResult> out;
  out.reserve(ts.size());
  for (double t : ts) {
    out.push_back(run(s, threads, t));
  }
  return out;
}

double headline_relative_shift() {
  const UnitSystem si = UnitSystem::si();
  const double shift_per_meter =
      0.01 * constants::elementary_charge_si * 0.01 / si.h;
  return shift_per_meter * 3e-12;  // against lambda0 = 0.03 angstrom
}

}  // namespace abwave
