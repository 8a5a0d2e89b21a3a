#include "abwave/huygens.hpp"

#include <cmath>

#include "abwave/errors.hpp"
#include "abwave/parallel.hpp"

namespace abwave {

namespace {

// Neumaier-compensated accumulator; fixed order gives bit-stable sums.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

Wavefront huygens_step(const Wavefront& w, double target_z,
                       std::vector<double> target_xs, const FieldModel& field,
                       const PathPhaseModel& model, double t, int threads) {
  validate_wavefront(w);
  if (!(target_z > w.z)) {
    throw ValidationError("huygens", "target station must be downstream");
  }
  const double dz = target_z - w.z;
  const double dx = w.spacing();
  if (dz < 10.0 * dx) {
    throw DegenerateGeometry(
        "station gap below 10 sample spacings; kernel near field limit");
  }

  const std::size_t n_src = w.xs.size();
  const std::size_t n_tgt = target_xs.size();
  Wavefront out;
  out.z = target_z;
  out.xs = std::move(target_xs);
  out.amps.assign(n_tgt, {0.0, 0.0});
  out.src = w.src;

  const PhaseEngine engine(model, field, w.src, t);
  const double mid_src = 0.5 * (w.xs.front() + w.xs.back());
  const double mid_tgt = 0.5 * (out.xs.front() + out.xs.back());
  const Segment ref{{mid_src, w.z}, {mid_tgt, target_z}};
  const double ref_field_phase = engine.field_phase(ref);
  const double ref_dx = mid_tgt - mid_src;
  const double ref_len = std::hypot(ref_dx, dz);
  const double k0 = engine.k0_magnitude();

  parallel_for(n_tgt, threads, [&](std::size_t bi) {
    const double xb = out.xs[bi];
    CompensatedSum re, im;
    const std::size_t half = (n_src + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
      const std::size_t j2 = n_src - 1 - i;
      double pair_re = 0.0, pair_im = 0.0;
      // Evaluate the symmetric pair (i, n-1-i); addition inside the pair is
      // commutative, which preserves exact mirror symmetry.
      auto term = [&](std::size_t j, double& tre, double& tim) {
        const std::complex<double>& amp = w.amps[j];
        if (amp.real() == 0.0 && amp.imag() == 0.0) {
          tre = 0.0;
          tim = 0.0;
          return;
        }
        const double xj = w.xs[j];
        const double dxs = xb - xj;
        const double len = std::hypot(dxs, dz);
        // stable |seg| - |ref| via the shared-plane quotient
        const double ldiff = (dxs - ref_dx) * (dxs + ref_dx) / (len + ref_len);
        const double phase = k0 * ldiff +
                             engine.field_phase({{xj, w.z}, {xb, target_z}}) -
                             ref_field_phase;
        const double weight = dx / std::sqrt(len);
        const double c = std::cos(phase) * weight;
        const double s = std::sin(phase) * weight;
        tre = amp.real() * c - amp.imag() * s;
        tim = amp.real() * s + amp.imag() * c;
      };
      double re_a, im_a;
      term(i, re_a, im_a);
      if (j2 != i) {
        double re_b, im_b;
        term(j2, re_b, im_b);
        pair_re = re_a + re_b;
        pair_im = im_a + im_b;
      } else {
        pair_re = re_a;
        pair_im = im_a;
      }
      re.add(pair_re);
      im.add(pair_im);
    }
    out.amps[bi] = {re.value(), im.value()};
  });

  return out;
}

Wavefront combine_channels(const std::vector<Wavefront>& channels,
                           const AlternativeMinimal& model,
                           const FieldModel& field, const SourceRef& src,
                           double t) {
  if (channels.empty()) {
    throw ChannelMismatch("no channels to combine");
  }
  if (model.channel_paths.size() < channels.size()) {
    throw ChannelMismatch("missing representative paths");
  }
  const Wavefront& first = channels.front();
  for (const auto& c : channels) {
    if (c.xs.size() != first.xs.size() || std::abs(c.z - first.z) > 1e-12 ||
        c.xs != first.xs) {
      throw ChannelMismatch("channels must share station and grid");
    }
  }
  const double q_over_hbar = src.charge / src.units.hbar;
  const double phase0 =
      polyline_circulation(field, model.channel_paths[0], t) * q_over_hbar;

  Wavefront out = first;
  if (channels.size() == 1) return out;

  for (std::size_t i = 0; i < out.amps.size(); ++i) out.amps[i] = 0.0;
  for (std::size_t c = 0; c < channels.size(); ++c) {
    const double phase_c =
        polyline_circulation(field, model.channel_paths[c], t) * q_over_hbar;
    const std::complex<double> rot = std::polar(1.0, phase_c - phase0);
    for (std::size_t i = 0; i < out.amps.size(); ++i) {
      out.amps[i] += channels[c].amps[i] * rot;
    }
  }
  return out;
}

}  // namespace abwave
