#include "abwave/path_phase.hpp"

#include <cmath>

#include "abwave/quadrature.hpp"

namespace abwave {

std::string PathPhaseModel::name() const {
  if (const auto* lw = std::get_if<LocalWavefront>(&v)) {
    return lw->variant == LocalVariant::magnitude ? "local/magnitude"
                                                  : "local/projected";
  }
  if (std::holds_alternative<TopologicalAB>(v)) return "topological";
  return "alternative";
}

double length_difference(const Segment& seg, const Segment& ref) {
  const Vec2 ds = displacement(seg);
  const Vec2 dr = displacement(ref);
  if (seg.from.z == ref.from.z && seg.to.z == ref.to.z) {
    // Shared stations: the z parts cancel exactly, leaving a stable quotient.
    const double ls = norm(ds);
    const double lr = norm(dr);
    const double denom = ls + lr;
    if (denom == 0.0) return 0.0;
    return (ds.x - dr.x) * (ds.x + dr.x) / denom;
  }
  return norm(ds) - norm(dr);
}

namespace {

void flatten(const FieldModel& model, std::vector<const FieldModel*>& out) {
  if (const auto* super = model.get_if<Superposition>()) {
    for (const auto& part : super->parts) flatten(part, out);
    return;
  }
  out.push_back(&model);
}

// |k0 + dk| - |k0| without cancellation for small dk.
double excess_rate(Vec2 k0, Vec2 dk, double k0_mag) {
  const double shifted = norm(k0 + dk);
  const double denom = shifted + k0_mag;
  if (denom == 0.0) return 0.0;
  return (2.0 * dot(k0, dk) + norm_sq(dk)) / denom;
}

}  // namespace

PhaseEngine::PhaseEngine(const PathPhaseModel& model, const FieldModel& field,
                         const SourceRef& src, double t)
    : model_(model), field_(field), src_(src), t_(t) {
  k0_mag_ = norm(src.k0);
  q_over_hbar_ = src.charge / src.units.hbar;
  flatten(field_, parts_);
  parts_a0_.reserve(parts_.size());
  for (const FieldModel* part : parts_) {
    parts_a0_.push_back(sample(*part, src.r0, src.t0).a);
  }
}

double PhaseEngine::magnitude_excess(const Segment& seg) const {
  const Vec2 d = displacement(seg);
  const double len = norm(d);
  if (len == 0.0) return 0.0;

  // Per-part piece lists; shared knots.
  std::vector<std::vector<SegmentPiece>> pieces;
  pieces.reserve(parts_.size());
  std::vector<double> knots;
  for (const FieldModel* part : parts_) {
    pieces.push_back(classify_segment(*part, seg.from, seg.to));
    for (const auto& p : pieces.back()) knots.push_back(p.s1);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  auto part_kind = [](const std::vector<SegmentPiece>& list, double s,
                      Vec2& a_out) {
    for (const auto& p : list) {
      if (s <= p.s1) {
        a_out = p.a_uniform;
        return p.kind;
      }
    }
    a_out = {};
    return list.back().kind;
  };

  // dk(r) = (q/hbar) sum over parts of (A_part(r) - A_part(r0)); the per-part
  // subtraction keeps added pure-gauge parts identically zero.
  auto dk_at = [&](double s) {
    const Vec2 p = seg.from + d * s;
    Vec2 acc{};
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      acc += sample(*parts_[i], p, t_).a - parts_a0_[i];
    }
    return acc * q_over_hbar_;
  };

  double total = 0.0;
  double s0 = 0.0;
  for (double s1 : knots) {
    if (s1 <= s0) continue;
    const double sm = 0.5 * (s0 + s1);
    bool smooth = false;
    Vec2 dk_uniform{};
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      Vec2 a_u;
      const PieceKind kind = part_kind(pieces[i], sm, a_u);
      if (kind == PieceKind::smooth) {
        smooth = true;
        break;
      }
      // zero pieces carry a_u = 0 but still subtract the birth value
      dk_uniform += a_u - parts_a0_[i];
    }
    const double piece_len = len * (s1 - s0);
    if (smooth) {
      QuadratureOptions opt;
      opt.abs_floor = k0_mag_ * len;
      auto f = [&](double s) { return excess_rate(src_.k0, dk_at(s), k0_mag_); };
      total += len * adaptive_simpson(f, s0, s1, opt);
    } else {
      dk_uniform = dk_uniform * q_over_hbar_;
      if (dk_uniform.x != 0.0 || dk_uniform.z != 0.0) {
        total += excess_rate(src_.k0, dk_uniform, k0_mag_) * piece_len;
      }
    }
    s0 = s1;
  }
  return total;
}

double PhaseEngine::field_phase(const Segment& seg) const {
  if (std::holds_alternative<TopologicalAB>(model_.v)) {
    return q_over_hbar_ * segment_circulation(field_, seg.from, seg.to, t_);
  }
  if (const auto* lw = std::get_if<LocalWavefront>(&model_.v)) {
    if (lw->variant == LocalVariant::projected) {
      const double circ = segment_circulation(field_, seg.from, seg.to, t_);
      return q_over_hbar_ *
             (circ - dot(src_.at_birth.a, displacement(seg)));
    }
    return magnitude_excess(seg);
  }
  return 0.0;  // AlternativeMinimal: free propagation inside a channel
}

double PhaseEngine::relative_phase(const Segment& seg, const Segment& ref) const {
  return k0_mag_ * length_difference(seg, ref) + field_phase(seg) -
         field_phase(ref);
}

double PhaseEngine::raw_phase(const Segment& seg) const {
  return k0_mag_ * length(seg) + field_phase(seg);
}

double path_phase(const PathPhaseModel& model, const FieldModel& field,
                  const SourceRef& src, const Segment& seg, double t) {
  return PhaseEngine(model, field, src, t).raw_phase(seg);
}

}  // namespace abwave
