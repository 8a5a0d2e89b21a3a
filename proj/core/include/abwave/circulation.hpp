#pragma once

#include <vector>

#include "abwave/field.hpp"
#include "abwave/geometry.hpp"

namespace abwave {

// Exact line integral of A along one straight segment, evaluated in closed
// form per field variant (flux tubes via swept angles, the toroid bore via
// piecewise cosine antiderivatives, pure gauges via S endpoint differences).
// This is the path-phase engine's route; the quadrature route in
// line_integral_A cross-checks it in the test suite.
double segment_circulation(const FieldModel& model, Vec2 a, Vec2 b, double t);

double polyline_circulation(const FieldModel& model, const Polyline& path,
                            double t);

// Segment decomposition used by the |k|-magnitude phase integrals: pieces
// where A vanishes or is uniform get closed forms, the rest go to quadrature.
enum class PieceKind { zero, uniform, smooth };

struct SegmentPiece {
  double s0 = 0.0;
  double s1 = 1.0;
  PieceKind kind = PieceKind::smooth;
  Vec2 a_uniform;  // valid when kind == uniform
};

std::vector<SegmentPiece> classify_segment(const FieldModel& model, Vec2 a,
                                           Vec2 b);

}  // namespace abwave
