#pragma once

#include <variant>
#include <vector>

#include "abwave/circulation.hpp"
#include "abwave/field.hpp"
#include "abwave/kinematics.hpp"

namespace abwave {

enum class LocalVariant {
  magnitude,  // isotropic medium: phase = integral of |k0 + q dA/hbar| dl
  projected,  // phase = |k0| L + (q/hbar) integral of (A - A0) . dl
};

struct LocalWavefront {
  LocalVariant variant = LocalVariant::magnitude;
};

struct TopologicalAB {};

// Declared channel decomposition: free propagation inside each channel,
// relative phases attached at combination from representative paths.
struct AlternativeMinimal {
  std::vector<int> slit_channel;        // slit index -> channel id
  std::vector<Polyline> channel_paths;  // one representative path per channel
};

struct PathPhaseModel {
  std::variant<LocalWavefront, TopologicalAB, AlternativeMinimal> v;

  bool is_alternative() const {
    return std::holds_alternative<AlternativeMinimal>(v);
  }
  std::string name() const;
};

// Raw accumulated phase along one straight segment, in radians.  Absolute
// phases can be enormous in SI mode; propagation uses the relative form
// below instead.
double path_phase(const PathPhaseModel& model, const FieldModel& field,
                  const SourceRef& src, const Segment& seg, double t);

// Phase engine for one propagation stage.  Precomputes what the per-pair
// inner loop needs and evaluates phases relative to a reference segment so
// the free-propagation part never suffers large-argument cancellation.
class PhaseEngine {
 public:
  PhaseEngine(const PathPhaseModel& model, const FieldModel& field,
              const SourceRef& src, double t);

  // phase(seg) - phase(ref); exact cancellation of the common parts when the
  // segments share both station planes.
  double relative_phase(const Segment& seg, const Segment& ref) const;

  double raw_phase(const Segment& seg) const;

  // Model-specific field part of the phase; the caller can cache the
  // reference segment's value across a whole propagation stage.
  double field_phase(const Segment& seg) const;

  double k0_magnitude() const { return k0_mag_; }

 private:
  double magnitude_excess(const Segment& seg) const;   // integral of |k|-|k0|

  const PathPhaseModel& model_;
  const FieldModel& field_;
  const SourceRef& src_;
  double t_;
  double k0_mag_;
  double q_over_hbar_;
  // Birth-point A split per superposition part; per-part differences keep
  // pure-gauge contributions identically zero in the magnitude integrand.
  std::vector<const FieldModel*> parts_;
  std::vector<Vec2> parts_a0_;
};

// Stable length difference |seg| - |ref| for plane-parallel segments.
double length_difference(const Segment& seg, const Segment& ref);

}  // namespace abwave
