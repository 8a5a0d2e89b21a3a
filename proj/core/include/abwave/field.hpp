#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abwave/gauge.hpp"
#include "abwave/geometry.hpp"
#include "abwave/units.hpp"

namespace abwave {

struct PotentialSample {
  Vec2 a;            // vector potential, tesla meter (SI) or reduced units
  double phi = 0.0;  // scalar potential, volts (SI) or reduced units
};

struct Box {
  double x_lo = 0.0, x_hi = 0.0;
  double z_lo = 0.0, z_hi = 0.0;
  bool contains(Vec2 p) const {
    return p.x >= x_lo && p.x <= x_hi && p.z >= z_lo && p.z <= z_hi;
  }
};

struct Vacuum {};

// Idealized infinite solenoid normal to the plane.  Positive flux circulates
// counterclockwise in the (x,z) chart; a counterclockwise loop enclosing the
// tube picks up +flux.
struct FluxTube {
  Vec2 center;
  double radius = 1.0;
  double flux = 0.0;  // webers
};

struct FluxTubePair {
  FluxTube first;
  FluxTube second;
};

// Bore of an elongated toroidal solenoid: uniform axial A = B * thickness
// inside the box, zero outside, cosine-blended over edge_ramp at each face.
// The transverse faces model the winding band and carry real curl; the axial
// faces stay curl-free (A_z varying with z only).
struct ToroidBore {
  double z_lo = 0.0, z_hi = 1.0;  // axial extent of the bore
  double x_lo = 0.0, x_hi = 1.0;  // transverse extent
  double b_field = 0.0;           // winding field B
  double thickness = 0.0;         // winding radial build; A_z inside = B * thickness
  double edge_ramp = 0.0;         // blend width; 0 means 1% of the z length

  double ramp() const {
    return edge_ramp > 0.0 ? edge_ramp : 0.01 * (z_hi - z_lo);
  }
  // Blend profiles in [0,1]; exactly 0 outside, exactly 1 in the flat core.
  double wz(double z) const;
  double wx(double x) const;
  Vec2 a_inside() const { return {0.0, b_field * thickness}; }
};

// phi = volts + ramp_volts_per_s * t inside the region (everywhere when the
// region is not set); A = 0.
struct UniformScalar {
  std::optional<Box> region;
  double volts = 0.0;
  double ramp_volts_per_s = 0.0;
};

struct PureGauge {
  GaugeFunction gauge;
};

class FieldModel;

struct Superposition {
  std::vector<FieldModel> parts;
};

class FieldModel {
 public:
  using Variant = std::variant<Vacuum, FluxTube, FluxTubePair, ToroidBore,
                               UniformScalar, PureGauge, Superposition>;

  FieldModel() : v_(Vacuum{}) {}
  FieldModel(Vacuum m) : v_(m) {}
  FieldModel(FluxTube m) : v_(m) {}
  FieldModel(FluxTubePair m) : v_(m) {}
  FieldModel(ToroidBore m) : v_(m) {}
  FieldModel(UniformScalar m) : v_(std::move(m)) {}
  FieldModel(PureGauge m) : v_(std::move(m)) {}
  FieldModel(Superposition m) : v_(std::move(m)) {}

  const Variant& variant() const { return v_; }
  Variant& variant() { return v_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

 private:
  Variant v_;
};

PotentialSample sample(const FieldModel& model, Vec2 p, double t);

// Base field plus the pure-gauge potential of g: A -> A + grad S,
// phi -> phi - dS/dt.
FieldModel apply_gauge(const FieldModel& model, const GaugeFunction& g);

struct QuadratureOptions {
  double rel_tol = 1e-9;
  int max_depth = 40;
  double abs_floor = 0.0;  // scale under which the relative tolerance bottoms out
};

// Integral of A . dl over the polyline, adaptive Simpson per segment.
// Throws QuadratureNonConvergence if refinement stalls.
double line_integral_A(const FieldModel& model, const Polyline& path, double t,
                       const QuadratureOptions& opt = {});

// Eq-style closed-path factor exp(-i (q/hbar) closed-loop A . dl).
// Throws OpenPathError unless the loop closes to 1e-12.
std::complex<double> closed_path_phase_factor(const FieldModel& model,
                                              const Polyline& loop,
                                              double charge, double t,
                                              const UnitSystem& units,
                                              const QuadratureOptions& opt = {});

// One-line description for result metadata.
std::string field_summary(const FieldModel& model);

}  // namespace abwave
