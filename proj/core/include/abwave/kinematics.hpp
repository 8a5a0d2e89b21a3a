#pragma once

#include "abwave/field.hpp"
#include "abwave/geometry.hpp"
#include "abwave/units.hpp"

namespace abwave {

// Birth record of the particle.  nu0 and k0 are independent inputs; the
// potentials at the birth point are sampled once at construction and anchor
// every local-state evaluation afterwards.
struct SourceRef {
  double charge = 1.0;
  double mass = 1.0;
  Vec2 r0;
  double t0 = 0.0;
  Vec2 k0{0.0, 1.0};
  double nu0 = 1.0;
  PotentialSample at_birth;
  UnitSystem units;

  static SourceRef create(double charge, double mass, Vec2 r0, double t0,
                          Vec2 k0, double nu0, const FieldModel& field,
                          const UnitSystem& units) {
    SourceRef s{charge, mass, r0, t0, k0, nu0, sample(field, r0, t0), units};
    return s;
  }
};

struct LocalState {
  Vec2 k;
  double nu = 0.0;
  Vec2 at;
};

// nu(r,t) = nu0 + q (phi(r,t) - phi(r0,t0)) / h
double local_frequency(const SourceRef& src, const FieldModel& field, Vec2 p,
                       double t);

// k(r,t) = k0 + q (A(r,t) - A(r0,t0)) / hbar
Vec2 local_wavevector(const SourceRef& src, const FieldModel& field, Vec2 p,
                      double t);

LocalState local_state(const SourceRef& src, const FieldModel& field, Vec2 p,
                       double t);

// [nu h - q phi]^2 - c^2 |k hbar - q A|^2 at p.  Conserved along the wave by
// construction of the local state.
double kg_invariant(const SourceRef& src, const FieldModel& field, Vec2 p,
                    double t);

// |invariant(p) - invariant(r0,t0)| normalized by the invariant's natural
// scale at the birth point.  Algebraically zero; anything above rounding
// noise flags an implementation fault.
double kg_residual(const SourceRef& src, const FieldModel& field, Vec2 p,
                   double t);

struct ApparentMass {
  double m_sq = 0.0;  // (energy units)^2; may be negative
};

// Mass-squared a potential-ignorant observer infers from (nu, lambda):
// SI mode (h nu)^2 - (h c / lambda)^2; reduced mode nu^2 - 1/lambda^2
// (natural units with the quantum of action set to 1 for this report).
ApparentMass apparent_mass_sq(double nu, double lambda,
                              const UnitSystem& units);

// Delta(1/lambda) = thickness * q B / h for the elongated toroidal solenoid.
double predict_inverse_wavelength_shift(double b_field, double thickness,
                                        double charge,
                                        const UnitSystem& units);

}  // namespace abwave
