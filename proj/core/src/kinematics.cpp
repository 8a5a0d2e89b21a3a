#include "abwave/kinematics.hpp"

#include <algorithm>
#include <cmath>

#include "abwave/errors.hpp"

namespace abwave {

double local_frequency(const SourceRef& src, const FieldModel& field, Vec2 p,
                       double t) {
  const PotentialSample here = sample(field, p, t);
  return src.nu0 +
         src.charge * (here.phi - src.at_birth.phi) / src.units.h;
}

Vec2 local_wavevector(const SourceRef& src, const FieldModel& field, Vec2 p,
                      double t) {
  const PotentialSample here = sample(field, p, t);
  return src.k0 + (here.a - src.at_birth.a) * (src.charge / src.units.hbar);
}

LocalState local_state(const SourceRef& src, const FieldModel& field, Vec2 p,
                       double t) {
  return {local_wavevector(src, field, p, t),
          local_frequency(src, field, p, t), p};
}

namespace {

double invariant_at(const SourceRef& src, double nu, Vec2 k,
                    const PotentialSample& pot) {
  const UnitSystem& u = src.units;
  const double energy = nu * u.h - src.charge * pot.phi;
  const Vec2 momentum = k * u.hbar - pot.a * src.charge;
  return energy * energy - u.c * u.c * norm_sq(momentum);
}

double invariant_scale(const SourceRef& src, const PotentialSample& pot) {
  const UnitSystem& u = src.units;
  const double energy = src.nu0 * u.h - src.charge * pot.phi;
  const Vec2 momentum = src.k0 * u.hbar - pot.a * src.charge;
  return energy * energy + u.c * u.c * norm_sq(momentum);
}

}  // namespace

double kg_invariant(const SourceRef& src, const FieldModel& field, Vec2 p,
                    double t) {
  const PotentialSample pot = sample(field, p, t);
  return invariant_at(src, local_frequency(src, field, p, t),
                      local_wavevector(src, field, p, t), pot);
}

double kg_residual(const SourceRef& src, const FieldModel& field, Vec2 p,
                   double t) {
  const double here = kg_invariant(src, field, p, t);
  const double birth = invariant_at(src, src.nu0, src.k0, src.at_birth);
  const double scale =
      std::max({std::abs(birth), invariant_scale(src, src.at_birth), 1e-300});
  return std::abs(here - birth) / scale;
}

ApparentMass apparent_mass_sq(double nu, double lambda,
                              const UnitSystem& units) {
  if (!(lambda > 0.0)) {
    throw NonpositiveWavelength("wavelength must be positive");
  }
  if (units.mode == UnitMode::si) {
    const double e = units.h * nu;
    const double pc = units.h * units.c / lambda;
    return {e * e - pc * pc};
  }
  // Natural-unit report: quantum of action 1, c = 1.
  return {nu * nu - 1.0 / (lambda * lambda)};
}

double predict_inverse_wavelength_shift(double b_field, double thickness,
                                        double charge,
                                        const UnitSystem& units) {
  if (!(thickness > 0.0)) {
    throw ValidationError("thickness", "must be positive");
  }
  return thickness * charge * b_field / units.h;
}

}  // namespace abwave
