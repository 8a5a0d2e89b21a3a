#pragma once

#include <numbers>

namespace abwave {

enum class UnitMode { si, reduced };

// CODATA 2018 exact values.
namespace constants {
inline constexpr double planck_h_si = 6.62607015e-34;            // J s
inline constexpr double elementary_charge_si = 1.602176634e-19;  // C
inline constexpr double light_speed_si = 299792458.0;            // m/s
inline constexpr double electron_mass_si = 9.1093837015e-31;     // kg
}  // namespace constants

// The two unit systems the solver runs in.  SI carries the CODATA constants.
// Reduced sets hbar = 1, q = 1 and measures lengths so that the default
// source wavelength comes out at 1; it keeps propagation phases small enough
// for double precision at desk-scale geometries.
struct UnitSystem {
  UnitMode mode = UnitMode::reduced;
  double h = 2.0 * std::numbers::pi;
  double hbar = 1.0;
  double c = 1.0;

  static UnitSystem si() {
    return {UnitMode::si, constants::planck_h_si,
            constants::planck_h_si / (2.0 * std::numbers::pi),
            constants::light_speed_si};
  }
  static UnitSystem reduced() { return {}; }
  static UnitSystem of(UnitMode m) {
    return m == UnitMode::si ? si() : reduced();
  }
};

}  // namespace abwave
