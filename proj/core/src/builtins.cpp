#include <map>
#include <numbers>

#include "abwave/errors.hpp"
#include "abwave/scenario.hpp"

namespace abwave {

namespace {

// Shared reduced-mode geometry (lengths in units of the source wavelength):
// plane-wave source at z = -2000, double slit at z = 0 with separation 50 and
// width 10, screen at z = 5000 with half extent 1500.  Dyadic-friendly
// extents keep the sample grids exactly mirror symmetric.
Scenario double_slit_base(const std::string& name) {
  Scenario s;
  s.name = name;
  s.source.unit_mode = UnitMode::reduced;
  s.source.charge = 1.0;
  s.source.mass = 1.0;
  s.source.x0 = 0.0;
  s.source.z0 = -2000.0;
  s.source.t0 = 0.0;
  s.source.lambda0 = 1.0;
  s.source.nu0 = 1.0;
  s.source.samples = 2048;
  s.apertures = {{0.0, {{-25.0, 10.0}, {25.0, 10.0}}}};
  // Odd screen sampling puts one sample exactly on the axis, so symmetric
  // patterns carry an unambiguous central maximum.
  s.screen = {5000.0, 1500.0, 1025};
  s.model = PathPhaseModel{LocalWavefront{LocalVariant::magnitude}};
  // Simply connected by default: one channel, axial representative path.
  s.slit_channel = {0, 0};
  s.channel_paths = {{{0.0, 0.0}, {0.0, 5000.0}}};
  return s;
}

void two_channels(Scenario& s) {
  s.slit_channel = {0, 1};
  s.channel_paths = {{{-25.0, 0.0}, {-25.0, 5000.0}},
                     {{25.0, 0.0}, {25.0, 5000.0}}};
}

// Toroid strength matched to the headline SI example: q B t / h equals the
// headline Delta(1/lambda) in reduced units (lambda0 = 1, q = 1).
double builtin_bore_strength() {
  return headline_relative_shift() * 2.0 * std::numbers::pi;  // = B * thickness
}

Scenario make_builtin(const std::string& name) {
  const double half_flux_quantum = std::numbers::pi;  // h/(2q), reduced units

  if (name == "free") {
    Scenario s = double_slit_base(name);
    s.field = FieldModel{Vacuum{}};
    return s;
  }
  if (name == "fig1_1") {
    Scenario s = double_slit_base(name);
    s.field = FieldModel{FluxTube{{0.0, 0.0}, 5.0, half_flux_quantum}};
    two_channels(s);
    return s;
  }
  if (name == "fig1_2") {
    Scenario s = double_slit_base(name);
    s.field = FieldModel{FluxTubePair{{{-8.0, 0.0}, 4.0, half_flux_quantum},
                                      {{8.0, 0.0}, 4.0, -half_flux_quantum}}};
    two_channels(s);
    return s;
  }
  if (name == "fig1_3") {
    Scenario s = double_slit_base(name);
    s.field = FieldModel{FluxTubePair{{{-30.0, -200.0}, 5.0, half_flux_quantum},
                                      {{30.0, -200.0}, 5.0, -half_flux_quantum}}};
    two_channels(s);
    return s;
  }
  if (name == "fig1_4") {
    Scenario s = double_slit_base(name);
    s.field = FieldModel{FluxTubePair{{{-60.0, -400.0}, 5.0, half_flux_quantum},
                                      {{60.0, -400.0}, 5.0, -half_flux_quantum}}};
    two_channels(s);
    return s;
  }
  if (name == "fig1_5") {
    Scenario s = double_slit_base(name);
    ToroidBore bore;
    bore.x_lo = -3200.0;
    bore.x_hi = 3200.0;
    bore.b_field = builtin_bore_strength();
    bore.thickness = 1.0;
    bore.edge_ramp = 0.0;  // 1% of the resolved axial extent
    s.field = FieldModel{bore};
    s.coverage = Coverage::after_slit;
    return s;
  }
  if (name == "fig1_6") {
    Scenario s = double_slit_base(name);
    ToroidBore bore;
    bore.z_lo = -10.0;
    bore.z_hi = 5500.0;
    bore.x_lo = -5.0;  // boundary between the two channels
    bore.x_hi = 3200.0;
    bore.b_field = builtin_bore_strength();
    bore.thickness = 1.0;
    bore.edge_ramp = 10.0;  // keeps both slits clear of the blend band
    s.field = FieldModel{bore};
    two_channels(s);
    return s;
  }
  if (name == "scalar_vt") {
    Scenario s = double_slit_base(name);
    s.field = FieldModel{UniformScalar{std::nullopt, 1.0, 0.5}};
    return s;
  }
  throw UnknownScenario("unknown scenario: " + name);
}

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d = {
      {"free", "vacuum double slit, the reference pattern"},
      {"fig1_1", "flux tube between the slits (half flux quantum default)"},
      {"fig1_2", "opposite flux-tube pair between the slits (returning flux)"},
      {"fig1_3", "opposite flux-tube dipole ahead of the slits"},
      {"fig1_4", "the dipole moved outward, doubled separation and distance"},
      {"fig1_5", "toroid bore covering the post-slit region (title effect)"},
      {"fig1_6", "toroid bore over one channel only"},
      {"scalar_vt", "uniform time-ramped scalar potential everywhere"},
  };
  return d;
}

}  // namespace

Scenario builtin(const std::string& name) { return make_builtin(name); }

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "free",   "fig1_1", "fig1_2", "fig1_3",
      "fig1_4", "fig1_5", "fig1_6", "scalar_vt"};
  return names;
}

std::string builtin_description(const std::string& name) {
  auto it = descriptions().find(name);
  return it == descriptions().end() ? std::string{} : it->second;
}

}  // namespace abwave
