#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abwave/field.hpp"
#include "abwave/huygens.hpp"
#include "abwave/pattern.hpp"
#include "abwave/wavefront.hpp"

namespace abwave {

// Which part of the beamline the toroidal solenoid covers.  The axial extent
// of a ToroidBore field is rewritten from the scenario geometry when a
// coverage other than `none` is selected.
enum class Coverage {
  none,
  all_except_source,
  after_slit,
  slit_and_source,
  slit_only,
  source_only,
};

std::string to_string(Coverage c);
std::optional<Coverage> coverage_from_string(const std::string& s);

struct SourceSpec {
  UnitMode unit_mode = UnitMode::reduced;
  double charge = 1.0;
  double mass = 1.0;
  double x0 = 0.0;
  double z0 = 0.0;
  double t0 = 0.0;
  double lambda0 = 1.0;  // sets |k0| = 2 pi / lambda0, beam along +z
  double nu0 = 1.0;
  int samples = 2048;
  // Gauge convention: subtract the birth-point A so the new-born particle
  // carries zero field momentum.  Default on; predictions of the local
  // models are unchanged by construction.
  bool zero_source_momentum_gauge = true;
};

struct ScreenSpec {
  double z = 1.0;
  double half_extent = 1.0;
  int samples = 1024;
};

// A complete experiment: source, aperture planes, field placement, screen,
// path-phase model, plus the declared channel decomposition used when the
// model is AlternativeMinimal.
struct Scenario {
  std::string name;
  SourceSpec source;
  std::vector<Aperture> apertures;
  FieldModel field;
  Coverage coverage = Coverage::none;
  ScreenSpec screen;
  PathPhaseModel model{LocalWavefront{}};
  std::vector<int> slit_channel;        // per slit of the last aperture
  std::vector<Polyline> channel_paths;  // one per channel id

  UnitSystem units() const { return UnitSystem::of(source.unit_mode); }
};

// Throws ValidationError; every runnable scenario passes this first.
void validate(const Scenario& s);

// Field actually simulated: coverage-resolved axial extent, then the
// zero-source-momentum gauge if requested.
FieldModel effective_field(const Scenario& s);

SourceRef make_source(const Scenario& s, const FieldModel& field);

struct SlitDiagnostic {
  int slit = 0;
  double center = 0.0;
  double phase_total = 0.0;  // raw path phase of the axial representative ray
  double phase_field = 0.0;  // field contribution alone
};

struct ScenarioResult {
  Pattern pattern;
  std::string model_used;
  std::string field_summary;
  std::vector<SlitDiagnostic> slit_diagnostics;
};

ScenarioResult run(const Scenario& s, int threads = 1, double t = 0.0,
                   const GaugeFunction* extra_gauge = nullptr);

std::vector<ScenarioResult> run_time_series(const Scenario& s,
                                            const std::vector<double>& ts,
                                            int threads = 1);

// Builtin catalog: fig1_1 .. fig1_6, scalar_vt, free.
Scenario builtin(const std::string& name);  // throws UnknownScenario
const std::vector<std::string>& builtin_names();
std::string builtin_description(const std::string& name);

// Exact SI arithmetic of the headline example (B = 0.01 T, thickness =
// 0.01 m, lambda0 = 0.03 angstrom): the relative wavelength-scale shift
// lambda0 * Delta(1/lambda).  Used to map the builtin toroid strength into
// reduced units.
double headline_relative_shift();

}  // namespace abwave
