#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "abwave/circulation.hpp"
#include "abwave/field.hpp"
#include "abwave/quadrature.hpp"
#include "abwave/units.hpp"
#include "oracles.hpp"

using namespace abwave;

namespace {

constexpr double kPi = std::numbers::pi;

// Catalog instances shared by the property tests (reduced units).
std::vector<std::pair<std::string, FieldModel>> catalog() {
  std::vector<std::pair<std::string, FieldModel>> fields;
  fields.emplace_back("vacuum", FieldModel{Vacuum{}});
  fields.emplace_back("flux_tube", FieldModel{FluxTube{{3.0, -2.0}, 4.0, kPi}});
  fields.emplace_back(
      "flux_tube_pair",
      FieldModel{FluxTubePair{{{-8.0, 0.0}, 4.0, kPi}, {{8.0, 0.0}, 4.0, -kPi}}});
  fields.emplace_back(
      "toroid_bore",
      FieldModel{ToroidBore{-50.0, 450.0, -200.0, 200.0, 0.4, 1.0, 0.0}});
  fields.emplace_back("uniform_scalar",
                      FieldModel{UniformScalar{std::nullopt, 2.0, 0.3}});
  fields.emplace_back(
      "pure_gauge_bump",
      FieldModel{PureGauge{GaugeFunction{GaussianBumpGauge{{10.0, 40.0}, 25.0, 3.0}}}});
  fields.emplace_back("pure_gauge_linear",
                      FieldModel{PureGauge{GaugeFunction{LinearGauge{{0.2, -0.4}}}}});
  Superposition super;
  super.parts.push_back(FieldModel{FluxTube{{0.0, 0.0}, 5.0, kPi}});
  super.parts.push_back(
      FieldModel{ToroidBore{100.0, 300.0, -150.0, 150.0, 0.2, 1.0, 0.0}});
  fields.emplace_back("superposition", FieldModel{std::move(super)});
  return fields;
}

Polyline random_star_polygon(std::mt19937_64& gen, Vec2 center, double r_min,
                             double r_max, int n_vertices) {
  std::uniform_real_distribution<double> radius(r_min, r_max);
  Polyline loop;
  for (int i = 0; i < n_vertices; ++i) {
    const double theta = 2.0 * kPi * i / n_vertices;
    const double r = radius(gen);
    loop.push_back({center.x + r * std::cos(theta),
                    center.z + r * std::sin(theta)});
  }
  loop.push_back(loop.front());
  return loop;
}

}  // namespace

TEST_CASE("sample: vacuum is identically zero") {
  const FieldModel vac{Vacuum{}};
  auto gen = oracles::rng(11);
  std::uniform_real_distribution<double> coord(-1e4, 1e4);
  for (int i = 0; i < 32; ++i) {
    const PotentialSample s = sample(vac, {coord(gen), coord(gen)}, coord(gen));
    CHECK(s.a.x == 0.0);
    CHECK(s.a.z == 0.0);
    CHECK(s.phi == 0.0);
  }
}

TEST_CASE("sample: flux tube exterior at rho = 2R on the +x axis") {
  const double flux = 2.5;
  const double radius = 3.0;
  const FieldModel tube{FluxTube{{0.0, 0.0}, radius, flux}};
  const PotentialSample s = sample(tube, {2.0 * radius, 0.0}, 0.0);
  // Tangential, +z by the right-hand rule, magnitude flux/(4 pi R).
  CHECK(s.a.x == doctest::Approx(0.0));
  CHECK(s.a.z == doctest::Approx(flux / (4.0 * kPi * radius)).epsilon(1e-12));
  CHECK(s.phi == 0.0);
}

TEST_CASE("sample: flux tube interior ramps linearly and is continuous") {
  const FieldModel tube{FluxTube{{0.0, 0.0}, 2.0, 1.7}};
  const double just_in = norm(sample(tube, {1.999999, 0.0}, 0.0).a);
  const double just_out = norm(sample(tube, {2.000001, 0.0}, 0.0).a);
  CHECK(just_in == doctest::Approx(just_out).epsilon(1e-5));
  const double half = norm(sample(tube, {1.0, 0.0}, 0.0).a);
  CHECK(half == doctest::Approx(0.5 * just_in).epsilon(1e-5));
}

TEST_CASE("sample: toroid bore interior carries the SI headline value") {
  const UnitSystem si = UnitSystem::si();
  (void)si;
  ToroidBore bore{0.0, 10.0, -5.0, 5.0, 0.01, 0.01, 0.0};
  const FieldModel field{bore};
  const PotentialSample s = sample(field, {0.0, 5.0}, 0.0);
  CHECK(s.a.x == 0.0);
  CHECK(s.a.z == doctest::Approx(1.0e-4).epsilon(1e-12));
  CHECK(s.phi == 0.0);
  const PotentialSample outside = sample(field, {0.0, 20.0}, 0.0);
  CHECK(outside.a.z == 0.0);
}

TEST_CASE("apply_gauge: constant gauge leaves sampling untouched") {
  const FieldModel vac{Vacuum{}};
  const FieldModel gauged = apply_gauge(vac, GaugeFunction{ConstantGauge{4.2}});
  auto gen = oracles::rng(12);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  for (int i = 0; i < 16; ++i) {
    const Vec2 p{coord(gen), coord(gen)};
    const PotentialSample s = sample(gauged, p, 0.0);
    CHECK(s.a.x == 0.0);
    CHECK(s.a.z == 0.0);
    CHECK(s.phi == 0.0);
  }
}

TEST_CASE("apply_gauge: axial linear gauge gives a uniform axial A") {
  const double az = 0.37;
  const FieldModel gauged =
      apply_gauge(FieldModel{Vacuum{}}, GaugeFunction{LinearGauge{{0.0, az}}});
  const PotentialSample s = sample(gauged, {12.0, -7.0}, 1.0);
  CHECK(s.a.x == 0.0);
  CHECK(s.a.z == doctest::Approx(az).epsilon(1e-15));
  CHECK(s.phi == 0.0);
}

TEST_CASE("apply_gauge: applying a gauge and its negation cancels") {
  const auto fields = catalog();
  auto gen = oracles::rng(13);
  std::uniform_real_distribution<double> coord(-300.0, 300.0);
  const GaugeFunction g{GaussianBumpGauge{{5.0, 5.0}, 30.0, 2.0}};
  for (const auto& [name, field] : fields) {
    const FieldModel round_trip = apply_gauge(apply_gauge(field, g), g.negated());
    for (int i = 0; i < 8; ++i) {
      const Vec2 p{coord(gen), coord(gen)};
      const PotentialSample a = sample(field, p, 0.5);
      const PotentialSample b = sample(round_trip, p, 0.5);
      CHECK(std::abs(a.a.x - b.a.x) < 1e-12);
      CHECK(std::abs(a.a.z - b.a.z) < 1e-12);
      CHECK(std::abs(a.phi - b.phi) < 1e-12);
    }
  }
}

TEST_CASE("gauge functions: closed-form gradient matches central differences") {
  std::vector<GaugeFunction> gauges = {
      GaugeFunction{ConstantGauge{2.0}},
      GaugeFunction{LinearGauge{{0.3, -0.7}}},
      GaugeFunction{GaussianBumpGauge{{4.0, -6.0}, 12.0, 5.0}},
      GaugeFunction{TimeLinearGauge{1.3}},
  };
  auto gen = oracles::rng(14);
  std::uniform_real_distribution<double> coord(-30.0, 30.0);
  const double h = 1e-5;
  for (const auto& g : gauges) {
    for (int i = 0; i < 20; ++i) {
      const Vec2 p{coord(gen), coord(gen)};
      const Vec2 grad = g.gradient(p, 0.7);
      const double fd_x =
          (g.value({p.x + h, p.z}, 0.7) - g.value({p.x - h, p.z}, 0.7)) /
          (2.0 * h);
      const double fd_z =
          (g.value({p.x, p.z + h}, 0.7) - g.value({p.x, p.z - h}, 0.7)) /
          (2.0 * h);
      const double scale = std::max({std::abs(grad.x), std::abs(grad.z), 1e-3});
      CHECK(std::abs(grad.x - fd_x) < 1e-6 * scale + 1e-9);
      CHECK(std::abs(grad.z - fd_z) < 1e-6 * scale + 1e-9);
    }
  }
}

TEST_CASE("line_integral_A: vacuum paths vanish") {
  const FieldModel vac{Vacuum{}};
  const Polyline path = {{0.0, 0.0}, {10.0, 5.0}, {-3.0, 40.0}};
  CHECK(line_integral_A(vac, path, 0.0) == 0.0);
}

TEST_CASE("line_integral_A: square loop around a flux tube recovers the flux") {
  const double flux = 1.9;
  const double radius = 1.5;
  const FieldModel tube{FluxTube{{0.5, -0.25}, radius, flux}};
  const double side = 8.0 * radius;
  const Polyline loop = {{-side / 2, -side / 2},
                         {side / 2, -side / 2},
                         {side / 2, side / 2},
                         {-side / 2, side / 2},
                         {-side / 2, -side / 2}};
  const double got = line_integral_A(tube, loop, 0.0);
  CHECK(got == doctest::Approx(flux).epsilon(1e-6));
}

TEST_CASE("line_integral_A: axial path inside the bore gives B t L") {
  const ToroidBore bore{0.0, 1000.0, -100.0, 100.0, 0.25, 2.0, 0.0};
  const FieldModel field{bore};
  const Polyline path = {{10.0, 50.0}, {10.0, 950.0}};
  const double expected = 0.25 * 2.0 * 900.0;
  CHECK(line_integral_A(field, path, 0.0) ==
        doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("line_integral_A: additive over concatenation, sign flips on reversal") {
  const FieldModel tube{FluxTube{{0.0, 0.0}, 2.0, 3.3}};
  const Polyline ab = {{-10.0, -5.0}, {4.0, 7.0}};
  const Polyline bc = {{4.0, 7.0}, {12.0, -3.0}};
  const Polyline abc = {{-10.0, -5.0}, {4.0, 7.0}, {12.0, -3.0}};
  const Polyline cba = {{12.0, -3.0}, {4.0, 7.0}, {-10.0, -5.0}};
  const double sum =
      line_integral_A(tube, ab, 0.0) + line_integral_A(tube, bc, 0.0);
  const double whole = line_integral_A(tube, abc, 0.0);
  CHECK(whole == doctest::Approx(sum).epsilon(1e-12));
  CHECK(line_integral_A(tube, cba, 0.0) ==
        doctest::Approx(-whole).epsilon(1e-12));
}

TEST_CASE("closed_path_phase_factor: flux quanta") {
  const UnitSystem red = UnitSystem::reduced();
  const double h_over_q = red.h;  // q = 1
  const Polyline loop = {{-20.0, -20.0}, {20.0, -20.0}, {20.0, 20.0},
                         {-20.0, 20.0}, {-20.0, -20.0}};

  SUBCASE("full quantum -> unity") {
    const FieldModel tube{FluxTube{{0.0, 0.0}, 2.0, h_over_q}};
    const auto u = closed_path_phase_factor(tube, loop, 1.0, 0.0, red);
    CHECK(std::abs(u - std::complex<double>{1.0, 0.0}) < 1e-9);
  }
  SUBCASE("half quantum -> minus one") {
    const FieldModel tube{FluxTube{{0.0, 0.0}, 2.0, 0.5 * h_over_q}};
    const auto u = closed_path_phase_factor(tube, loop, 1.0, 0.0, red);
    CHECK(std::abs(u - std::complex<double>{-1.0, 0.0}) < 1e-9);
  }
  SUBCASE("equal and opposite pair -> unity") {
    const FieldModel pair{FluxTubePair{{{-5.0, 0.0}, 2.0, 0.5 * h_over_q},
                                       {{5.0, 0.0}, 2.0, -0.5 * h_over_q}}};
    const auto u = closed_path_phase_factor(pair, loop, 1.0, 0.0, red);
    CHECK(std::abs(u - std::complex<double>{1.0, 0.0}) < 1e-9);
  }
  SUBCASE("open loop throws") {
    Polyline open = loop;
    open.back().x += 1e-6;
    CHECK_THROWS_AS(
        closed_path_phase_factor(FieldModel{Vacuum{}}, open, 1.0, 0.0, red),
        OpenPathError);
  }
  SUBCASE("modulus is exactly one") {
    const FieldModel tube{FluxTube{{0.3, 0.1}, 2.0, 0.37}};
    const auto u = closed_path_phase_factor(tube, loop, 1.0, 0.0, red);
    CHECK(std::abs(u) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("stokes consistency: flux tubes against winding-number oracle") {
  auto gen = oracles::rng(21);
  const FluxTube tube{{1.0, 2.0}, 3.0, 2.4};
  const FieldModel field{tube};
  std::uniform_int_distribution<int> vertices(5, 12);
  for (int i = 0; i < 50; ++i) {
    // Loop fully enclosing the tube disc.
    const Polyline enclosing = random_star_polygon(
        gen, tube.center, 2.0 * tube.radius, 6.0 * tube.radius, vertices(gen));
    CHECK(line_integral_A(field, enclosing, 0.0) ==
          doctest::Approx(tube.flux).epsilon(1e-6));
    // Loop far away from the tube: zero enclosed flux.
    const Polyline distant = random_star_polygon(
        gen, {tube.center.x + 40.0, tube.center.z - 25.0}, 2.0, 6.0,
        vertices(gen));
    CHECK(std::abs(line_integral_A(field, distant, 0.0)) < 1e-6 * tube.flux);
  }
}

TEST_CASE("stokes consistency: toroid bore rectangles against ramp oracle") {
  const ToroidBore bore{-50.0, 450.0, -200.0, 200.0, 0.4, 1.0, 0.0};
  const FieldModel field{bore};
  const double ramp = bore.ramp();
  auto gen = oracles::rng(22);
  std::uniform_real_distribution<double> xs(-260.0, 260.0);
  std::uniform_real_distribution<double> zs(-120.0, 520.0);
  for (int i = 0; i < 50; ++i) {
    double x1 = xs(gen), x2 = xs(gen);
    double z1 = zs(gen), z2 = zs(gen);
    if (x1 > x2) std::swap(x1, x2);
    if (z1 > z2) std::swap(z1, z2);
    if (x2 - x1 < 1.0 || z2 - z1 < 1.0) continue;
    const Polyline rect = {{x1, z1}, {x2, z1}, {x2, z2}, {x1, z2}, {x1, z1}};
    const double expected =
        bore.b_field * bore.thickness * (bore.wx(x2) - bore.wx(x1)) *
        oracles::bore_profile_integral(bore.z_lo, bore.z_hi, ramp, z1, z2);
    const double got = line_integral_A(field, rect, 0.0);
    CHECK(std::abs(got - expected) <
          1e-6 * std::max(std::abs(expected), bore.b_field * (z2 - z1)));
  }
}

TEST_CASE("gauge closure: loop integrals unchanged by every catalog gauge") {
  const std::vector<GaugeFunction> gauges = {
      GaugeFunction{ConstantGauge{1.0}},
      GaugeFunction{LinearGauge{{0.1, 0.4}}},
      GaugeFunction{GaussianBumpGauge{{0.0, 10.0}, 15.0, 2.0}},
      GaugeFunction{TimeLinearGauge{0.7}},
  };
  auto gen = oracles::rng(23);
  std::uniform_int_distribution<int> vertices(4, 9);
  for (const auto& [name, field] : catalog()) {
    for (const auto& g : gauges) {
      const FieldModel gauged = apply_gauge(field, g);
      for (int i = 0; i < 5; ++i) {
        const Polyline loop =
            random_star_polygon(gen, {0.0, 100.0}, 30.0, 90.0, vertices(gen));
        const double base = line_integral_A(field, loop, 0.3);
        const double after = line_integral_A(gauged, loop, 0.3);
        CHECK(std::abs(after - base) < 1e-9 * (std::abs(base) + 1.0));
      }
    }
  }
}

TEST_CASE("curl-free check: small loops in declared field-free regions") {
  struct Probe {
    FieldModel field;
    std::function<bool(Vec2)> field_free;
  };
  const FluxTube tube{{0.0, 0.0}, 3.0, 2.0};
  const ToroidBore bore{-50.0, 450.0, -200.0, 200.0, 0.4, 1.0, 0.0};
  const double ramp = bore.ramp();
  std::vector<Probe> probes;
  probes.push_back({FieldModel{tube}, [tube](Vec2 p) {
                      return norm(p - tube.center) > 1.2 * tube.radius;
                    }});
  probes.push_back({FieldModel{bore}, [bore, ramp](Vec2 p) {
                      const bool inside_flat =
                          p.x > bore.x_lo + ramp && p.x < bore.x_hi - ramp &&
                          p.z > bore.z_lo + ramp && p.z < bore.z_hi - ramp;
                      const bool outside =
                          p.x < bore.x_lo - 1.0 || p.x > bore.x_hi + 1.0 ||
                          p.z < bore.z_lo - 1.0 || p.z > bore.z_hi + 1.0;
                      return inside_flat || outside;
                    }});
  probes.push_back({FieldModel{PureGauge{
                        GaugeFunction{GaussianBumpGauge{{0.0, 0.0}, 40.0, 3.0}}}},
                    [](Vec2) { return true; }});

  auto gen = oracles::rng(24);
  std::uniform_real_distribution<double> coord(-400.0, 600.0);
  const double domain_scale = 1000.0;
  const double side = 1e-6 * domain_scale;
  for (const auto& probe : probes) {
    int tested = 0;
    while (tested < 100) {
      const Vec2 c{coord(gen), coord(gen)};
      if (!probe.field_free(c)) continue;
      ++tested;
      const Polyline loop = {{c.x - side / 2, c.z - side / 2},
                             {c.x + side / 2, c.z - side / 2},
                             {c.x + side / 2, c.z + side / 2},
                             {c.x - side / 2, c.z + side / 2},
                             {c.x - side / 2, c.z - side / 2}};
      const double circ = line_integral_A(probe.field, loop, 0.0);
      const double a_local = norm(sample(probe.field, c, 0.0).a);
      const double bound = 1e-6 * std::max(a_local, 1e-6) * side;
      CHECK(std::abs(circ) / (side * side) <
            std::max(1e-6 * std::max(a_local, 1e-6) / side, 1e-9));
      (void)bound;
    }
  }
}

TEST_CASE("superposition sampling is component-wise exact") {
  const FieldModel a{FluxTube{{0.0, 0.0}, 2.0, 1.0}};
  const FieldModel b{ToroidBore{-10.0, 10.0, -10.0, 10.0, 0.3, 1.0, 0.0}};
  Superposition s;
  s.parts = {a, b};
  const FieldModel super{std::move(s)};
  auto gen = oracles::rng(25);
  std::uniform_real_distribution<double> coord(-15.0, 15.0);
  for (int i = 0; i < 50; ++i) {
    const Vec2 p{coord(gen), coord(gen)};
    const PotentialSample sa = sample(a, p, 0.0);
    const PotentialSample sb = sample(b, p, 0.0);
    const PotentialSample ss = sample(super, p, 0.0);
    CHECK(ss.a.x == sa.a.x + sb.a.x);
    CHECK(ss.a.z == sa.a.z + sb.a.z);
    CHECK(ss.phi == sa.phi + sb.phi);
  }
}

TEST_CASE("exact circulation agrees with quadrature on random segments") {
  auto gen = oracles::rng(26);
  std::uniform_real_distribution<double> coord(-300.0, 500.0);
  for (const auto& [name, field] : catalog()) {
    CAPTURE(name);
    for (int i = 0; i < 40; ++i) {
      const Vec2 a{coord(gen), coord(gen)};
      const Vec2 b{coord(gen), coord(gen)};
      if (norm(b - a) < 1.0) continue;
      const double exact = segment_circulation(field, a, b, 0.4);
      const double quad = line_integral_A(field, {a, b}, 0.4);
      CHECK(std::abs(exact - quad) < 1e-8 * (std::abs(exact) + 1.0));
    }
  }
}

TEST_CASE("adaptive simpson: converges on smooth, throws on hard singularities") {
  CHECK(adaptive_simpson([](double s) { return std::cos(s); }, 0.0, 1.0) ==
        doctest::Approx(std::sin(1.0)).epsilon(1e-12));
  CHECK_THROWS_AS(
      adaptive_simpson(
          [](double s) { return 1.0 / std::sqrt(std::abs(s - 1.0 / kPi)); },
          0.0, 1.0),
      QuadratureNonConvergence);
}
