#include "abwave/field.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "abwave/errors.hpp"
#include "abwave/quadrature.hpp"

namespace abwave {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ramp_up(double s, double r) {
  // cosine blend from 0 at s=0 to 1 at s=r
  return 0.5 * (1.0 - std::cos(std::numbers::pi * s / r));
}
}  // namespace

double ToroidBore::wz(double z) const {
  const double r = ramp();
  if (z <= z_lo || z >= z_hi) return 0.0;
  if (z < z_lo + r) return ramp_up(z - z_lo, r);
  if (z > z_hi - r) return ramp_up(z_hi - z, r);
  return 1.0;
}

double ToroidBore::wx(double x) const {
  const double r = ramp();
  if (x <= x_lo || x >= x_hi) return 0.0;
  if (x < x_lo + r) return ramp_up(x - x_lo, r);
  if (x > x_hi - r) return ramp_up(x_hi - x, r);
  return 1.0;
}

namespace {

Vec2 flux_tube_a(const FluxTube& m, Vec2 p) {
  const Vec2 d = p - m.center;
  const double rho_sq = norm_sq(d);
  const double r_sq = m.radius * m.radius;
  // Tangential direction (-d.z, d.x)/rho: counterclockwise circulation.
  // Outside: |A| = flux/(2 pi rho); inside: |A| = flux rho/(2 pi R^2).
  const double scale = (rho_sq >= r_sq) ? m.flux / (kTwoPi * rho_sq)
                                        : m.flux / (kTwoPi * r_sq);
  return {-d.z * scale, d.x * scale};
}

struct SampleVisitor {
  Vec2 p;
  double t;

  PotentialSample operator()(const Vacuum&) const { return {}; }
  PotentialSample operator()(const FluxTube& m) const {
    return {flux_tube_a(m, p), 0.0};
  }
  PotentialSample operator()(const FluxTubePair& m) const {
    return {flux_tube_a(m.first, p) + flux_tube_a(m.second, p), 0.0};
  }
  PotentialSample operator()(const ToroidBore& m) const {
    const double w = m.wz(p.z) * m.wx(p.x);
    return {m.a_inside() * w, 0.0};
  }
  PotentialSample operator()(const UniformScalar& m) const {
    if (m.region && !m.region->contains(p)) return {};
    return {{}, m.volts + m.ramp_volts_per_s * t};
  }
  PotentialSample operator()(const PureGauge& m) const {
    return {m.gauge.gradient(p, t), -m.gauge.time_derivative(p, t)};
  }
  PotentialSample operator()(const Superposition& m) const {
    PotentialSample total;
    for (const auto& part : m.parts) {
      const PotentialSample s = sample(part, p, t);
      total.a += s.a;
      total.phi += s.phi;
    }
    return total;
  }
};

}  // namespace

PotentialSample sample(const FieldModel& model, Vec2 p, double t) {
  return std::visit(SampleVisitor{p, t}, model.variant());
}

FieldModel apply_gauge(const FieldModel& model, const GaugeFunction& g) {
  Superposition s;
  s.parts.push_back(model);
  s.parts.push_back(FieldModel{PureGauge{g}});
  return FieldModel{std::move(s)};
}

double line_integral_A(const FieldModel& model, const Polyline& path, double t,
                       const QuadratureOptions& opt) {
  if (path.size() < 2) {
    throw ValidationError("path", "line integral needs at least 2 points");
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Vec2 a = path[i];
    const Vec2 b = path[i + 1];
    const Vec2 d = b - a;
    auto integrand = [&](double s) {
      const Vec2 p = a + d * s;
      return dot(sample(model, p, t).a, d);
    };
    QuadratureOptions seg_opt = opt;
    // Floor the relative tolerance with a local field scale so vacuum
    // segments settle immediately.
    const double mid = std::abs(integrand(0.5));
    const double ends = std::abs(integrand(0.0)) + std::abs(integrand(1.0));
    seg_opt.abs_floor = std::max(opt.abs_floor, 1e-9 * (mid + ends));
    total += adaptive_simpson(integrand, 0.0, 1.0, seg_opt);
  }
  return total;
}

std::complex<double> closed_path_phase_factor(const FieldModel& model,
                                              const Polyline& loop,
                                              double charge, double t,
                                              const UnitSystem& units,
                                              const QuadratureOptions& opt) {
  if (loop.size() < 3) {
    throw OpenPathError("loop needs at least 3 points");
  }
  if (norm(loop.front() - loop.back()) > 1e-12) {
    throw OpenPathError("loop endpoints do not coincide");
  }
  const double circulation = line_integral_A(model, loop, t, opt);
  const double phase = -(charge / units.hbar) * circulation;
  return std::polar(1.0, phase);
}

namespace {

struct SummaryVisitor {
  std::string operator()(const Vacuum&) const { return "vacuum"; }
  std::string operator()(const FluxTube& m) const {
    std::ostringstream os;
    os << "flux_tube(center=(" << m.center.x << "," << m.center.z
       << "),R=" << m.radius << ",flux=" << m.flux << ")";
    return os.str();
  }
  std::string operator()(const FluxTubePair& m) const {
    return "pair[" + SummaryVisitor{}(m.first) + "," +
           SummaryVisitor{}(m.second) + "]";
  }
  std::string operator()(const ToroidBore& m) const {
    std::ostringstream os;
    os << "toroid_bore(z=[" << m.z_lo << "," << m.z_hi << "],x=[" << m.x_lo
       << "," << m.x_hi << "],B=" << m.b_field << ",t=" << m.thickness << ")";
    return os.str();
  }
  std::string operator()(const UniformScalar& m) const {
    std::ostringstream os;
    os << "uniform_scalar(V=" << m.volts << ",rate=" << m.ramp_volts_per_s
       << (m.region ? ",boxed" : ",everywhere") << ")";
    return os.str();
  }
  std::string operator()(const PureGauge&) const { return "pure_gauge"; }
  std::string operator()(const Superposition& m) const {
    std::string out = "superposition[";
    for (std::size_t i = 0; i < m.parts.size(); ++i) {
      if (i) out += ",";
      out += field_summary(m.parts[i]);
    }
    return out + "]";
  }
};

}  // namespace

std::string field_summary(const FieldModel& model) {
  return std::visit(SummaryVisitor{}, model.variant());
}

}  // namespace abwave
