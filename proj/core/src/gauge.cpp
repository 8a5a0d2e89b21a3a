#include "abwave/gauge.hpp"

#include <cmath>

namespace abwave {

namespace {

struct ValueVisitor {
  Vec2 p;
  double t;
  double operator()(const ConstantGauge& g) const { return g.value; }
  double operator()(const LinearGauge& g) const { return dot(g.slope, p); }
  double operator()(const GaussianBumpGauge& g) const {
    const Vec2 d = p - g.center;
    return g.height * std::exp(-norm_sq(d) / (2.0 * g.width * g.width));
  }
  double operator()(const TimeLinearGauge& g) const { return g.rate * t; }
};

struct GradientVisitor {
  Vec2 p;
  double t;
  Vec2 operator()(const ConstantGauge&) const { return {}; }
  Vec2 operator()(const LinearGauge& g) const { return g.slope; }
  Vec2 operator()(const GaussianBumpGauge& g) const {
    const Vec2 d = p - g.center;
    const double s =
        g.height * std::exp(-norm_sq(d) / (2.0 * g.width * g.width));
    return d * (-s / (g.width * g.width));
  }
  Vec2 operator()(const TimeLinearGauge&) const { return {}; }
};

struct TimeDerivativeVisitor {
  double operator()(const ConstantGauge&) const { return 0.0; }
  double operator()(const LinearGauge&) const { return 0.0; }
  double operator()(const GaussianBumpGauge&) const { return 0.0; }
  double operator()(const TimeLinearGauge& g) const { return g.rate; }
};

struct NegateVisitor {
  GaugeFunction operator()(const ConstantGauge& g) const {
    return {ConstantGauge{-g.value}};
  }
  GaugeFunction operator()(const LinearGauge& g) const {
    return {LinearGauge{-g.slope}};
  }
  GaugeFunction operator()(const GaussianBumpGauge& g) const {
    return {GaussianBumpGauge{g.center, g.width, -g.height}};
  }
  GaugeFunction operator()(const TimeLinearGauge& g) const {
    return {TimeLinearGauge{-g.rate}};
  }
};

}  // namespace

double GaugeFunction::value(Vec2 p, double t) const {
  return std::visit(ValueVisitor{p, t}, fn);
}

Vec2 GaugeFunction::gradient(Vec2 p, double t) const {
  return std::visit(GradientVisitor{p, t}, fn);
}

double GaugeFunction::time_derivative(Vec2 p, double t) const {
  (void)p;
  (void)t;
  return std::visit(TimeDerivativeVisitor{}, fn);
}

GaugeFunction GaugeFunction::negated() const {
  return std::visit(NegateVisitor{}, fn);
}

}  // namespace abwave
