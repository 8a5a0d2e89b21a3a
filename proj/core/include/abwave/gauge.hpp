#pragma once

#include <variant>

#include "abwave/geometry.hpp"

namespace abwave {

// Gauge function catalog: scalar S(r,t) with closed-form gradient and time
// derivative.  The pure-gauge potential is A = grad S, phi = -dS/dt.

struct ConstantGauge {
  double value = 0.0;
};

// S = slope . r
struct LinearGauge {
  Vec2 slope;
};

// S = height * exp(-|r - center|^2 / (2 width^2))
struct GaussianBumpGauge {
  Vec2 center;
  double width = 1.0;
  double height = 1.0;
};

// S = rate * t
struct TimeLinearGauge {
  double rate = 0.0;
};

struct GaugeFunction {
  std::variant<ConstantGauge, LinearGauge, GaussianBumpGauge, TimeLinearGauge>
      fn;

  double value(Vec2 p, double t) const;
  Vec2 gradient(Vec2 p, double t) const;
  double time_derivative(Vec2 p, double t) const;

  // Same shape with all parameters negated; S_neg = -S.
  GaugeFunction negated() const;
};

}  // namespace abwave
