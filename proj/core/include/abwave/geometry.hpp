#pragma once

#include <cmath>
#include <vector>

namespace abwave {

// The simulation plane is 2D: x transverse, z axial (beam direction).
// Time enters as a parameter, not a coordinate.
struct Vec2 {
  double x = 0.0;
  double z = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, z + o.z}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, z - o.z}; }
  Vec2 operator*(double s) const { return {x * s, z * s}; }
  Vec2 operator-() const { return {-x, -z}; }
  Vec2& operator+=(Vec2 o) {
    x += o.x;
    z += o.z;
    return *this;
  }
  bool operator==(const Vec2&) const = default;
};

using Point = Vec2;
using Polyline = std::vector<Vec2>;

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.z * b.z; }

// 2D cross product in the (x,z) chart; positive for counterclockwise turns.
inline double cross(Vec2 a, Vec2 b) { return a.x * b.z - a.z * b.x; }

inline double norm(Vec2 a) { return std::hypot(a.x, a.z); }
inline double norm_sq(Vec2 a) { return a.x * a.x + a.z * a.z; }

struct Segment {
  Vec2 from;
  Vec2 to;
};

inline Vec2 displacement(const Segment& s) { return s.to - s.from; }
inline double length(const Segment& s) { return norm(displacement(s)); }

}  // namespace abwave
