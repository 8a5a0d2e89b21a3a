#include "abwave/circulation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace abwave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---- flux tube -----------------------------------------------------------

// Roots of |a + s d - c|^2 = R^2 inside (0,1), ascending.
void circle_crossings(const FluxTube& m, Vec2 a, Vec2 d,
                      std::vector<double>& out) {
  const Vec2 ac = a - m.center;
  const double qa = norm_sq(d);
  const double qb = 2.0 * dot(d, ac);
  const double qc = norm_sq(ac) - m.radius * m.radius;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc <= 0.0 || qa == 0.0) return;
  const double sq = std::sqrt(disc);
  // Numerically stable pair of roots.
  const double q = -0.5 * (qb + std::copysign(sq, qb));
  double r0 = q / qa;
  double r1 = (q != 0.0) ? qc / q : r0;
  if (r0 > r1) std::swap(r0, r1);
  if (r0 > 0.0 && r0 < 1.0) out.push_back(r0);
  if (r1 > 0.0 && r1 < 1.0) out.push_back(r1);
}

// Exact circulation of one tube along [p0, p1].
double tube_piece(const FluxTube& m, Vec2 p0, Vec2 p1) {
  const Vec2 u0 = p0 - m.center;
  const Vec2 u1 = p1 - m.center;
  const Vec2 mid = (p0 + p1) * 0.5 - m.center;
  if (norm_sq(mid) < m.radius * m.radius) {
    // Interior A is linear in position; the integral reduces to the swept
    // triangle area.
    return m.flux / (kTwoPi * m.radius * m.radius) * cross(u0, u1);
  }
  // Exterior A = (flux/2pi) grad(theta); the integral is the swept angle.
  const double dtheta = std::atan2(cross(u0, u1), dot(u0, u1));
  return m.flux / kTwoPi * dtheta;
}

double tube_circulation(const FluxTube& m, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  std::vector<double> knots;
  circle_crossings(m, a, d, knots);
  std::sort(knots.begin(), knots.end());
  double total = 0.0;
  double s_prev = 0.0;
  Vec2 p_prev = a;
  for (double s : knots) {
    if (s <= s_prev) continue;
    const Vec2 p = a + d * s;
    total += tube_piece(m, p_prev, p);
    s_prev = s;
    p_prev = p;
  }
  total += tube_piece(m, p_prev, b);
  return total;
}

// ---- toroid bore ----------------------------------------------------------

// One blend factor expressed as p + q cos(G (z - c)) over a z interval.
struct CosForm {
  double p = 1.0;
  double q = 0.0;
  double g = 0.0;
  double c = 0.0;
};

double sinc_like(double u) {
  if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

// Integral of cos(G z - P) over [z0, z1], stable for small G.
double int_cos(double big_g, double big_p, double z0, double z1) {
  const double dz = z1 - z0;
  const double mid = 0.5 * (z0 + z1);
  return dz * std::cos(big_g * mid - big_p) * sinc_like(0.5 * big_g * dz);
}

double cos_form_product_integral(const CosForm& f1, const CosForm& f2,
                                 double z0, double z1) {
  const double dz = z1 - z0;
  double total = f1.p * f2.p * dz;
  if (f2.q != 0.0) {
    total += f1.p * f2.q * int_cos(f2.g, f2.g * f2.c, z0, z1);
  }
  if (f1.q != 0.0) {
    total += f2.p * f1.q * int_cos(f1.g, f1.g * f1.c, z0, z1);
  }
  if (f1.q != 0.0 && f2.q != 0.0) {
    // cos X cos Y = (cos(X+Y) + cos(X-Y)) / 2
    const double gp = f1.g + f2.g;
    const double gm = f1.g - f2.g;
    const double pp = f1.g * f1.c + f2.g * f2.c;
    const double pm = f1.g * f1.c - f2.g * f2.c;
    total += 0.5 * f1.q * f2.q *
             (int_cos(gp, pp, z0, z1) + int_cos(gm, pm, z0, z1));
  }
  return total;
}

// Blend branch of wz at a z value strictly inside one knot interval.
// kind: 0 zero, 1 flat, 2 cosine ramp (form filled in).
int wz_branch(const ToroidBore& m, double z, CosForm& form) {
  const double r = m.ramp();
  if (z <= m.z_lo || z >= m.z_hi) return 0;
  if (z < m.z_lo + r) {
    form = {0.5, -0.5, std::numbers::pi / r, m.z_lo};
    return 2;
  }
  if (z > m.z_hi - r) {
    form = {0.5, -0.5, std::numbers::pi / r, m.z_hi};
    return 2;
  }
  return 1;
}

int wx_branch(const ToroidBore& m, double x, double& center_out) {
  const double r = m.ramp();
  if (x <= m.x_lo || x >= m.x_hi) return 0;
  if (x < m.x_lo + r) {
    center_out = m.x_lo;
    return 2;
  }
  if (x > m.x_hi - r) {
    center_out = m.x_hi;
    return 2;
  }
  return 1;
}

void push_if_inside(double v, double lo, double hi, std::vector<double>& out) {
  if (v > lo && v < hi) out.push_back(v);
}

// Exact circulation of the bore field along [a, b].  A is axial, so only the
// z-progress of the segment contributes; pieces with wx == 1 depend only on
// their z bounds, which keeps equal-z-span segments bit-identical.
double toroid_circulation(const ToroidBore& m, Vec2 a, Vec2 b) {
  const Vec2 d = b - a;
  if (d.z == 0.0) return 0.0;
  const double amp = m.b_field * m.thickness;
  if (amp == 0.0) return 0.0;

  const double z_start = std::min(a.z, b.z);
  const double z_end = std::max(a.z, b.z);
  const double r = m.ramp();

  std::vector<double> knots;
  knots.reserve(10);
  push_if_inside(m.z_lo, z_start, z_end, knots);
  push_if_inside(m.z_lo + r, z_start, z_end, knots);
  push_if_inside(m.z_hi - r, z_start, z_end, knots);
  push_if_inside(m.z_hi, z_start, z_end, knots);

  const double slope = d.x / d.z;  // x(z) affine along the segment
  auto x_of = [&](double z) { return a.x + (z - a.z) * slope; };
  if (d.x != 0.0) {
    const double zslope = d.z / d.x;
    for (double xk : {m.x_lo, m.x_lo + r, m.x_hi - r, m.x_hi}) {
      push_if_inside(a.z + (xk - a.x) * zslope, z_start, z_end, knots);
    }
  }
  std::sort(knots.begin(), knots.end());
  knots.push_back(z_end);

  double integral = 0.0;
  double z0 = z_start;
  for (double z1 : knots) {
    if (z1 <= z0) continue;
    const double zm = 0.5 * (z0 + z1);
    CosForm fz;
    const int bz = wz_branch(m, zm, fz);
    if (bz == 0) {
      z0 = z1;
      continue;
    }
    double xc = 0.0;
    const int bx = wx_branch(m, x_of(zm), xc);
    if (bx == 0) {
      z0 = z1;
      continue;
    }
    CosForm fx;  // defaults to the flat form p=1 q=0
    if (bx == 2) {
      if (slope == 0.0) {
        const double w = m.wx(a.x);
        fx = {w, 0.0, 0.0, 0.0};
      } else {
        // cos(gx (x - xc)) = cos(gx slope (z - zc))
        const double gx = std::numbers::pi / r;
        fx = {0.5, -0.5, gx * slope, a.z + (xc - a.x) / slope};
      }
    }
    if (bz == 1) fz = CosForm{};  // flat
    integral += cos_form_product_integral(fz, fx, z0, z1);
    z0 = z1;
  }
  const double signed_integral = (b.z >= a.z) ? integral : -integral;
  return amp * signed_integral;
}

// ---- dispatch --------------------------------------------------------------

struct CirculationVisitor {
  Vec2 a, b;
  double t;
  double operator()(const Vacuum&) const { return 0.0; }
  double operator()(const UniformScalar&) const { return 0.0; }
  double operator()(const FluxTube& m) const { return tube_circulation(m, a, b); }
  double operator()(const FluxTubePair& m) const {
    return tube_circulation(m.first, a, b) + tube_circulation(m.second, a, b);
  }
  double operator()(const ToroidBore& m) const {
    return toroid_circulation(m, a, b);
  }
  double operator()(const PureGauge& m) const {
    return m.gauge.value(b, t) - m.gauge.value(a, t);
  }
  double operator()(const Superposition& m) const {
    double total = 0.0;
    for (const auto& part : m.parts) total += segment_circulation(part, a, b, t);
    return total;
  }
};

}  // namespace

double segment_circulation(const FieldModel& model, Vec2 a, Vec2 b, double t) {
  return std::visit(CirculationVisitor{a, b, t}, model.variant());
}

double polyline_circulation(const FieldModel& model, const Polyline& path,
                            double t) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    total += segment_circulation(model, path[i], path[i + 1], t);
  }
  return total;
}

// ---- classification --------------------------------------------------------

namespace {

void classify_toroid(const ToroidBore& m, Vec2 a, Vec2 d,
                     std::vector<SegmentPiece>& out) {
  const double r = m.ramp();
  std::vector<double> knots;
  if (d.z != 0.0) {
    for (double zk : {m.z_lo, m.z_lo + r, m.z_hi - r, m.z_hi}) {
      push_if_inside((zk - a.z) / d.z, 0.0, 1.0, knots);
    }
  }
  if (d.x != 0.0) {
    for (double xk : {m.x_lo, m.x_lo + r, m.x_hi - r, m.x_hi}) {
      push_if_inside((xk - a.x) / d.x, 0.0, 1.0, knots);
    }
  }
  std::sort(knots.begin(), knots.end());
  knots.push_back(1.0);
  double s0 = 0.0;
  for (double s1 : knots) {
    if (s1 <= s0) continue;
    const double sm = 0.5 * (s0 + s1);
    const Vec2 pm = a + d * sm;
    const double wz = m.wz(pm.z);
    const double wx = m.wx(pm.x);
    SegmentPiece piece{s0, s1, PieceKind::smooth, {}};
    if (wz == 0.0 || wx == 0.0 || m.b_field * m.thickness == 0.0) {
      piece.kind = PieceKind::zero;
    } else if (wz == 1.0 && wx == 1.0) {
      piece.kind = PieceKind::uniform;
      piece.a_uniform = m.a_inside();
    }
    out.push_back(piece);
    s0 = s1;
  }
}

void classify_tube(const FluxTube& m, Vec2 a, Vec2 d,
                   std::vector<SegmentPiece>& out) {
  std::vector<double> knots;
  circle_crossings(m, a, d, knots);
  std::sort(knots.begin(), knots.end());
  knots.push_back(1.0);
  double s0 = 0.0;
  for (double s1 : knots) {
    if (s1 <= s0) continue;
    out.push_back({s0, s1, m.flux == 0.0 ? PieceKind::zero : PieceKind::smooth,
                   {}});
    s0 = s1;
  }
}

struct ClassifyVisitor {
  Vec2 a, b;
  std::vector<SegmentPiece> operator()(const Vacuum&) const {
    return {{0.0, 1.0, PieceKind::zero, {}}};
  }
  std::vector<SegmentPiece> operator()(const UniformScalar&) const {
    return {{0.0, 1.0, PieceKind::zero, {}}};
  }
  std::vector<SegmentPiece> operator()(const FluxTube& m) const {
    std::vector<SegmentPiece> out;
    classify_tube(m, a, b - a, out);
    return out;
  }
  std::vector<SegmentPiece> operator()(const FluxTubePair& m) const {
    std::vector<SegmentPiece> lhs, rhs;
    classify_tube(m.first, a, b - a, lhs);
    classify_tube(m.second, a, b - a, rhs);
    return merge(lhs, rhs);
  }
  std::vector<SegmentPiece> operator()(const ToroidBore& m) const {
    std::vector<SegmentPiece> out;
    classify_toroid(m, a, b - a, out);
    return out;
  }
  std::vector<SegmentPiece> operator()(const PureGauge& m) const {
    if (std::holds_alternative<LinearGauge>(m.gauge.fn)) {
      return {{0.0, 1.0, PieceKind::uniform,
               std::get<LinearGauge>(m.gauge.fn).slope}};
    }
    if (const auto* bump = std::get_if<GaussianBumpGauge>(&m.gauge.fn)) {
      // exp underflows to exactly zero beyond ~38.6 widths; treat the
      // segment as field-free there.
      const Vec2 d = b - a;
      const double len_sq = norm_sq(d);
      double s = len_sq > 0.0 ? dot(bump->center - a, d) / len_sq : 0.0;
      s = std::clamp(s, 0.0, 1.0);
      const double dist = norm(a + d * s - bump->center);
      if (dist > 40.0 * bump->width) {
        return {{0.0, 1.0, PieceKind::zero, {}}};
      }
      return {{0.0, 1.0, PieceKind::smooth, {}}};
    }
    return {{0.0, 1.0, PieceKind::zero, {}}};
  }
  std::vector<SegmentPiece> operator()(const Superposition& m) const {
    std::vector<SegmentPiece> acc = {{0.0, 1.0, PieceKind::zero, {}}};
    for (const auto& part : m.parts) {
      acc = merge(acc, classify_segment(part, a, b));
    }
    return acc;
  }

  static std::vector<SegmentPiece> merge(const std::vector<SegmentPiece>& lhs,
                                         const std::vector<SegmentPiece>& rhs) {
    std::vector<double> knots;
    for (const auto& p : lhs) knots.push_back(p.s1);
    for (const auto& p : rhs) knots.push_back(p.s1);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    auto kind_at = [](const std::vector<SegmentPiece>& pieces, double s,
                      Vec2& a_out) {
      for (const auto& p : pieces) {
        if (s <= p.s1) {
          a_out = p.a_uniform;
          return p.kind;
        }
      }
      a_out = {};
      return pieces.back().kind;
    };
    std::vector<SegmentPiece> out;
    double s0 = 0.0;
    for (double s1 : knots) {
      if (s1 <= s0) continue;
      const double sm = 0.5 * (s0 + s1);
      Vec2 la, ra;
      const PieceKind lk = kind_at(lhs, sm, la);
      const PieceKind rk = kind_at(rhs, sm, ra);
      SegmentPiece piece{s0, s1, PieceKind::smooth, {}};
      if (lk == PieceKind::smooth || rk == PieceKind::smooth) {
        piece.kind = PieceKind::smooth;
      } else if (lk == PieceKind::zero && rk == PieceKind::zero) {
        piece.kind = PieceKind::zero;
      } else {
        piece.kind = PieceKind::uniform;
        piece.a_uniform = la + ra;  // zero pieces carry a zero vector
      }
      out.push_back(piece);
      s0 = s1;
    }
    return out;
  }
};

}  // namespace

std::vector<SegmentPiece> classify_segment(const FieldModel& model, Vec2 a,
                                           Vec2 b) {
  return std::visit(ClassifyVisitor{a, b}, model.variant());
}

}  // namespace abwave
