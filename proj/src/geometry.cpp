#include "pursuit/geometry.hpp"

#include <algorithm>

namespace pursuit {

namespace {

constexpr Point2 perp(Point2 v) { return {-v.y, v.x}; }

void check_speeds(double u, double v) {
  if (!(v > 0.0) || !(u > v))
    throw InvalidSpeeds("requires pursuer speed > evader speed > 0, got u=" +
                        std::to_string(u) + " v=" + std::to_string(v));
}

}  // namespace

Circle apollonius_circle(Point2 pursuer, Point2 evader, double pursuer_speed,
                         double evader_speed) {
  check_speeds(pursuer_speed, evader_speed);
  const double d = distance(pursuer, evader);
  if (d <= kDegeneracyTolerance)
    throw DegenerateGeometry("apollonius_circle: pursuer and evader coincide");
  const double rho = evader_speed / pursuer_speed;
  const double k = 1.0 - rho * rho;
  return Circle{(evader - pursuer * (rho * rho)) / k, rho * d / k};
}

CapturePoint nearest_capture_point(Point2 pursuer, Point2 evader,
                                   double pursuer_speed, double evader_speed) {
  check_speeds(pursuer_speed, evader_speed);
  const double d = distance(pursuer, evader);
  if (d <= kDegeneracyTolerance)
    throw DegenerateGeometry("nearest_capture_point: pursuer and evader coincide");
  const double reach = evader_speed * d / (pursuer_speed + evader_speed);
  const Point2 toward = (pursuer - evader) / d;
  return CapturePoint{evader + toward * reach, reach};
}

PointPair circle_circle_intersections(const Circle& a, const Circle& b, double tol) {
  PointPair out;
  const Point2 delta = b.center - a.center;
  const double d = norm(delta);
  if (d <= kDegeneracyTolerance) return out;  // concentric, coincident included
  const double rsum = a.radius + b.radius;
  const double rdiff = std::abs(a.radius - b.radius);
  if (d > rsum + tol) return out;   // separate
  if (d < rdiff - tol) return out;  // one nested inside the other
  const Point2 u = delta / d;
  const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  if (std::abs(d - rsum) <= tol || std::abs(d - rdiff) <= tol) {
    out.push(a.center + u * along);  // tangent contact
    return out;
  }
  const double h = std::sqrt(std::max(a.radius * a.radius - along * along, 0.0));
  const Point2 mid = a.center + u * along;
  const Point2 off = perp(u) * h;
  out.push(mid + off);
  out.push(mid - off);
  return out;
}

PointPair segment_circle_crossings(Point2 a, Point2 b, const Circle& c,
                                   const std::optional<Point2>& exclude_endpoint,
                                   double tol) {
  PointPair out;
  const Point2 dir = b - a;
  const double len_sq = norm_sq(dir);
  const double len = std::sqrt(len_sq);
  if (len <= kDegeneracyTolerance)
    throw DegenerateGeometry("segment_circle_crossings: zero-length segment");

  const Point2 rel = a - c.center;
  const double line_dist = std::abs(cross(dir, rel)) / len;
  if (line_dist > c.radius + tol) return out;

  const double t_lo = -tol / len;
  const double t_hi = 1.0 + tol / len;
  auto emit = [&](double t) {
    if (t < t_lo || t > t_hi) return;
    const Point2 p = a + dir * t;
    if (exclude_endpoint && distance(p, *exclude_endpoint) <= tol) return;
    if (out.count == 1 && distance(p, out.pts[0]) <= tol) return;
    out.push(p);
  };

  const double t_closest = -dot(rel, dir) / len_sq;
  if (line_dist >= c.radius - tol) {
    emit(t_closest);  // grazing contact counts as a single touch point
    return out;
  }
  const double half_chord = std::sqrt(std::max(c.radius * c.radius - line_dist * line_dist, 0.0)) / len;
  emit(t_closest - half_chord);
  emit(t_closest + half_chord);
  return out;
}

bool is_boundary_point(Point2 x, Point2 evader, std::span<const Circle> circles,
                       double tol) {
  if (distance(x, evader) <= kDegeneracyTolerance)
    throw DegenerateGeometry("is_boundary_point: query point coincides with the evader");
  for (const Circle& c : circles) {
    const PointPair hits = segment_circle_crossings(evader, x, c, x, tol);
    for (const Point2& p : hits) {
      // Crossings at the evader end are tolerated: the segment is half open
      // in spirit, the evader sits inside every circle in the generic case.
      if (distance(p, evader) > tol) return false;
    }
  }
  return true;
}

}  // namespace pursuit
