#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>

#include "pursuit/errors.hpp"

namespace pursuit {

/// Absolute tolerance (length units) shared by tangency, on-curve and
/// endpoint-exclusion tests. Every predicate takes it as a parameter so the
/// engine can plumb a configured value through; this is the default.
inline constexpr double kGeomTolerance = 1e-9;

/// Below this separation two points are treated as coincident and the
/// constructions refuse. Capture semantics apply upstream of geometry.
inline constexpr double kDegeneracyTolerance = 1e-12;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point2 operator*(Point2 p, double s) { return {p.x * s, p.y * s}; }
constexpr Point2 operator*(double s, Point2 p) { return p * s; }
constexpr Point2 operator/(Point2 p, double s) { return {p.x / s, p.y / s}; }

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Point2 p) { return std::sqrt(p.x * p.x + p.y * p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline double norm_sq(Point2 p) { return p.x * p.x + p.y * p.y; }

/// Circle curve (not disk): center plus strictly positive radius.
struct Circle {
  Point2 center;
  double radius = 0.0;
};

/// Evader-to-pursuer speed ratio, constrained to (0, 1): every pursuer is
/// strictly faster than every evader.
struct SpeedRatio {
  explicit SpeedRatio(double rho) : value(rho) {
    if (!(rho > 0.0) || !(rho < 1.0))
      throw InvalidSpeeds("speed ratio must lie in (0, 1), got " + std::to_string(rho));
  }
  double value;
};

/// Up to two points, stored inline so the classifier's inner loops stay
/// allocation free.
struct PointPair {
  std::array<Point2, 2> pts{};
  int count = 0;

  void push(Point2 p) { pts[static_cast<std::size_t>(count++)] = p; }
  const Point2* begin() const { return pts.data(); }
  const Point2* end() const { return pts.data() + count; }
  bool empty() const { return count == 0; }
};

/// Circle of points X with ‖X − evader‖ = rho · ‖X − pursuer‖, rho = v/u.
/// This is the locus of capture points against a straight-running evader when
/// the pursuer holds a constant bearing. Center is (e − rho²·p)/(1 − rho²),
/// radius rho·‖p − e‖/(1 − rho²).
Circle apollonius_circle(Point2 pursuer, Point2 evader, double pursuer_speed,
                         double evader_speed);

struct CapturePoint {
  Point2 point;      ///< on the circle, along the sight line from the evader
  double distance;   ///< ‖point − evader‖ = v·‖p − e‖/(u + v)
};

/// Point of the pursuit circle nearest to the evader: where collision happens
/// if the evader runs straight at the pursuer.
CapturePoint nearest_capture_point(Point2 pursuer, Point2 evader,
                                   double pursuer_speed, double evader_speed);

/// Intersection points of two circle curves. Tangency (within tol) yields one
/// point; separation, containment and concentricity yield none.
PointPair circle_circle_intersections(const Circle& a, const Circle& b,
                                      double tol = kGeomTolerance);

/// Intersection points of the closed segment [a, b] with the circle curve.
/// Points within tol of exclude_endpoint are dropped, which implements the
/// "meets the union only at X" test with X sitting on the curve itself.
PointPair segment_circle_crossings(Point2 a, Point2 b, const Circle& c,
                                   const std::optional<Point2>& exclude_endpoint = {},
                                   double tol = kGeomTolerance);

/// True iff the segment [evader, x] meets the union of all circle curves only
/// at x itself, i.e. x is one of the radially nearest curve points seen from
/// the evader. Pre: x lies on at least one of the circles (not enforced).
bool is_boundary_point(Point2 x, Point2 evader, std::span<const Circle> circles,
                       double tol = kGeomTolerance);

}  // namespace pursuit
