#pragma once

#include <compare>
#include <cstdint>
#include <span>

namespace pdgrid {

/// 128-bit intermediate for exact products of 64-bit coordinates.
__extension__ typedef __int128 Wide;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation : int { right = -1, collinear = 0, left = 1 };

/// Sign of (q - p) x (r - p), evaluated in 128-bit arithmetic; exact for
/// coordinates of magnitude below 2^62.
Orientation orientation(Point p, Point q, Point r);

/// Twice the signed area of triangle pqr.
Wide cross(Point p, Point q, Point r);

/// True when r lies on the closed segment pq.
bool on_segment(Point p, Point q, Point r);

enum class Contact {
  none,    // closed segments are disjoint
  proper,  // interiors cross at a single point that is interior to both
  touch,   // any other contact: endpoint on a segment, shared point, overlap
};

Contact classify_segments(Point a, Point b, Point c, Point d);

enum class Side { inside, outside, boundary };

/// Position of p relative to the closed polygon with the given vertex
/// sequence (either orientation, no repeated closing vertex).
Side locate_in_polygon(std::span<const Point> polygon, Point p);

}  // namespace pdgrid
