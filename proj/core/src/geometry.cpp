#include "pdgrid/geometry.hpp"

#include <algorithm>

namespace pdgrid {

Wide cross(Point p, Point q, Point r) {
  const Wide ax = static_cast<Wide>(q.x) - p.x, ay = static_cast<Wide>(q.y) - p.y;
  const Wide bx = static_cast<Wide>(r.x) - p.x, by = static_cast<Wide>(r.y) - p.y;
  return ax * by - ay * bx;
}

Orientation orientation(Point p, Point q, Point r) {
  const Wide c = cross(p, q, r);
  if (c > 0) return Orientation::left;
  if (c < 0) return Orientation::right;
  return Orientation::collinear;
}

bool on_segment(Point p, Point q, Point r) {
  return orientation(p, q, r) == Orientation::collinear && std::min(p.x, q.x) <= r.x &&
         r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

Contact classify_segments(Point a, Point b, Point c, Point d) {
  const int o1 = static_cast<int>(orientation(c, d, a));
  const int o2 = static_cast<int>(orientation(c, d, b));
  const int o3 = static_cast<int>(orientation(a, b, c));
  const int o4 = static_cast<int>(orientation(a, b, d));
  if (o1 * o2 < 0 && o3 * o4 < 0) return Contact::proper;
  if (on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) || on_segment(a, b, d)) {
    return Contact::touch;
  }
  return Contact::none;
}

Side locate_in_polygon(std::span<const Point> polygon, Point p) {
  const std::size_t n = polygon.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = polygon[i];
    const Point b = polygon[(i + 1) % n];
    if (on_segment(a, b, p)) return Side::boundary;
    // Half-open rule on y so vertices are counted once.
    if ((a.y > p.y) != (b.y > p.y)) {
      const Wide c = cross(a, b, p);
      // Crossing lies strictly right of p when p is on the left of the
      // upward-directed edge.
      if ((b.y > a.y) ? c > 0 : c < 0) inside = !inside;
    }
  }
  return inside ? Side::inside : Side::outside;
}

}  // namespace pdgrid
