#include "pdgrid/render.hpp"

#include <algorithm>
#include <sstream>

#include "pdgrid/error.hpp"

namespace pdgrid {

namespace {

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const QuadGraph& q, const GridDrawing& d, const RenderStyle& style) {
  if (style.scale < 1) throw Error(ErrorKind::InvalidArgument, "scale must be at least 1");
  std::int64_t extent = 1;
  for (const Point& p : d.coords) extent = std::max({extent, p.x, p.y});
  if (d.bend) extent = std::max({extent, d.bend->point.x, d.bend->point.y});
  const std::int64_t s = style.scale;
  const std::int64_t margin = 1;
  const std::int64_t size = (extent + 2 * margin) * s;
  auto sx = [&](std::int64_t x) { return (x + margin) * s; };
  auto sy = [&](std::int64_t y) { return size - (y + margin) * s; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

  if (style.show_grid) {
    out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (std::int64_t i = 0; i <= extent; ++i) {
      out << "<path d=\"M" << sx(i) << " " << sy(0) << "V" << sy(extent) << "\"/>\n";
      out << "<path d=\"M" << sx(0) << " " << sy(i) << "H" << sx(extent) << "\"/>\n";
    }
    out << "</g>\n";
  }

  const bool has_bend = d.bend.has_value();
  auto is_bent = [&](VertexId a, VertexId b) {
    return has_bend && ((d.bend->from == a && d.bend->to == b) || (d.bend->from == b && d.bend->to == a));
  };
  auto edge = [&](VertexId a, VertexId b, const std::string& color) {
    if (is_bent(a, b)) {
      const Point p = d.coords[d.bend->from];
      const Point m = d.bend->point;
      const Point r = d.coords[d.bend->to];
      out << "<polyline points=\"" << sx(p.x) << "," << sy(p.y) << " " << sx(m.x) << "," << sy(m.y) << " " << sx(r.x)
          << "," << sy(r.y) << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
      return;
    }
    out << "<line x1=\"" << sx(d.coords[a].x) << "\" y1=\"" << sy(d.coords[a].y) << "\" x2=\"" << sx(d.coords[b].x)
        << "\" y2=\"" << sy(d.coords[b].y) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
  };
  for (std::size_t e = 0; e < q.edge_count_primal(); ++e) {
    edge(q.vertex_of(q.primal_edge(e).a), q.vertex_of(q.primal_edge(e).b), style.primal_color);
  }
  for (std::size_t e = 0; e < q.edge_count_primal(); ++e) {
    edge(q.vertex_of_face(q.dual_edge(e).left), q.vertex_of_face(q.dual_edge(e).right), style.dual_color);
  }
  for (VertexKind kind : {VertexKind::primal, VertexKind::dual}) {
    const std::string& color = kind == VertexKind::primal ? style.primal_color : style.dual_color;
    for (VertexId x = 0; x < q.size(); ++x) {
      if (q.tag(x).kind != kind) continue;
      out << "<circle cx=\"" << sx(d.coords[x].x) << "\" cy=\"" << sy(d.coords[x].y) << "\" r=\""
          << style.vertex_radius << "\" fill=\"" << color << "\"><title>" << escape(q.graph().name(x))
          << "</title></circle>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pdgrid
