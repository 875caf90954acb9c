#include "stabber/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace stabber {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const std::vector<Solution>& solutions) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& s : inst.segments()) {
    for (const Point* p : {&s.a, &s.b}) {
      const double x = p->x.to_double(), y = p->y.to_double();
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  const double mx = std::max(xmax - xmin, 1.0) * 0.1;
  const double my = std::max(ymax - ymin, 1.0) * 0.1;
  xmin -= mx;
  xmax += mx;
  ymin -= my;
  ymax += my;
  const double w = xmax - xmin, h = ymax - ymin;
  const double scale = 600.0 / std::max(w, h);
  const double stroke = 1.5 / scale;
  // SVG y grows downward; flip once with a group transform.
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w * scale) << "\" height=\""
      << num(h * scale) << "\" viewBox=\"" << num(xmin) << ' ' << num(-ymax) << ' ' << num(w) << ' ' << num(h)
      << "\">\n<g transform=\"scale(1,-1)\">\n";

  for (const auto& sol : solutions) {
    const Region r = realize_region(sol, inst);
    const double x0 = r.xmin ? std::max(xmin, r.xmin->to_double()) : xmin;
    const double x1 = r.xmax ? std::min(xmax, r.xmax->to_double()) : xmax;
    const double y0 = r.ymin ? std::max(ymin, r.ymin->to_double()) : ymin;
    const double y1 = r.ymax ? std::min(ymax, r.ymax->to_double()) : ymax;
    if (x1 < x0 || y1 < y0) continue;
    out << "<rect class=\"region\" x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(x1 - x0)
        << "\" height=\"" << num(y1 - y0) << "\" fill=\"#e05050\" fill-opacity=\"0.15\" stroke=\"#e05050\" stroke-width=\""
        << num(stroke) << "\"/>\n";
  }

  for (const auto& s : inst.segments()) {
    out << "<line x1=\"" << num(s.a.x.to_double()) << "\" y1=\"" << num(s.a.y.to_double()) << "\" x2=\""
        << num(s.b.x.to_double()) << "\" y2=\"" << num(s.b.y.to_double()) << "\" stroke=\"#202020\" stroke-width=\""
        << num(stroke) << "\"/>\n";
  }

  if (!solutions.empty()) {
    const auto& reds = solutions.front().cls.reds;
    for (std::uint32_t i = 0; i < inst.size(); ++i) {
      for (End e : {End::A, End::B}) {
        const EndpointId id{i, e};
        const bool red = std::binary_search(reds.begin(), reds.end(), id);
        const Point& p = inst.point(id);
        out << "<circle cx=\"" << num(p.x.to_double()) << "\" cy=\"" << num(p.y.to_double()) << "\" r=\""
            << num(4 * stroke) << "\" stroke-width=\"" << num(stroke)
            << (red ? "\" fill=\"#d02020\" stroke=\"#d02020\"/>\n" : "\" fill=\"white\" stroke=\"#2040d0\"/>\n");
      }
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace stabber
