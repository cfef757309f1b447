#include "bouquet/render.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace bouquet {

int face_sides(const CurveSystem& s, const Face& f) {
  const int n = static_cast<int>(f.half_edges.size());
  int runs = 0;
  for (int i = 0; i < n; ++i)
    if (s.label(f.half_edges[i]) != s.label(f.half_edges[(i + n - 1) % n])) ++runs;
  return runs == 0 ? 1 : runs;
}

std::string polygon_name(int sides) {
  switch (sides) {
    case 2: return "bigon";
    case 3: return "triangle";
    case 4: return "quadrilateral";
    case 6: return "hexagon";
    default: return std::to_string(sides) + "-gon";
  }
}

namespace {

std::string vertex_name(const CurveSystem& s, int v) {
  return s.is_crossing_vertex(v) ? "c" + std::to_string(s.crossing_id(v)) : "v" + std::to_string(v);
}

std::string edge_label(const CurveSystem& s, int h) { return s.label(h) < 0 ? "~" : s.name(s.label(h)); }

std::map<int, int> rotation_positions(const CurveSystem& s) {
  std::map<int, int> pos;
  std::vector<char> done(s.vertex_count_raw(), 0);
  for (int h = 0; h < s.half_edge_count(); ++h) {
    if (!s.alive(h) || done[s.origin(h)]) continue;
    done[s.origin(h)] = 1;
    // Start each rotation at its least half-edge for stable output.
    int least = h;
    for (int g : s.rotation_from(h)) least = std::min(least, g);
    int i = 0;
    for (int g : s.rotation_from(least)) pos[g] = i++;
  }
  return pos;
}

}  // namespace

std::string render_dot(const CurveSystem& s) {
  std::ostringstream os;
  const auto pos = rotation_positions(s);
  os << "graph curves {\n";
  std::vector<char> seen(s.vertex_count_raw(), 0);
  for (int h = 0; h < s.half_edge_count(); ++h) {
    if (!s.alive(h) || seen[s.origin(h)]) continue;
    seen[s.origin(h)] = 1;
    os << "  " << vertex_name(s, s.origin(h)) << ";\n";
  }
  for (int h = 0; h < s.half_edge_count(); ++h) {
    if (!s.alive(h) || h > s.twin(h)) continue;
    const int t = s.twin(h);
    os << "  " << vertex_name(s, s.origin(h)) << " -- " << vertex_name(s, s.origin(t)) << " [label=\""
       << edge_label(s, h) << "\", taillabel=\"" << pos.at(h) << "\", headlabel=\"" << pos.at(t) << "\""
       << (s.label(h) < 0 ? ", style=dashed" : "") << "];\n";
  }
  for (const auto& f : s.faces()) {
    const int k = face_sides(s, f);
    os << "  // face " << f.key << " sides=" << k << " " << polygon_name(k);
    if (f.punctures) os << " punctures=" << f.punctures;
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_svg(const CurveSystem& s) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
  std::vector<int> verts;
  std::vector<int> slot(s.vertex_count_raw(), -1);
  for (int h = 0; h < s.half_edge_count(); ++h)
    if (s.alive(h) && slot[s.origin(h)] < 0) {
      slot[s.origin(h)] = static_cast<int>(verts.size());
      verts.push_back(s.origin(h));
    }
  const auto faces = s.faces();
  const double cx = 220, cy = 220, radius = 160;
  const int n = static_cast<int>(verts.size());
  auto at = [&](int v) {
    const double a = 2 * std::acos(-1.0) * slot[v] / std::max(n, 1);
    return std::pair{cx + radius * std::cos(a), cy + radius * std::sin(a)};
  };
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  const int height = std::max(440, 60 + 18 * static_cast<int>(faces.size()));
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"" << height << "\">\n";
  int bend = 0;
  for (int h = 0; h < s.half_edge_count(); ++h) {
    if (!s.alive(h) || h > s.twin(h)) continue;
    auto [x1, y1] = at(s.origin(h));
    auto [x2, y2] = at(s.head(h));
    const double off = 30.0 + 12.0 * (bend++ % 6);
    double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
    double dx = x2 - x1, dy = y2 - y1, len = std::hypot(dx, dy);
    double qx, qy;
    if (len < 1e-9) {
      qx = x1 + off * 2 * std::cos(bend);
      qy = y1 + off * 2 * std::sin(bend);
    } else {
      qx = mx - dy / len * off;
      qy = my + dx / len * off;
    }
    const int l = s.label(h);
    os << "  <path d=\"M " << x1 << " " << y1 << " Q " << qx << " " << qy << " " << x2 << " " << y2
       << "\" fill=\"none\" stroke=\"" << (l < 0 ? "#aaaaaa" : palette[l % 8]) << "\" stroke-width=\"2\""
       << (l < 0 ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  }
  for (int v : verts) {
    auto [x, y] = at(v);
    os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"black\"/>\n";
    os << "  <text x=\"" << x + 7 << "\" y=\"" << y - 7 << "\" font-size=\"11\">" << vertex_name(s, v) << "</text>\n";
  }
  for (int c = 0; c < s.curve_count(); ++c)
    os << "  <text x=\"460\" y=\"" << 30 + 16 * c << "\" font-size=\"12\" fill=\"" << palette[c % 8] << "\">curve "
       << s.name(c) << "</text>\n";
  int row = 0;
  const int legend_top = 40 + 16 * s.curve_count();
  for (const auto& f : faces) {
    const int k = face_sides(s, f);
    const bool marked = k == 2 || k == 3 || k == 6;
    os << "  <text x=\"460\" y=\"" << legend_top + 18 * row++ << "\" font-size=\"12\""
       << (marked ? " font-weight=\"bold\" fill=\"#d62728\"" : "") << ">face " << f.key << ": " << polygon_name(k)
       << (f.punctures ? " (punctured)" : "") << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bouquet
