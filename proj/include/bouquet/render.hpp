#pragma once

#include <string>

#include "bouquet/curvesys.hpp"

namespace bouquet {

/// Number of sides of a face: maximal runs of one curve along its walk.
int face_sides(const CurveSystem& s, const Face& f);

/// "bigon", "triangle", "quadrilateral", "hexagon" or "<n>-gon".
std::string polygon_name(int sides);

/// The map as an undirected DOT graph. Each edge end carries its position in
/// the counterclockwise rotation at that vertex; faces are listed as comments.
std::string render_dot(const CurveSystem& s);

/// Vertices on a circle, edges as arcs colored per curve, and a face legend
/// with bigons, triangles and hexagons highlighted.
std::string render_svg(const CurveSystem& s);

}  // namespace bouquet
