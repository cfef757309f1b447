#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>
#include <string>
#include <vector>

#include "bouquet/word.hpp"

namespace bouquet {

/// Thrown for curve systems that violate the input invariants.
class InvalidSystem : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Plain Gauss-code description of a curve system, as read from or written
/// to the curve-system file format.
struct GaussCode {
  struct Visit {
    int crossing;
    int slot;
    friend bool operator==(const Visit&, const Visit&) = default;
  };
  struct Curve {
    std::string id;
    std::vector<Visit> visits;
  };
  struct Crossing {
    int id;
    int sign;
  };
  std::vector<Curve> curves;
  std::vector<Crossing> crossings;
  std::vector<std::string> punctured_faces;
};

/// Identifier of a dart at a crossing: `c<crossing>.<slot>.<in|out>`.
struct DartId {
  int crossing = -1;
  int slot = 0;
  bool out = false;

  std::string str() const;
  static std::optional<DartId> parse(std::string_view text);
  friend auto operator<=>(const DartId&, const DartId&) = default;
};

/// A maximal run of a region boundary along one curve.
struct Side {
  int curve;
  int edges;  // number of map edges in the run
};

struct BoundaryWalk {
  std::vector<int> half_edges;  // in order, region on the left
  std::vector<Side> sides;      // cyclic corner word; empty sides list never occurs
  int corners() const { return sides.size() > 1 ? static_cast<int>(sides.size()) : 0; }
};

/// A connected component of the complement of a sub-collection of curves.
struct Region {
  std::vector<int> faces;  // indices into the face list of the whole map
  int euler = 0;           // χ of the compact region, punctures filled in
  int punctures = 0;
  std::vector<BoundaryWalk> boundary;
  std::string key;  // least face key among its faces

  int genus() const { return (2 - euler - static_cast<int>(boundary.size())) / 2; }
  bool is_disk() const { return euler == 1 && boundary.size() == 1; }
  bool is_unpunctured_disk() const { return is_disk() && punctures == 0; }
  bool is_annulus() const { return euler == 0 && boundary.size() == 2; }
};

struct Face {
  std::vector<int> half_edges;
  std::string key;
  int punctures = 0;
};

struct SurfaceInfo {
  int vertices = 0, edges = 0, faces = 0;
  int euler = 0;
  int genus = 0;
  int punctures = 0;
};

/// A system of simple closed curves in general position on a closed oriented
/// surface, stored as a cellularly embedded graph.
///
/// Curves are closed edge paths. Arcs of curves that have been moved or
/// removed stay behind as unlabeled "ghost" edges where they are needed to
/// keep every face a disk, so the ambient surface never changes under moves.
/// Punctures are markers attached to half-edges (the face on the left).
///
/// Half-edge conventions: rotation is counterclockwise at each vertex, the
/// face left of h continues with rot_prev(twin(h)).
class CurveSystem {
public:
  static constexpr int kGhost = -1;

  CurveSystem() = default;

  /// Builds the map of a Gauss code; throws InvalidSystem on the first
  /// violated invariant.
  static CurveSystem from_gauss(const GaussCode& code);

  // ---- queries -------------------------------------------------------

  int curve_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& curve_names() const { return names_; }
  const std::string& name(int curve) const { return names_.at(curve); }
  /// Index of the curve called `name`; throws std::out_of_range.
  int curve(std::string_view name) const;
  bool has_curve(std::string_view name) const;

  /// Number of crossings between two distinct curves.
  int crossings_between(int u, int v) const;
  int crossing_count() const;
  /// Sum of signs ε(u, v) over the crossings of u and v (u's tangent first).
  int algebraic_intersection(int u, int v) const;

  std::vector<Face> faces() const;
  SurfaceInfo surface() const;

  /// Complement components of the curves in `sub`.
  std::vector<Region> complement_regions(const std::set<int>& sub) const;

  /// Plain Gauss code of the active curves (crossings renumbered only when
  /// `renumber` is set).
  GaussCode gauss_code(bool renumber = false) const;

  /// True when the map carries nothing beyond the Gauss code of its curves
  /// (no ghost edges, no pass-through vertices), so the Gauss code alone
  /// reproduces the surface.
  bool is_plain() const;

  /// Curve index per visited crossing, for rendering and reports.
  struct CrossingInfo {
    int vertex;
    int id;
    int curve0, curve1;  // slot 0 and slot 1
    int sign;
  };
  std::vector<CrossingInfo> crossings() const;

  // ---- structural edits used by the moves ---------------------------

  /// Keeps only the listed curves; the others become ghost scaffolding.
  CurveSystem restrict_to(const std::set<int>& keep) const;
  /// Renames curve `curve`.
  void rename(int curve, std::string name);
  /// Adds punctures in the face containing dart `key`.
  void puncture_face(std::string_view key, int count = 1);

  // Low level access for the moves module.
  int half_edge_count() const { return static_cast<int>(origin_.size()); }
  int vertex_count_raw() const { return static_cast<int>(vhe_.size()); }
  bool alive(int h) const { return h >= 0 && alive_[h]; }
  int twin(int h) const { return twin_[h]; }
  int origin(int h) const { return origin_[h]; }
  int head(int h) const { return origin_[twin_[h]]; }
  int rot_next(int h) const { return rnext_[h]; }
  int rot_prev(int h) const { return rprev_[h]; }
  int face_next(int h) const { return rprev_[twin_[h]]; }
  int label(int h) const { return label_[h]; }
  int thru(int h) const { return thru_[h]; }
  bool forward(int h) const { return fwd_[h]; }
  int markers(int h) const { return punct_[h]; }
  int start(int curve) const { return start_[curve]; }
  /// Half-edges of a curve in its forward order.
  std::vector<int> curve_path(int curve) const;
  /// Half-edges leaving vertex v in counterclockwise order, starting at h.
  std::vector<int> rotation_from(int h) const;
  int degree(int v) const;
  bool is_crossing_vertex(int v) const { return crossing_id_[v] >= 0; }
  int crossing_id(int v) const { return crossing_id_[v]; }
  int slot(int h) const { return slot_[h]; }

  /// Face index of every half-edge plus the face list (alive half-edges only).
  std::vector<int> face_index(int* face_count = nullptr) const;
  std::string face_key(const std::vector<int>& walk) const;

  /// Splits the edge of h next to origin(h) and returns the new vertex x.
  /// Afterwards twin(h) runs from x back to origin(h) and rot_next(twin(h))
  /// is the outer piece towards the old head.
  int split_near(int h);

  /// A new path labeled `curve` parallel to a walk, on the walk's right side.
  /// `targets` are the half-edges to cross, in order, each leaving a walk
  /// vertex; for an open path the first and last targets are anchors where
  /// the path starts and ends. Returns the new path's half-edges in order.
  std::vector<int> draw_parallel(const std::vector<int>& targets, bool closed, int curve);

  /// Turns the vertex v (degree 4, alternating labels) into two vertices
  /// joined by a ghost bridge, connecting h with rot_next(h) when
  /// `with_next`, else with rot_prev(h).
  void smooth(int v, int h, bool with_next);

  /// Sets label and pass-through data for a new closed curve or rewires
  /// labels along the thru chain starting at `start_half_edge`.
  void relabel_chain(int curve, int start_half_edge);
  void set_label(int h, int curve);
  void set_thru(int a, int b);
  void clear_thru(int h);
  int add_curve(std::string name);
  void remove_last_curve();
  void set_start(int curve, int h) { start_[curve] = h; }
  void move_markers(int from, int to);
  /// A ghost dangling edge from a new vertex on edge h into its right face;
  /// returns the half-edge of the new split vertex pointing along h.
  int add_right_spoke(int h);

  /// Deletes removable ghost edges and pass-through vertices, then
  /// recomputes crossings, slots and orientation flags.
  void cleanup();
  /// Recomputes crossing ids, slots and orientation flags only.
  void refresh();

  /// Debug invariant check; throws std::logic_error with a description.
  void check_invariants() const;

  // ---- scaffold serialization ---------------------------------------

  struct Scaffold {
    std::vector<std::vector<int>> rotations;  // per vertex, ccw half-edge ids
    std::vector<int> twins;
    std::vector<int> labels;                  // per half-edge
    std::vector<int> starts;                  // per curve
    std::vector<std::pair<int, int>> crossing_ids;  // (vertex, id)
    std::vector<int> slots;                   // per half-edge
    std::vector<int> markers;                 // per half-edge
  };
  /// Compacted full map (alive elements only, dense renumbering).
  Scaffold scaffold() const;
  static CurveSystem from_scaffold(std::vector<std::string> names, const Scaffold& s);

private:
  int new_vertex();
  int new_half_edge_pair();  // returns h, twin is returned by twin_[h]
  void set_rotation(int v, const std::vector<int>& ccw);
  void remove_from_rotation(int h);
  void kill_edge(int h);
  void smooth_degree_two(int v);
  int trace_sub_next(int h, const std::vector<char>& in_sub) const;
  std::optional<DartId> dart_id(int h) const;

  std::vector<std::string> names_;
  std::vector<int> start_;

  // per half-edge
  std::vector<int> origin_, twin_, rnext_, rprev_, label_, thru_, slot_, punct_;
  std::vector<char> fwd_, alive_;
  // per vertex
  std::vector<int> vhe_, crossing_id_;
  std::vector<char> valive_;
  int next_crossing_id_ = 0;
};

/// Structural diagnostics for a Gauss code; empty when valid.
std::optional<std::string> validate(const GaussCode& code);

/// Canonical bouquet of n curves perturbed into general position: chords of
/// a convex 2n-gon with endpoints in order 1..n,1..n, crossings numbered by
/// lexicographic curve pair.
CurveSystem build_bouquet(int n);
GaussCode bouquet_code(int n);

/// Chain of n curves: consecutive curves cross once, others are disjoint.
CurveSystem build_chain(int n);
GaussCode chain_code(int n);

/// Orientation-preserving isomorphism of the maps of two systems that
/// respects the curve bijection given by `curve_map` (index in a → index in
/// b), ignoring crossing numbering and curve orientations.
bool maps_isomorphic(const CurveSystem& a, const CurveSystem& b, const std::vector<int>& curve_map);

}  // namespace bouquet
