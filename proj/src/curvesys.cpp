#include "bouquet/curvesys.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace bouquet {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

// ---------------------------------------------------------------- DartId

std::string DartId::str() const {
  return "c" + std::to_string(crossing) + "." + std::to_string(slot) + (out ? ".out" : ".in");
}

std::optional<DartId> DartId::parse(std::string_view text) {
  if (text.size() < 2 || text[0] != 'c') return std::nullopt;
  text.remove_prefix(1);
  DartId d;
  auto [p1, e1] = std::from_chars(text.data(), text.data() + text.size(), d.crossing);
  if (e1 != std::errc() || p1 == text.data() + text.size() || *p1 != '.') return std::nullopt;
  text.remove_prefix(p1 - text.data() + 1);
  auto [p2, e2] = std::from_chars(text.data(), text.data() + text.size(), d.slot);
  if (e2 != std::errc() || p2 == text.data() + text.size() || *p2 != '.' || (d.slot != 0 && d.slot != 1))
    return std::nullopt;
  text.remove_prefix(p2 - text.data() + 1);
  if (text == "in")
    d.out = false;
  else if (text == "out")
    d.out = true;
  else
    return std::nullopt;
  return d;
}

// ------------------------------------------------------------- validation

std::optional<std::string> validate(const GaussCode& code) {
  if (code.curves.empty()) return "system has no curves";
  std::set<std::string> names;
  for (const auto& c : code.curves) {
    if (c.id.empty()) return std::string("curve with empty id");
    if (!names.insert(c.id).second) return "duplicate curve id '" + c.id + "'";
  }
  std::map<int, int> sign_of;
  for (const auto& x : code.crossings) {
    if (x.sign != 1 && x.sign != -1)
      return "crossing " + std::to_string(x.id) + ": sign must be 1 or -1";
    if (!sign_of.emplace(x.id, x.sign).second) return "duplicate crossing id " + std::to_string(x.id);
  }
  std::map<std::pair<int, int>, std::string> visitor;  // (crossing, slot) -> curve
  for (const auto& c : code.curves) {
    if (c.visits.empty()) return "curve '" + c.id + "' has no crossings; it cannot be placed on the surface";
    std::set<int> seen;
    for (std::size_t i = 0; i < c.visits.size(); ++i) {
      const auto& v = c.visits[i];
      const std::string where = "curve '" + c.id + "' visit " + std::to_string(i);
      if (!sign_of.count(v.crossing)) return where + ": unknown crossing " + std::to_string(v.crossing);
      if (v.slot != 0 && v.slot != 1) return where + ": slot must be 0 or 1";
      if (!seen.insert(v.crossing).second)
        return where + ": crossing " + std::to_string(v.crossing) + " visited twice, self-intersection unsupported";
      auto [it, fresh] = visitor.emplace(std::make_pair(v.crossing, v.slot), c.id);
      if (!fresh)
        return where + ": slot " + std::to_string(v.slot) + " of crossing " + std::to_string(v.crossing) +
               " already visited by curve '" + it->second + "'";
    }
  }
  for (const auto& x : code.crossings)
    for (int s = 0; s < 2; ++s)
      if (!visitor.count({x.id, s}))
        return "unmatched strand: slot " + std::to_string(s) + " of crossing " + std::to_string(x.id) +
               " never visited";

  // Connectivity: curves are linked through shared crossings.
  std::map<int, std::vector<int>> curves_at;
  for (std::size_t c = 0; c < code.curves.size(); ++c)
    for (const auto& v : code.curves[c].visits) curves_at[v.crossing].push_back(static_cast<int>(c));
  UnionFind uf(static_cast<int>(code.curves.size()));
  for (const auto& [x, cs] : curves_at)
    for (int c : cs) uf.unite(cs.front(), c);
  for (std::size_t c = 1; c < code.curves.size(); ++c)
    if (uf.find(static_cast<int>(c)) != uf.find(0))
      return "disconnected: curve '" + code.curves[c].id + "' shares no crossing chain with '" +
             code.curves[0].id + "'";
  return std::nullopt;
}

// ------------------------------------------------------- low level helpers

int CurveSystem::new_vertex() {
  vhe_.push_back(-1);
  crossing_id_.push_back(-1);
  valive_.push_back(1);
  return static_cast<int>(vhe_.size()) - 1;
}

int CurveSystem::new_half_edge_pair() {
  const int h = static_cast<int>(origin_.size());
  for (int k = 0; k < 2; ++k) {
    origin_.push_back(-1);
    twin_.push_back(k == 0 ? h + 1 : h);
    rnext_.push_back(-1);
    rprev_.push_back(-1);
    label_.push_back(kGhost);
    thru_.push_back(-1);
    slot_.push_back(-1);
    punct_.push_back(0);
    fwd_.push_back(0);
    alive_.push_back(1);
  }
  return h;
}

void CurveSystem::set_rotation(int v, const std::vector<int>& ccw) {
  const int n = static_cast<int>(ccw.size());
  for (int i = 0; i < n; ++i) {
    rnext_[ccw[i]] = ccw[(i + 1) % n];
    rprev_[ccw[i]] = ccw[(i + n - 1) % n];
    origin_[ccw[i]] = v;
  }
  vhe_[v] = n ? ccw[0] : -1;
}

void CurveSystem::remove_from_rotation(int h) {
  const int v = origin_[h];
  if (rnext_[h] == h) {
    vhe_[v] = -1;
    valive_[v] = 0;
  } else {
    rnext_[rprev_[h]] = rnext_[h];
    rprev_[rnext_[h]] = rprev_[h];
    if (vhe_[v] == h) vhe_[v] = rnext_[h];
  }
  rnext_[h] = rprev_[h] = h;
}

void CurveSystem::kill_edge(int h) {
  const int t = twin_[h];
  remove_from_rotation(h);
  remove_from_rotation(t);
  alive_[h] = alive_[t] = 0;
}

std::vector<int> CurveSystem::rotation_from(int h) const {
  std::vector<int> out;
  int g = h;
  do {
    out.push_back(g);
    g = rnext_[g];
  } while (g != h);
  return out;
}

int CurveSystem::degree(int v) const {
  if (!valive_[v] || vhe_[v] < 0) return 0;
  return static_cast<int>(rotation_from(vhe_[v]).size());
}

int CurveSystem::curve(std::string_view name) const {
  for (int c = 0; c < curve_count(); ++c)
    if (names_[c] == name) return c;
  throw std::out_of_range("no curve named '" + std::string(name) + "'");
}

bool CurveSystem::has_curve(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::vector<int> CurveSystem::curve_path(int c) const {
  std::vector<int> path;
  const int s = start_.at(c);
  int h = s;
  const int limit = half_edge_count() + 1;
  do {
    path.push_back(h);
    h = thru_[twin_[h]];
    if (h < 0 || static_cast<int>(path.size()) > limit)
      throw std::logic_error("curve '" + names_[c] + "' is not a closed pass-through chain");
  } while (h != s);
  return path;
}

// ------------------------------------------------------------ construction

CurveSystem CurveSystem::from_gauss(const GaussCode& code) {
  if (auto err = validate(code)) throw InvalidSystem(*err);
  CurveSystem s;
  std::map<int, int> vertex_of;
  std::map<int, int> sign_of;
  for (const auto& x : code.crossings) {
    int v = s.new_vertex();
    vertex_of[x.id] = v;
    sign_of[x.id] = x.sign;
    s.crossing_id_[v] = x.id;
    s.next_crossing_id_ = std::max(s.next_crossing_id_, x.id + 1);
  }
  // dart[(crossing, slot)] = {in, out}
  std::map<std::pair<int, int>, std::array<int, 2>> dart;
  for (std::size_t ci = 0; ci < code.curves.size(); ++ci) {
    const auto& c = code.curves[ci];
    s.names_.push_back(c.id);
    const int m = static_cast<int>(c.visits.size());
    int first_out = -1;
    for (int i = 0; i < m; ++i) {
      const auto& a = c.visits[i];
      const auto& b = c.visits[(i + 1) % m];
      int h = s.new_half_edge_pair();
      int t = s.twin_[h];
      s.label_[h] = s.label_[t] = static_cast<int>(ci);
      s.fwd_[h] = 1;
      s.origin_[h] = vertex_of[a.crossing];
      s.origin_[t] = vertex_of[b.crossing];
      dart[{a.crossing, a.slot}][1] = h;
      dart[{b.crossing, b.slot}][0] = t;
      s.slot_[h] = a.slot;
      s.slot_[t] = b.slot;
      if (i == 0) first_out = h;
    }
    s.start_.push_back(first_out);
  }
  for (const auto& x : code.crossings) {
    const auto d0 = dart[{x.id, 0}];
    const auto d1 = dart[{x.id, 1}];
    const int v = vertex_of[x.id];
    if (x.sign > 0)
      s.set_rotation(v, {d0[0], d1[0], d0[1], d1[1]});
    else
      s.set_rotation(v, {d0[0], d1[1], d0[1], d1[0]});
    s.thru_[d0[0]] = d0[1];
    s.thru_[d0[1]] = d0[0];
    s.thru_[d1[0]] = d1[1];
    s.thru_[d1[1]] = d1[0];
  }
  for (const auto& key : code.punctured_faces) s.puncture_face(key);
  s.check_invariants();
  return s;
}

void CurveSystem::puncture_face(std::string_view key, int count) {
  int nf = 0;
  const auto fidx = face_index(&nf);
  std::vector<std::vector<int>> walks(nf);
  for (int h = 0; h < half_edge_count(); ++h)
    if (alive_[h]) walks[fidx[h]].push_back(h);
  for (auto& w : walks) {
    // walks are collected by index; order does not matter for the key
    if (face_key(w) == key) {
      int best = w.front();
      for (int h : w)
        if (auto d = dart_id(h); d && d->str() == key) best = h;
      punct_[best] += count;
      return;
    }
  }
  throw InvalidSystem("punctured face key '" + std::string(key) + "' names no face");
}

// ------------------------------------------------------------------ faces

std::optional<DartId> CurveSystem::dart_id(int h) const {
  const int v = origin_[h];
  if (crossing_id_[v] < 0 || label_[h] < 0 || slot_[h] < 0) return std::nullopt;
  return DartId{crossing_id_[v], slot_[h], fwd_[h] != 0};
}

std::string CurveSystem::face_key(const std::vector<int>& walk) const {
  std::string best;
  int least_h = -1;
  for (int h : walk) {
    if (auto d = dart_id(h)) {
      auto s = d->str();
      if (best.empty() || s < best) best = std::move(s);
    }
    if (least_h < 0 || h < least_h) least_h = h;
  }
  if (!best.empty()) return best;
  return "h" + std::to_string(least_h);
}

std::vector<int> CurveSystem::face_index(int* face_count) const {
  std::vector<int> fidx(half_edge_count(), -1);
  int nf = 0;
  for (int h = 0; h < half_edge_count(); ++h) {
    if (!alive_[h] || fidx[h] >= 0) continue;
    int g = h;
    do {
      fidx[g] = nf;
      g = face_next(g);
    } while (g != h);
    ++nf;
  }
  if (face_count) *face_count = nf;
  return fidx;
}

std::vector<Face> CurveSystem::faces() const {
  std::vector<Face> out;
  std::vector<char> seen(half_edge_count(), 0);
  for (int h = 0; h < half_edge_count(); ++h) {
    if (!alive_[h] || seen[h]) continue;
    Face f;
    int g = h;
    do {
      seen[g] = 1;
      f.half_edges.push_back(g);
      f.punctures += punct_[g];
      g = face_next(g);
    } while (g != h);
    f.key = face_key(f.half_edges);
    out.push_back(std::move(f));
  }
  return out;
}

SurfaceInfo CurveSystem::surface() const {
  SurfaceInfo info;
  for (std::size_t v = 0; v < vhe_.size(); ++v) info.vertices += valive_[v] ? 1 : 0;
  int half = 0;
  for (int h = 0; h < half_edge_count(); ++h) {
    half += alive_[h] ? 1 : 0;
    info.punctures += alive_[h] ? punct_[h] : 0;
  }
  info.edges = half / 2;
  face_index(&info.faces);
  info.euler = info.vertices - info.edges + info.faces;
  info.genus = (2 - info.euler) / 2;
  return info;
}

int CurveSystem::trace_sub_next(int h, const std::vector<char>& in_sub) const {
  int g = rprev_[twin_[h]];
  while (!in_sub[g]) g = rprev_[g];
  return g;
}

std::vector<Region> CurveSystem::complement_regions(const std::set<int>& sub) const {
  int nf = 0;
  const auto fidx = face_index(&nf);
  const auto all_faces = faces();
  std::vector<char> in_sub(half_edge_count(), 0);
  for (int h = 0; h < half_edge_count(); ++h)
    in_sub[h] = alive_[h] && label_[h] >= 0 && sub.count(label_[h]);

  UnionFind uf(nf);
  for (int h = 0; h < half_edge_count(); ++h)
    if (alive_[h] && !in_sub[h]) uf.unite(fidx[h], fidx[twin_[h]]);

  std::map<int, int> region_of_root;
  std::vector<Region> regions;
  // all_faces and face_index enumerate faces in the same order
  for (int f = 0; f < nf; ++f) {
    int r = uf.find(f);
    auto [it, fresh] = region_of_root.emplace(r, static_cast<int>(regions.size()));
    if (fresh) regions.emplace_back();
    Region& reg = regions[it->second];
    reg.faces.push_back(f);
    reg.euler += 1;
    reg.punctures += all_faces[f].punctures;
    if (reg.key.empty() || all_faces[f].key < reg.key) reg.key = all_faces[f].key;
  }
  auto region_of_face = [&](int f) { return region_of_root.at(uf.find(f)); };

  for (int h = 0; h < half_edge_count(); ++h)
    if (alive_[h] && !in_sub[h] && h < twin_[h]) regions[region_of_face(fidx[h])].euler -= 1;
  for (std::size_t v = 0; v < vhe_.size(); ++v) {
    if (!valive_[v]) continue;
    bool touches = false;
    for (int h : rotation_from(vhe_[v])) touches = touches || in_sub[h];
    if (!touches) regions[region_of_face(fidx[vhe_[v]])].euler += 1;
  }

  std::vector<char> seen(half_edge_count(), 0);
  for (int h = 0; h < half_edge_count(); ++h) {
    if (!in_sub[h] || seen[h]) continue;
    BoundaryWalk walk;
    int g = h;
    do {
      seen[g] = 1;
      walk.half_edges.push_back(g);
      g = trace_sub_next(g, in_sub);
    } while (g != h);
    // Start the walk at a corner when there is one.
    const int n = static_cast<int>(walk.half_edges.size());
    for (int i = 0; i < n; ++i) {
      if (label_[walk.half_edges[i]] != label_[walk.half_edges[(i + n - 1) % n]]) {
        std::rotate(walk.half_edges.begin(), walk.half_edges.begin() + i, walk.half_edges.end());
        break;
      }
    }
    for (int e : walk.half_edges) {
      if (!walk.sides.empty() && walk.sides.back().curve == label_[e])
        ++walk.sides.back().edges;
      else
        walk.sides.push_back({label_[e], 1});
    }
    if (walk.sides.size() > 1 && walk.sides.front().curve == walk.sides.back().curve) {
      walk.sides.front().edges += walk.sides.back().edges;
      walk.sides.pop_back();
    }
    regions[region_of_face(fidx[walk.half_edges.front()])].boundary.push_back(std::move(walk));
  }
  return regions;
}

// ------------------------------------------------------------- crossings

std::vector<CurveSystem::CrossingInfo> CurveSystem::crossings() const {
  std::vector<CrossingInfo> out;
  for (std::size_t v = 0; v < vhe_.size(); ++v) {
    if (!valive_[v] || crossing_id_[v] < 0) continue;
    const auto rot = rotation_from(vhe_[v]);
    int in0 = -1, out0 = -1, in1 = -1, out1 = -1;
    CrossingInfo info{static_cast<int>(v), crossing_id_[v], -1, -1, 0};
    for (int h : rot) {
      if (slot_[h] == 0) {
        info.curve0 = label_[h];
        (fwd_[h] ? out0 : in0) = h;
      } else {
        info.curve1 = label_[h];
        (fwd_[h] ? out1 : in1) = h;
      }
    }
    info.sign = rnext_[in0] == in1 ? 1 : -1;
    (void)out0;
    (void)out1;
    out.push_back(info);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

int CurveSystem::crossings_between(int u, int v) const {
  int n = 0;
  for (const auto& x : crossings())
    if ((x.curve0 == u && x.curve1 == v) || (x.curve0 == v && x.curve1 == u)) ++n;
  return n;
}

int CurveSystem::crossing_count() const { return static_cast<int>(crossings().size()); }

int CurveSystem::algebraic_intersection(int u, int v) const {
  int total = 0;
  for (const auto& x : crossings()) {
    if (x.curve0 == u && x.curve1 == v) total += x.sign;
    if (x.curve0 == v && x.curve1 == u) total -= x.sign;
  }
  return total;
}

GaussCode CurveSystem::gauss_code(bool renumber) const {
  GaussCode code;
  std::map<int, int> renum;
  auto id_of = [&](int raw) {
    if (!renumber) return raw;
    auto [it, fresh] = renum.emplace(raw, static_cast<int>(renum.size()));
    return it->second;
  };
  for (int c = 0; c < curve_count(); ++c) {
    GaussCode::Curve gc{names_[c], {}};
    auto path = curve_path(c);
    // Begin at the first crossing on the path.
    for (int h : path) {
      const int v = origin_[h];
      if (crossing_id_[v] >= 0) gc.visits.push_back({id_of(crossing_id_[v]), slot_[h]});
    }
    code.curves.push_back(std::move(gc));
  }
  for (const auto& x : crossings()) code.crossings.push_back({id_of(x.id), x.sign});
  std::sort(code.crossings.begin(), code.crossings.end(), [](auto& a, auto& b) { return a.id < b.id; });
  if (renumber) {
    // Face keys depend on crossing ids; rebuild through a renumbered copy.
    CurveSystem copy = *this;
    for (std::size_t v = 0; v < vhe_.size(); ++v)
      if (valive_[v] && crossing_id_[v] >= 0) copy.crossing_id_[v] = renum.at(crossing_id_[v]);
    for (const auto& f : copy.faces())
      for (int k = 0; k < f.punctures; ++k) code.punctured_faces.push_back(f.key);
  } else {
    for (const auto& f : faces())
      for (int k = 0; k < f.punctures; ++k) code.punctured_faces.push_back(f.key);
  }
  std::sort(code.punctured_faces.begin(), code.punctured_faces.end());
  return code;
}

bool CurveSystem::is_plain() const {
  for (int h = 0; h < half_edge_count(); ++h)
    if (alive_[h] && label_[h] < 0) return false;
  for (std::size_t v = 0; v < vhe_.size(); ++v)
    if (valive_[v] && crossing_id_[v] < 0) return false;
  return true;
}

// ------------------------------------------------------------------- edits

int CurveSystem::split_near(int h) {
  const int g = twin_[h];
  const int x = new_vertex();
  const int p = new_half_edge_pair();
  const int q = p + 1;
  twin_[h] = p;
  twin_[p] = h;
  twin_[g] = q;
  twin_[q] = g;
  label_[p] = label_[q] = label_[h];
  fwd_[p] = fwd_[g];
  fwd_[q] = fwd_[h];
  set_rotation(x, {p, q});
  if (label_[h] >= 0) {
    thru_[p] = q;
    thru_[q] = p;
  }
  punct_[q] += punct_[h];
  punct_[h] = 0;
  return x;
}

int CurveSystem::add_right_spoke(int h) {
  const int x = split_near(h);
  const int p = twin_[h];          // x -> origin(h)
  const int q = rnext_[p];         // x -> old head
  const int d = new_vertex();
  const int s = new_half_edge_pair();
  set_rotation(x, {p, s, q});
  set_rotation(d, {s + 1});
  return q;
}

std::vector<int> CurveSystem::draw_parallel(const std::vector<int>& targets, bool closed, int curve) {
  const int n = static_cast<int>(targets.size());
  if (n == 0 || (!closed && n < 2)) throw std::logic_error("draw_parallel needs targets");
  std::vector<int> pts(n), inner(n), outer(n);
  for (int t = 0; t < n; ++t) {
    pts[t] = split_near(targets[t]);
    inner[t] = twin_[targets[t]];
    outer[t] = rnext_[inner[t]];
  }
  const int m = closed ? n : n - 1;
  std::vector<int> a(m), b(m);
  for (int t = 0; t < m; ++t) {
    a[t] = new_half_edge_pair();
    b[t] = twin_[a[t]];
    label_[a[t]] = label_[b[t]] = curve;
    fwd_[a[t]] = 1;
  }
  for (int t = 0; t < n; ++t) {
    const bool first = !closed && t == 0;
    const bool last = !closed && t == n - 1;
    if (first) {
      set_rotation(pts[t], {outer[t], a[t], inner[t]});
    } else if (last) {
      set_rotation(pts[t], {inner[t], b[t - 1], outer[t]});
    } else {
      const int prev = b[(t + m - 1) % m];
      set_rotation(pts[t], {a[t], inner[t], prev, outer[t]});
      thru_[a[t]] = prev;
      thru_[prev] = a[t];
    }
  }
  if (!closed) {
    thru_[a[0]] = outer[0];
    thru_[outer[0]] = a[0];
    thru_[inner[0]] = -1;
    thru_[b[m - 1]] = outer[n - 1];
    thru_[outer[n - 1]] = b[m - 1];
    thru_[inner[n - 1]] = -1;
  }
  // Nothing may stay inside the thin strip between the walk and the path.
  for (int t = 0; t < m; ++t) {
    for (int g = face_next(a[t]); g != a[t]; g = face_next(g)) move_markers(g, b[t]);
  }
  return a;
}

void CurveSystem::smooth(int v, int h, bool with_next) {
  const auto rot = rotation_from(h);
  if (rot.size() != 4) throw std::logic_error("smoothing needs a degree-4 vertex");
  std::array<int, 4> r{rot[0], rot[1], rot[2], rot[3]};
  if (!with_next) r = {rot[3], rot[0], rot[1], rot[2]};
  const int v2 = new_vertex();
  const int br = new_half_edge_pair();
  set_rotation(v, {r[0], r[1], br});
  set_rotation(v2, {r[2], r[3], br + 1});
  crossing_id_[v] = -1;
  for (int k : r) slot_[k] = -1;
  set_thru(r[0], r[1]);
  set_thru(r[2], r[3]);
}

void CurveSystem::set_label(int h, int curve) {
  label_[h] = label_[twin_[h]] = curve;
  if (curve < 0) {
    thru_[h] = thru_[twin_[h]] = -1;
    slot_[h] = slot_[twin_[h]] = -1;
  }
}

void CurveSystem::set_thru(int a, int b) {
  thru_[a] = b;
  thru_[b] = a;
}

void CurveSystem::clear_thru(int h) { thru_[h] = -1; }

void CurveSystem::relabel_chain(int curve, int start_half_edge) {
  int h = start_half_edge;
  const int limit = half_edge_count() + 1;
  int steps = 0;
  do {
    label_[h] = label_[twin_[h]] = curve;
    h = thru_[twin_[h]];
    if (h < 0 || ++steps > limit) throw std::logic_error("relabel_chain: open chain");
  } while (h != start_half_edge);
  start_[curve] = start_half_edge;
}

int CurveSystem::add_curve(std::string name) {
  names_.push_back(std::move(name));
  start_.push_back(-1);
  return curve_count() - 1;
}

void CurveSystem::remove_last_curve() {
  const int c = curve_count() - 1;
  for (int h = 0; h < half_edge_count(); ++h)
    if (alive_[h] && label_[h] == c) throw std::logic_error("removing a curve that still labels edges");
  names_.pop_back();
  start_.pop_back();
}

void CurveSystem::move_markers(int from, int to) {
  if (from == to) return;
  punct_[to] += punct_[from];
  punct_[from] = 0;
}

void CurveSystem::rename(int curve, std::string name) {
  for (int c = 0; c < curve_count(); ++c)
    if (c != curve && names_[c] == name) throw std::invalid_argument("curve name '" + name + "' already used");
  names_.at(curve) = std::move(name);
}

CurveSystem CurveSystem::restrict_to(const std::set<int>& keep) const {
  CurveSystem s = *this;
  std::vector<int> remap(curve_count(), kGhost);
  std::vector<std::string> names;
  std::vector<int> starts;
  for (int c = 0; c < curve_count(); ++c) {
    if (!keep.count(c)) continue;
    remap[c] = static_cast<int>(names.size());
    names.push_back(names_[c]);
    starts.push_back(start_[c]);
  }
  for (int h = 0; h < half_edge_count(); ++h) {
    if (!alive_[h] || label_[h] < 0) continue;
    const int nl = remap[label_[h]];
    s.label_[h] = nl;
    if (nl < 0) {
      s.thru_[h] = -1;
      s.slot_[h] = -1;
    }
  }
  s.names_ = std::move(names);
  s.start_ = std::move(starts);
  s.cleanup();
  return s;
}

void CurveSystem::smooth_degree_two(int v) {
  const int h1 = vhe_[v];
  const int h2 = rnext_[h1];
  const int a = twin_[h1];
  const int b = twin_[h2];
  twin_[a] = b;
  twin_[b] = a;
  punct_[b] += punct_[h1];
  punct_[a] += punct_[h2];
  for (auto& s : start_) {
    if (s == h2) s = a;
    if (s == h1) s = b;
  }
  alive_[h1] = alive_[h2] = 0;
  valive_[v] = 0;
  vhe_[v] = -1;
}

void CurveSystem::cleanup() {
  for (bool changed = true; changed;) {
    changed = false;

    // Dangling ghost edges.
    for (bool again = true; again;) {
      again = false;
      for (std::size_t v = 0; v < vhe_.size(); ++v) {
        if (!valive_[v] || vhe_[v] < 0) continue;
        const int h = vhe_[v];
        if (rnext_[h] == h && label_[h] < 0) {
          const int t = twin_[h];
          if (origin_[t] == static_cast<int>(v)) continue;
          const int keep = face_next(t) != h ? face_next(t) : -1;
          if (keep >= 0) {
            move_markers(h, keep);
            move_markers(t, keep);
          }
          kill_edge(h);
          again = changed = true;
        }
      }
    }

    // Ghost edges separating two distinct faces.
    int nf = 0;
    const auto fidx = face_index(&nf);
    UnionFind uf(nf);
    for (int h = 0; h < half_edge_count(); ++h) {
      if (!alive_[h] || label_[h] >= 0 || h > twin_[h]) continue;
      const int t = twin_[h];
      if (!uf.unite(fidx[h], fidx[t])) continue;
      auto survivor = [&](int e) {
        for (int g = face_next(e); g != e; g = face_next(g))
          if (g != h && g != t) return g;
        return -1;
      };
      int keep = survivor(h);
      if (keep < 0) keep = survivor(t);
      if (keep >= 0) {
        move_markers(h, keep);
        move_markers(t, keep);
      }
      kill_edge(h);
      changed = true;
    }

    // Pass-through vertices of degree two.
    for (std::size_t v = 0; v < vhe_.size(); ++v) {
      if (!valive_[v] || vhe_[v] < 0) continue;
      const int h1 = vhe_[v];
      const int h2 = rnext_[h1];
      if (h2 == h1 || rnext_[h2] != h1) continue;
      if (twin_[h1] == h2) continue;  // a lone loop
      if (label_[h1] != label_[h2]) continue;
      smooth_degree_two(static_cast<int>(v));
      changed = true;
    }
  }
  refresh();
}

void CurveSystem::refresh() {
  std::vector<char> on_curve(half_edge_count(), 0);
  for (int c = 0; c < curve_count(); ++c) {
    for (int h : curve_path(c)) {
      fwd_[h] = 1;
      fwd_[twin_[h]] = 0;
      on_curve[h] = on_curve[twin_[h]] = 1;
      if (label_[h] != c) throw std::logic_error("curve '" + names_[c] + "' runs over a foreign edge");
    }
  }
  for (int h = 0; h < half_edge_count(); ++h)
    if (alive_[h] && label_[h] >= 0 && !on_curve[h])
      throw std::logic_error("edge labeled '" + names_[label_[h]] + "' is not on its curve");

  for (std::size_t v = 0; v < vhe_.size(); ++v) {
    if (!valive_[v]) continue;
    const auto rot = rotation_from(vhe_[v]);
    bool crossing = rot.size() == 4 && label_[rot[0]] >= 0 && label_[rot[1]] >= 0 &&
                    label_[rot[0]] == label_[rot[2]] && label_[rot[1]] == label_[rot[3]] &&
                    label_[rot[0]] != label_[rot[1]];
    if (!crossing) {
      crossing_id_[v] = -1;
      for (int h : rot) slot_[h] = -1;
      continue;
    }
    const bool slots_ok = slot_[rot[0]] >= 0 && slot_[rot[0]] == slot_[rot[2]] && slot_[rot[1]] >= 0 &&
                          slot_[rot[1]] == slot_[rot[3]] && slot_[rot[0]] != slot_[rot[1]];
    if (crossing_id_[v] < 0 || !slots_ok) {
      if (crossing_id_[v] < 0) crossing_id_[v] = next_crossing_id_++;
      const int s0 = label_[rot[0]] < label_[rot[1]] ? 0 : 1;
      slot_[rot[0]] = slot_[rot[2]] = s0;
      slot_[rot[1]] = slot_[rot[3]] = 1 - s0;
    }
  }
}

void CurveSystem::check_invariants() const {
  auto fail = [](const std::string& m) { throw std::logic_error("map invariant: " + m); };
  for (int h = 0; h < half_edge_count(); ++h) {
    if (!alive_[h]) continue;
    if (!alive_[twin_[h]] || twin_[twin_[h]] != h) fail("twin mismatch at " + std::to_string(h));
    if (rprev_[rnext_[h]] != h) fail("rotation links broken at " + std::to_string(h));
    if (origin_[rnext_[h]] != origin_[h]) fail("rotation crosses vertices at " + std::to_string(h));
    if (!valive_[origin_[h]]) fail("half-edge on dead vertex");
    if (label_[h] != label_[twin_[h]]) fail("twin labels differ");
    if (label_[h] >= 0) {
      const int t = thru_[h];
      if (t < 0 || thru_[t] != h || origin_[t] != origin_[h] || label_[t] != label_[h] || t == h)
        fail("pass-through broken at " + std::to_string(h));
    }
  }
  for (std::size_t v = 0; v < vhe_.size(); ++v) {
    if (!valive_[v]) continue;
    const auto rot = rotation_from(vhe_[v]);
    std::map<int, int> count;
    for (int h : rot)
      if (label_[h] >= 0) ++count[label_[h]];
    for (auto [c, k] : count)
      if (k != 2) fail("curve '" + names_[c] + "' meets a vertex " + std::to_string(k) + " times");
    if (count.size() == 2) {
      // transversality: the two curves alternate
      if (rot.size() != 4 || label_[rot[0]] == label_[rot[1]]) fail("non-transverse contact of two curves");
    }
    if (count.size() > 2) fail("more than two curves through one vertex");
  }
  for (int c = 0; c < curve_count(); ++c) (void)curve_path(c);
  // connectivity
  std::vector<char> seen(vhe_.size(), 0);
  int start = -1, alive_vertices = 0;
  for (std::size_t v = 0; v < vhe_.size(); ++v)
    if (valive_[v]) {
      ++alive_vertices;
      if (start < 0) start = static_cast<int>(v);
    }
  if (start < 0) return;
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int h : rotation_from(vhe_[v])) {
      int w = head(h);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (reached != alive_vertices) fail("map is disconnected");
}

// --------------------------------------------------------------- scaffold

CurveSystem::Scaffold CurveSystem::scaffold() const {
  Scaffold s;
  std::vector<int> vid(vhe_.size(), -1), hid(half_edge_count(), -1);
  int nv = 0, nh = 0;
  for (std::size_t v = 0; v < vhe_.size(); ++v) {
    if (!valive_[v]) continue;
    vid[v] = nv++;
    for (int h : rotation_from(vhe_[v])) hid[h] = nh++;
  }
  s.rotations.resize(nv);
  s.twins.resize(nh);
  s.labels.resize(nh);
  s.slots.resize(nh);
  s.markers.resize(nh);
  for (std::size_t v = 0; v < vhe_.size(); ++v) {
    if (!valive_[v]) continue;
    for (int h : rotation_from(vhe_[v])) {
      s.rotations[vid[v]].push_back(hid[h]);
      s.twins[hid[h]] = hid[twin_[h]];
      s.labels[hid[h]] = label_[h];
      s.slots[hid[h]] = slot_[h];
      s.markers[hid[h]] = punct_[h];
    }
    if (crossing_id_[v] >= 0) s.crossing_ids.emplace_back(vid[v], crossing_id_[v]);
  }
  for (int c = 0; c < curve_count(); ++c) s.starts.push_back(hid[start_[c]]);
  return s;
}

CurveSystem CurveSystem::from_scaffold(std::vector<std::string> names, const Scaffold& sc) {
  CurveSystem s;
  const int nh = static_cast<int>(sc.twins.size());
  auto bad = [](const std::string& m) { throw InvalidSystem("scaffold: " + m); };
  if (sc.labels.size() != sc.twins.size() || sc.slots.size() != sc.twins.size() ||
      sc.markers.size() != sc.twins.size())
    bad("per-half-edge arrays differ in length");
  if (sc.starts.size() != names.size()) bad("one start half-edge per curve required");
  s.names_ = std::move(names);
  s.origin_.assign(nh, -1);
  s.twin_ = sc.twins;
  s.rnext_.assign(nh, -1);
  s.rprev_.assign(nh, -1);
  s.label_ = sc.labels;
  s.thru_.assign(nh, -1);
  s.slot_ = sc.slots;
  s.punct_ = sc.markers;
  s.fwd_.assign(nh, 0);
  s.alive_.assign(nh, 1);
  for (int h = 0; h < nh; ++h) {
    if (s.twin_[h] < 0 || s.twin_[h] >= nh || s.twin_[h] == h) bad("twin out of range");
    if (s.label_[h] < kGhost || s.label_[h] >= static_cast<int>(s.names_.size())) bad("label out of range");
    if (s.punct_[h] < 0) bad("negative marker count");
  }
  for (const auto& rot : sc.rotations) {
    const int v = s.new_vertex();
    if (rot.empty()) bad("empty rotation");
    for (int h : rot)
      if (h < 0 || h >= nh || s.origin_[h] >= 0) bad("half-edge listed twice or out of range");
    s.set_rotation(v, rot);
  }
  for (int h = 0; h < nh; ++h)
    if (s.origin_[h] < 0) bad("half-edge " + std::to_string(h) + " has no vertex");
  for (auto [v, id] : sc.crossing_ids) {
    if (v < 0 || v >= static_cast<int>(s.vhe_.size())) bad("crossing vertex out of range");
    s.crossing_id_[v] = id;
    s.next_crossing_id_ = std::max(s.next_crossing_id_, id + 1);
  }
  for (std::size_t v = 0; v < s.vhe_.size(); ++v) {
    std::map<int, std::vector<int>> by_label;
    for (int h : s.rotation_from(s.vhe_[v]))
      if (s.label_[h] >= 0) by_label[s.label_[h]].push_back(h);
    for (auto& [c, hs] : by_label) {
      if (hs.size() != 2) bad("curve must pass through each vertex exactly once");
      s.set_thru(hs[0], hs[1]);
    }
  }
  for (int st : sc.starts) {
    if (st < 0 || st >= nh) bad("start out of range");
  }
  s.start_ = sc.starts;
  for (int c = 0; c < s.curve_count(); ++c)
    if (s.label_[s.start_[c]] != c) bad("start half-edge of '" + s.names_[c] + "' not on the curve");
  try {
    s.refresh();
    s.check_invariants();
  } catch (const std::logic_error& e) {
    bad(e.what());
  }
  return s;
}

// ----------------------------------------------------------- builders

GaussCode bouquet_code(int n) {
  if (n < 2) throw std::invalid_argument("bouquet needs n >= 2");
  // Chord i runs from angle πi/n to πi/n + π, shifted off the centre by a
  // distinct offset so no three chords are concurrent.
  const double pi = std::acos(-1.0);
  struct Line {
    double ox, oy, dx, dy;
  };
  std::vector<Line> lines;
  for (int i = 0; i < n; ++i) {
    double a = pi * i / n;
    double d = 0.01 * (1.0 + i + 0.37 * i * i);
    lines.push_back({-std::sin(a) * d, std::cos(a) * d, -std::cos(a), -std::sin(a)});
  }
  auto param = [&](int i, int j) {
    // parameter along line i of its intersection with line j
    const auto& L = lines[i];
    const auto& M = lines[j];
    double det = L.dx * (-M.dy) - L.dy * (-M.dx);
    double rx = M.ox - L.ox, ry = M.oy - L.oy;
    return (rx * (-M.dy) - ry * (-M.dx)) / det;
  };
  std::map<std::pair<int, int>, int> id;
  GaussCode code;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      id[{i, j}] = static_cast<int>(code.crossings.size());
      double cross = lines[i].dx * lines[j].dy - lines[i].dy * lines[j].dx;
      code.crossings.push_back({id[{i, j}], cross > 0 ? 1 : -1});
    }
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<double, int>> along;
    for (int j = 0; j < n; ++j)
      if (j != i) along.emplace_back(param(i, j), j);
    std::sort(along.begin(), along.end());
    for (std::size_t k = 1; k < along.size(); ++k)
      if (along[k].first - along[k - 1].first < 1e-9) throw std::logic_error("degenerate bouquet perturbation");
    GaussCode::Curve c{std::to_string(i + 1), {}};
    for (auto [t, j] : along) c.visits.push_back({id[{std::min(i, j), std::max(i, j)}], i < j ? 0 : 1});
    code.curves.push_back(std::move(c));
  }
  return code;
}

CurveSystem build_bouquet(int n) { return CurveSystem::from_gauss(bouquet_code(n)); }

GaussCode chain_code(int n) {
  if (n < 2) throw std::invalid_argument("chain needs n >= 2");
  GaussCode code;
  for (int i = 0; i + 1 < n; ++i) code.crossings.push_back({i, 1});
  for (int i = 0; i < n; ++i) {
    GaussCode::Curve c{std::to_string(i + 1), {}};
    if (i > 0) c.visits.push_back({i - 1, 1});
    if (i + 1 < n) c.visits.push_back({i, 0});
    code.curves.push_back(std::move(c));
  }
  return code;
}

CurveSystem build_chain(int n) { return CurveSystem::from_gauss(chain_code(n)); }

// ------------------------------------------------------------ isomorphism

bool maps_isomorphic(const CurveSystem& a, const CurveSystem& b, const std::vector<int>& curve_map) {
  std::vector<int> ha, hb;
  for (int h = 0; h < a.half_edge_count(); ++h)
    if (a.alive(h)) ha.push_back(h);
  for (int h = 0; h < b.half_edge_count(); ++h)
    if (b.alive(h)) hb.push_back(h);
  if (ha.size() != hb.size() || ha.empty()) return ha.size() == hb.size();
  auto mapped_label = [&](int l) { return l < 0 ? l : curve_map.at(l); };
  const int a0 = ha.front();
  for (int b0 : hb) {
    if (mapped_label(a.label(a0)) != b.label(b0)) continue;
    std::map<int, int> fwd, back;
    std::vector<std::pair<int, int>> stack{{a0, b0}};
    fwd[a0] = b0;
    back[b0] = a0;
    bool ok = true;
    while (ok && !stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      if (mapped_label(a.label(x)) != b.label(y) || a.markers(x) != b.markers(y)) {
        ok = false;
        break;
      }
      for (auto [nx, ny] : {std::pair{a.twin(x), b.twin(y)}, std::pair{a.rot_next(x), b.rot_next(y)}}) {
        auto fi = fwd.find(nx);
        auto bi = back.find(ny);
        if (fi == fwd.end() && bi == back.end()) {
          fwd[nx] = ny;
          back[ny] = nx;
          stack.emplace_back(nx, ny);
        } else if (fi == fwd.end() || bi == back.end() || fi->second != ny) {
          ok = false;
          break;
        }
      }
    }
    if (ok && fwd.size() == ha.size()) return true;
  }
  return false;
}

}  // namespace bouquet
