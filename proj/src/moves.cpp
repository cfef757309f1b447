#include "bouquet/moves.hpp"

#include <algorithm>

namespace bouquet {

namespace {

// Smoothing type that realizes a positive twist: the target's half-edge is
// joined with its counterclockwise successor.
constexpr bool kPositiveJoinsNext = true;

std::string pair_name(const CurveSystem& s, int u, int v) { return "(" + s.name(u) + ", " + s.name(v) + ")"; }

}  // namespace

BigonSearch find_bigons(const CurveSystem& s, int u, int v) {
  BigonSearch out;
  if (u == v) return out;
  for (auto& region : s.complement_regions({u, v})) {
    if (!region.is_disk()) continue;
    const auto& walk = region.boundary.front();
    if (walk.sides.size() != 2 || walk.sides[0].curve == walk.sides[1].curve) continue;
    std::vector<int> corners;
    const int n = static_cast<int>(walk.half_edges.size());
    for (int i = 0; i < n; ++i)
      if (s.label(walk.half_edges[i]) != s.label(walk.half_edges[(i + n - 1) % n]))
        corners.push_back(s.origin(walk.half_edges[i]));
    if (corners.size() != 2 || corners[0] == corners[1]) continue;
    Bigon b{std::move(region), u, v, std::move(corners)};
    (b.region.punctures ? out.punctured : out.free).push_back(std::move(b));
  }
  auto by_key = [](const Bigon& a, const Bigon& b) { return a.region.key < b.region.key; };
  std::sort(out.free.begin(), out.free.end(), by_key);
  std::sort(out.punctured.begin(), out.punctured.end(), by_key);
  return out;
}

std::optional<Bigon> find_bigon(const CurveSystem& s, int u, int v) {
  auto found = find_bigons(s, u, v);
  if (found.free.empty()) return std::nullopt;
  return std::move(found.free.front());
}

CurveSystem isotope_across(const CurveSystem& s, int u, const Region& region) {
  if (region.punctures > 0) throw MoveRefused("region " + region.key + " is punctured");
  if (!region.is_disk()) throw MoveRefused("region " + region.key + " is not a disk");
  const auto& walk = region.boundary.front();
  const auto u_sides = std::count_if(walk.sides.begin(), walk.sides.end(), [&](const Side& x) { return x.curve == u; });
  if (u_sides != 1)
    throw MoveRefused("region " + region.key + " has " + std::to_string(u_sides) + " sides on curve " + s.name(u));
  if (walk.sides.size() < 2) throw MoveRefused("curve " + s.name(u) + " bounds a disk");

  std::vector<int> w = walk.half_edges;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    if (s.label(w[i]) == u && s.label(w[(i + n - 1) % n]) != u) {
      std::rotate(w.begin(), w.begin() + i, w.end());
      break;
    }
  }
  int r = 0;
  while (r < n && s.label(w[r]) == u) ++r;
  const std::vector<int> g(w.begin(), w.begin() + r);
  const std::vector<int> k(w.begin() + r, w.end());

  CurveSystem t = s;
  const int a_start = t.thru(t.twin(g.back()));
  const int a_end = t.thru(g.front());
  const bool g_forward = t.forward(g.front());

  // Half-edges met by a path running just outside the region along k.
  std::vector<int> targets{a_start};
  for (int h = t.rot_next(a_start); h != k.front(); h = t.rot_next(h)) targets.push_back(h);
  for (std::size_t j = 1; j < k.size(); ++j)
    for (int h = t.rot_next(t.twin(k[j - 1])); h != k[j]; h = t.rot_next(h)) targets.push_back(h);
  for (int h = t.rot_next(t.twin(k.back())); h != a_end; h = t.rot_next(h)) targets.push_back(h);
  targets.push_back(a_end);
  {
    auto sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MoveRefused("region " + region.key + " touches itself along its boundary");
  }

  const int old_start = t.start(u);
  const auto path = t.draw_parallel(targets, false, u);
  for (int h : g) t.set_label(h, CurveSystem::kGhost);
  t.set_label(a_start, CurveSystem::kGhost);
  t.set_label(a_end, CurveSystem::kGhost);
  if (t.label(old_start) != u) t.set_start(u, g_forward ? t.twin(path.back()) : path.front());
  t.cleanup();
  return t;
}

ReduceResult reduce_pair(const CurveSystem& s, int u, int v, std::mt19937_64* rng) {
  ReduceResult res{s, 0, false, {}};
  for (;;) {
    auto found = find_bigons(res.system, u, v);
    if (found.free.empty()) {
      res.blocked = !found.punctured.empty();
      for (const auto& b : found.punctured) res.blocked_keys.push_back(b.region.key);
      return res;
    }
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, found.free.size() - 1)(*rng);
    const Bigon& b = found.free[pick];
    const auto& sides = b.region.boundary.front().sides;
    const int len_u = sides[0].curve == u ? sides[0].edges : sides[1].edges;
    const int len_v = sides[0].curve == v ? sides[0].edges : sides[1].edges;
    // Move the curve with the longer side so third curves lose crossings.
    const int sweep = len_u > len_v ? u : len_v > len_u ? v : std::min(u, v);
    res.system = isotope_across(res.system, sweep, b.region);
    ++res.removed;
  }
}

ReduceResult reduce_all(const CurveSystem& s, std::mt19937_64* rng) {
  ReduceResult res{s, 0, false, {}};
  for (bool again = true; again;) {
    again = false;
    res.blocked = false;
    res.blocked_keys.clear();
    for (int u = 0; u < s.curve_count(); ++u) {
      for (int v = u + 1; v < s.curve_count(); ++v) {
        auto step = reduce_pair(res.system, u, v, rng);
        if (step.removed) again = true;
        res.removed += step.removed;
        res.blocked = res.blocked || step.blocked;
        res.blocked_keys.insert(res.blocked_keys.end(), step.blocked_keys.begin(), step.blocked_keys.end());
        res.system = std::move(step.system);
      }
    }
  }
  return res;
}

IntersectionResult intersection_number(const CurveSystem& s, int u, int v, std::mt19937_64* rng) {
  if (u == v) throw MoveRefused("intersection number of a curve with itself");
  auto r = reduce_pair(s, u, v, rng);
  return {r.system.crossings_between(u, v), r.blocked};
}

namespace {

std::vector<int> right_side_targets(const CurveSystem& t, int c) {
  const auto path = t.curve_path(c);
  const int m = static_cast<int>(path.size());
  std::vector<int> targets;
  for (int i = 0; i < m; ++i) {
    const int in = t.twin(path[(i + m - 1) % m]);
    for (int h = t.rot_next(in); h != path[i]; h = t.rot_next(h)) targets.push_back(h);
  }
  return targets;
}

int draw_right_copy(CurveSystem& t, int c, std::string name) {
  auto targets = right_side_targets(t, c);
  if (targets.empty()) {
    t.add_right_spoke(t.start(c));
    targets = right_side_targets(t, c);
  }
  const int copy = t.add_curve(std::move(name));
  const auto drawn = t.draw_parallel(targets, true, copy);
  t.set_start(copy, drawn.front());
  return copy;
}

CurveSystem twist_once(const CurveSystem& s, int target, int along, bool positive) {
  CurveSystem t = s;
  const int k = t.crossings_between(along, target);
  if (k == 0) return t;

  // k nested push-offs of `along`, each to the right of the previous one.
  const int first_copy = t.curve_count();
  int prev = along;
  for (int j = 0; j < k; ++j) prev = draw_right_copy(t, prev, "~" + std::to_string(j));

  const bool join_next = positive == kPositiveJoinsNext;
  std::vector<int> meets;
  std::set<int> seen;
  for (int h = 0; h < t.half_edge_count(); ++h)
    if (t.alive(h) && t.label(h) == target && t.degree(t.origin(h)) == 4 && t.label(t.rot_next(h)) >= first_copy &&
        seen.insert(t.origin(h)).second)
      meets.push_back(h);
  if (static_cast<int>(meets.size()) != k * k) throw std::logic_error("push-offs do not meet the target k^2 times");
  for (int h : meets) t.smooth(t.origin(h), h, join_next);

  t.relabel_chain(target, t.start(target));
  for (int h = 0; h < t.half_edge_count(); ++h)
    if (t.alive(h) && t.label(h) >= first_copy) throw std::logic_error("twist surgery left a closed component");
  while (t.curve_count() > first_copy) t.remove_last_curve();
  t.cleanup();
  return t;
}

}  // namespace

CurveSystem push_off(const CurveSystem& s, int c, std::string name) {
  if (s.has_curve(name)) throw MoveRefused("curve name '" + name + "' already used");
  CurveSystem t = s;
  draw_right_copy(t, c, std::move(name));
  t.cleanup();
  return t;
}

CurveSystem dehn_twist(const CurveSystem& s, int target, int along, int power) {
  if (target == along) throw MoveRefused("cannot twist a curve along itself");
  if (power < -2 || power > 2) throw MoveRefused("twist power must lie in -2..2");
  CurveSystem t = s;
  for (int i = 0; i < std::abs(power); ++i) t = twist_once(t, target, along, power > 0);
  return t;
}

IsotopyResult isotopic(const CurveSystem& s, int u, int v) {
  if (u == v) return {true, false};
  auto r = reduce_pair(s, u, v);
  if (r.system.crossings_between(u, v) > 0) return {false, r.blocked};
  for (const auto& region : r.system.complement_regions({u, v})) {
    if (region.euler != 0 || region.boundary.size() != 2 || region.punctures) continue;
    const auto& w0 = region.boundary[0].sides;
    const auto& w1 = region.boundary[1].sides;
    if (w0.size() != 1 || w1.size() != 1) continue;
    if ((w0[0].curve == u && w1[0].curve == v) || (w0[0].curve == v && w1[0].curve == u)) return {true, false};
  }
  return {false, r.blocked};
}

CyclicOrderVerdict cyclic_order_unchecked(const CurveSystem& s, int a, int b, int c) {
  CyclicOrderVerdict out{Order::ABC, s.algebraic_intersection(a, b), s.algebraic_intersection(b, c),
                         s.algebraic_intersection(c, a)};
  for (int e : {out.eps_ab, out.eps_bc, out.eps_ca})
    if (e != 1 && e != -1) throw MoveRefused("algebraic intersection " + std::to_string(e) + " is not a unit");
  out.order = out.eps_ab * out.eps_bc * out.eps_ca == kBouquetChirality ? Order::ABC : Order::ACB;
  return out;
}

CyclicOrderVerdict cyclic_order(const CurveSystem& s, int a, int b, int c) {
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
    auto i = intersection_number(s, x, y);
    if (i.count != 1)
      throw MoveRefused("pair " + pair_name(s, x, y) + " has intersection number " + std::to_string(i.count) +
                        ", expected 1");
  }
  return cyclic_order_unchecked(s, a, b, c);
}

}  // namespace bouquet
