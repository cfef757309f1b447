#include "bouquet/bouquet.hpp"

#include <algorithm>
#include <set>

#include "bouquet/cyclepres.hpp"

namespace bouquet {

namespace {

struct Sub {
  CurveSystem sys;
  std::vector<int> index;  // original curve -> curve in sys, or -1
};

Sub restrict_curves(const CurveSystem& s, const std::vector<int>& curves) {
  std::set<int> keep(curves.begin(), curves.end());
  Sub out{s.restrict_to(keep), std::vector<int>(s.curve_count(), -1)};
  int i = 0;
  for (int c : keep) out.index[c] = i++;
  return out;
}

std::string pair_text(const CurveSystem& s, int a, int b) { return "(" + s.name(a) + ", " + s.name(b) + ")"; }

IntersectionResult pair_intersection(const CurveSystem& s, int a, int b) {
  auto sub = restrict_curves(s, {a, b});
  return intersection_number(sub.sys, sub.index[a], sub.index[b]);
}

bool is_rotation_of(const std::array<int, 3>& got, const std::array<int, 3>& want) {
  for (int r = 0; r < 3; ++r)
    if (got[r] == want[0] && got[(r + 1) % 3] == want[1] && got[(r + 2) % 3] == want[2]) return true;
  return false;
}

void rotate_to_front(std::vector<int>& order, int first) {
  auto it = std::find(order.begin(), order.end(), first);
  if (it != order.end()) std::rotate(order.begin(), it, order.end());
}

void require_distinct(const std::vector<int>& curves) {
  std::set<int> seen(curves.begin(), curves.end());
  if (seen.size() != curves.size()) throw std::invalid_argument("curves must be distinct");
}

}  // namespace

std::string failure_text(Failure f) {
  switch (f) {
    case Failure::None: return "none";
    case Failure::IsotopicPair: return "isotopic pair";
    case Failure::PairIntersection: return "pair intersection != 1";
    case Failure::TripleCycle: return "triple cycle-condition failure";
    case Failure::NoPlacement: return "no placement";
  }
  return "unknown";
}

TripleResult triple_bouquet(const CurveSystem& s, int a, int b, int c) {
  require_distinct({a, b, c});
  auto sub = restrict_curves(s, {a, b, c});
  const CurveSystem t = reduce_all(sub.sys).system;
  const std::array<int, 3> orig{a, b, c};
  auto local = [&](int x) { return sub.index[x]; };

  TripleResult res;
  const std::array<std::pair<int, int>, 3> pairs{{{a, b}, {b, c}, {c, a}}};
  for (auto [x, y] : pairs) {
    if (isotopic(t, local(x), local(y)).isotopic) {
      res.failure = Failure::IsotopicPair;
      res.detail = "isotopic pair " + pair_text(s, x, y);
      return res;
    }
  }
  for (auto [x, y] : pairs) {
    auto i = intersection_number(t, local(x), local(y));
    if (i.count != 1) {
      res.failure = Failure::PairIntersection;
      res.blocked = i.blocked;
      res.detail = "pair " + pair_text(s, x, y) + " has intersection number " + std::to_string(i.count);
      return res;
    }
  }
  const auto verdict = cyclic_order_unchecked(t, local(a), local(b), local(c));
  res.order = verdict.order == Order::ABC ? orig : std::array<int, 3>{a, c, b};
  res.order_known = true;
  const auto [x, y, z] = res.order;
  const CurveSystem twisted = dehn_twist(t, local(z), local(y), -1);
  const auto i = intersection_number(twisted, local(x), local(z));
  res.twisted_intersection = i.count;
  res.blocked = i.blocked;
  res.yes = i.count == 0;
  if (!res.yes) {
    res.failure = Failure::TripleCycle;
    res.detail = "i(" + s.name(x) + ", T_" + s.name(y) + "^-1(" + s.name(z) + ")) = " + std::to_string(i.count) +
                 (i.blocked ? " (bigon blocked by a puncture)" : "");
  }
  return res;
}

std::optional<std::string> triangle_check(const CurveSystem& s, int a, int b, int c) {
  require_distinct({a, b, c});
  auto sub = restrict_curves(s, {a, b, c});
  const CurveSystem t = reduce_all(sub.sys).system;
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
    const int n = t.crossings_between(sub.index[x], sub.index[y]);
    if (n != 1)
      throw MoveRefused("pair " + pair_text(s, x, y) + " has intersection number " + std::to_string(n) + ", expected 1");
  }
  std::optional<std::string> best;
  for (const auto& r : t.complement_regions({0, 1, 2})) {
    if (!r.is_unpunctured_disk()) continue;
    const auto& sides = r.boundary.front().sides;
    if (sides.size() != 3) continue;
    std::set<int> curves{sides[0].curve, sides[1].curve, sides[2].curve};
    if (curves.size() != 3) continue;
    if (!best || r.key < *best) best = r.key;
  }
  return best;
}

namespace {

Witness witness_of(const CurveSystem& s, const TripleResult& tri, const std::array<int, 3>& fallback) {
  Witness w{tri.order_known ? tri.order : fallback, tri.twisted_intersection, std::nullopt};
  if (tri.order_known) {
    try {
      w.triangle = triangle_check(s, w.triple[0], w.triple[1], w.triple[2]);
    } catch (const MoveRefused&) {
    }
  }
  return w;
}

// The twisted-intersection test and the triangle criterion should agree on
// every triple whose pairs meet once.
void note_divergence(const CurveSystem& s, const Witness& w, std::vector<std::string>& notes) {
  if (w.twisted_intersection < 0) return;
  const bool twist_says_yes = w.twisted_intersection == 0;
  if (twist_says_yes == w.triangle.has_value()) return;
  notes.push_back("triangle criterion disagrees on (" + s.name(w.triple[0]) + ", " + s.name(w.triple[1]) + ", " +
                  s.name(w.triple[2]) + ")");
}

}  // namespace

ExtendResult extend_bouquet(const CurveSystem& s, const std::vector<int>& order, int added) {
  ExtendResult res;
  if (order.size() < 2) throw std::invalid_argument("extension needs a bouquet of at least two curves");
  if (std::find(order.begin(), order.end(), added) != order.end())
    throw std::invalid_argument("curve " + s.name(added) + " is already in the bouquet");
  for (int c : order) {
    auto i = pair_intersection(s, c, added);
    if (i.count != 1) {
      res.failure = Failure::PairIntersection;
      res.detail = "pair " + pair_text(s, c, added) + " has intersection number " + std::to_string(i.count);
      return res;
    }
  }
  const std::array<int, 3> want{order.front(), order.back(), added};
  const auto tri = triple_bouquet(s, want[0], want[1], want[2]);
  res.witness = witness_of(s, tri, want);
  if (!tri.yes) {
    res.failure = tri.failure;
    res.detail = tri.detail;
    return res;
  }
  if (!is_rotation_of(tri.order, want)) {
    res.failure = Failure::TripleCycle;
    res.detail = "triple " + s.name(want[0]) + ", " + s.name(want[1]) + ", " + s.name(added) + " has the opposite order";
    return res;
  }
  res.yes = true;
  res.order = order;
  res.order.push_back(added);
  return res;
}

BouquetCertificate detect_bouquet(const CurveSystem& s, const std::vector<int>& curves) {
  if (curves.empty()) throw std::invalid_argument("no curves given");
  require_distinct(curves);
  BouquetCertificate cert;
  const int n = static_cast<int>(curves.size());
  if (n == 1) {
    cert.yes = true;
    cert.order = curves;
    cert.notes.push_back("a single curve is trivially a bouquet");
    return cert;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int a = curves[i], b = curves[j];
      auto sub = restrict_curves(s, {a, b});
      auto r = intersection_number(sub.sys, sub.index[a], sub.index[b]);
      if (r.count == 0 && isotopic(sub.sys, sub.index[a], sub.index[b]).isotopic) {
        cert.failure = Failure::IsotopicPair;
        cert.detail = "isotopic pair " + pair_text(s, a, b);
        return cert;
      }
      if (r.count != 1) {
        cert.failure = Failure::PairIntersection;
        cert.detail = "pair " + pair_text(s, a, b) + " has intersection number " + std::to_string(r.count) +
                      (r.blocked ? " (bigon blocked by a puncture)" : "");
        return cert;
      }
    }
  }
  if (n == 2) {
    cert.yes = true;
    cert.order = curves;
    return cert;
  }

  const auto base = triple_bouquet(s, curves[0], curves[1], curves[2]);
  cert.witnesses.push_back(witness_of(s, base, {curves[0], curves[1], curves[2]}));
  note_divergence(s, cert.witnesses.back(), cert.notes);
  if (!base.yes) {
    cert.failure = base.failure;
    cert.detail = base.detail;
    return cert;
  }
  std::vector<int> order(base.order.begin(), base.order.end());

  for (int m = 3; m < n; ++m) {
    const int added = curves[m];
    const int size = static_cast<int>(order.size());
    int place = -1;
    for (int i = size - 1; i >= 0 && place < 0; --i) {
      const int b = order[i], a = order[(i + 1) % size];
      if (cyclic_order_unchecked(s, a, b, added).order == Order::ABC) place = (i + 1) % size;
    }
    if (place < 0) {
      cert.failure = Failure::NoPlacement;
      cert.detail = "no consecutive pair (b, a) with a < b < " + s.name(added) + " < a";
      return cert;
    }
    std::rotate(order.begin(), order.begin() + place, order.end());
    auto ext = extend_bouquet(s, order, added);
    if (ext.witness) {
      cert.witnesses.push_back(*ext.witness);
      note_divergence(s, cert.witnesses.back(), cert.notes);
    }
    if (!ext.yes) {
      cert.failure = ext.failure;
      cert.detail = ext.detail;
      return cert;
    }
    order = std::move(ext.order);
  }
  rotate_to_front(order, curves.front());
  cert.yes = true;
  cert.order = std::move(order);
  return cert;
}

LinearResult check_linear_criterion(const CurveSystem& s, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  if (n < 3) throw std::invalid_argument("the linear criterion needs at least three curves");
  require_distinct(order);
  LinearResult res;
  std::optional<LinearResult> first_failure;
  bool all_isotopic = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto sub = restrict_curves(s, {order[i], order[j]});
      auto r = intersection_number(sub.sys, sub.index[order[i]], sub.index[order[j]]);
      if (r.count != 0 || !isotopic(sub.sys, sub.index[order[i]], sub.index[order[j]]).isotopic) all_isotopic = false;
      if (r.count != 1 && !first_failure) {
        LinearResult f;
        f.failure = Failure::PairIntersection;
        f.detail = "pair " + pair_text(s, order[i], order[j]) + " has intersection number " + std::to_string(r.count);
        first_failure = f;
      }
    }
  }
  if (all_isotopic) throw MoveRefused("all curves are pairwise isotopic");
  if (first_failure) return *first_failure;
  for (int i = 1; i + 1 < n; ++i) {
    const std::array<int, 3> want{order[0], order[i], order[i + 1]};
    const auto tri = triple_bouquet(s, want[0], want[1], want[2]);
    ++res.triple_checks;
    if (!tri.yes || !is_rotation_of(tri.order, want)) {
      res.failure = tri.yes ? Failure::TripleCycle : tri.failure;
      res.failing_index = i + 1;
      res.detail = tri.yes ? "triple (" + s.name(want[0]) + ", " + s.name(want[1]) + ", " + s.name(want[2]) +
                                 ") has the opposite cyclic order"
                           : tri.detail;
      return res;
    }
  }
  res.yes = true;
  return res;
}

RelationProfile relation_profile(const CurveSystem& s, const std::vector<int>& curves) {
  require_distinct(curves);
  RelationProfile p;
  p.curves = curves;
  const int n = static_cast<int>(curves.size());
  std::map<std::pair<int, int>, bool> braid;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto r = pair_intersection(s, curves[i], curves[j]);
      p.pairs.push_back({curves[i], curves[j], r.count, r.blocked, r.count == 1});
      braid[{curves[i], curves[j]}] = r.count == 1;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int a = curves[i], b = curves[j], c = curves[k];
        RelationProfile::Triple t{a, b, c, std::nullopt};
        if (braid[{a, b}] && braid[{a, c}] && braid[{b, c}]) {
          auto tri = triple_bouquet(s, a, b, c);
          if (tri.yes) t.variant = tri.order;
        }
        p.triples.push_back(t);
      }
  return p;
}

std::vector<Word> profile_relators(const RelationProfile& p, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;
  std::vector<Word> out;
  for (const auto& pr : p.pairs)
    if (pr.braid && pos.count(pr.a) && pos.count(pr.b)) out.push_back(braid_relator(n, pos[pr.a], pos[pr.b]));
  for (const auto& t : p.triples) {
    if (!t.variant) continue;
    const auto [x, y, z] = *t.variant;
    if (pos.count(x) && pos.count(y) && pos.count(z)) out.push_back(cycle_relator(n, pos[x], pos[y], pos[z]));
  }
  return out;
}

CurveSystem bouquet_to_chain(const CurveSystem& s, const BouquetCertificate& cert) {
  if (!cert.yes || cert.order.empty()) throw std::invalid_argument("bouquet_to_chain needs a yes certificate");
  auto sub = restrict_curves(s, cert.order);
  CurveSystem t = sub.sys;
  const int n = static_cast<int>(cert.order.size());
  for (int k = n - 1; k >= 1; --k) t = dehn_twist(t, sub.index[cert.order[k]], sub.index[cert.order[k - 1]], -1);
  t = reduce_all(t).system;
  for (int k = 0; k < n; ++k) t.rename(sub.index[cert.order[k]], "\x01" + std::to_string(k));
  for (int k = 0; k < n; ++k) t.rename(sub.index[cert.order[k]], std::to_string(k + 1) + "'");
  return t;
}

bool is_chain(const CurveSystem& s, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pair_intersection(s, order[i], order[j]).count != (j == i + 1 ? 1 : 0)) return false;
  return true;
}

}  // namespace bouquet
