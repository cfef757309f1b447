#pragma once

#include <optional>
#include <random>
#include <string>

#include "bouquet/curvesys.hpp"

namespace bouquet {

/// A move that cannot be carried out on the given region or curves.
class MoveRefused : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Bigon {
  Region region;
  int u, v;
  std::vector<int> corners;  // vertices at the two corners
};

/// All bigons of the pair, least region key first. Punctured bigons are
/// collected separately.
struct BigonSearch {
  std::vector<Bigon> free;
  std::vector<Bigon> punctured;
};
BigonSearch find_bigons(const CurveSystem& s, int u, int v);

/// One removable bigon of the pair (least key), if any.
std::optional<Bigon> find_bigon(const CurveSystem& s, int u, int v);

struct ReduceResult {
  CurveSystem system;
  int removed = 0;           // bigons swept away
  bool blocked = false;      // a punctured bigon was left in place
  std::vector<std::string> blocked_keys;
};

/// Removes bigons of {u, v} until none is left. With `rng` the bigon to
/// remove next is drawn at random instead of by least key.
ReduceResult reduce_pair(const CurveSystem& s, int u, int v, std::mt19937_64* rng = nullptr);

/// Reduces every pair of curves until no pair has a removable bigon.
ReduceResult reduce_all(const CurveSystem& s, std::mt19937_64* rng = nullptr);

struct IntersectionResult {
  int count = 0;
  bool blocked = false;  // count is only an upper bound
};
IntersectionResult intersection_number(const CurveSystem& s, int u, int v, std::mt19937_64* rng = nullptr);

/// Replaces curve `target` by T_along^power(target), power in {-2,-1,1,2}.
/// The result is not reduced.
CurveSystem dehn_twist(const CurveSystem& s, int target, int along, int power);

struct IsotopyResult {
  bool isotopic = false;
  bool blocked = false;
};
IsotopyResult isotopic(const CurveSystem& s, int u, int v);

enum class Order { ABC, ACB };

struct CyclicOrderVerdict {
  Order order;
  int eps_ab, eps_bc, eps_ca;
};

/// Sign product of the standard bouquet of three curves, which has order
/// 1 < 2 < 3 < 1.
inline constexpr int kBouquetChirality = -1;

/// Chirality of a triple meeting pairwise once. Throws MoveRefused when a
/// pair does not have intersection number 1.
CyclicOrderVerdict cyclic_order(const CurveSystem& s, int a, int b, int c);

/// The same verdict from algebraic intersections alone; callers guarantee
/// pairwise intersection number 1.
CyclicOrderVerdict cyclic_order_unchecked(const CurveSystem& s, int a, int b, int c);

/// Adds a disjoint parallel copy of curve c, on its right, named `name`.
CurveSystem push_off(const CurveSystem& s, int c, std::string name);

/// Pushes the single u-side of an unpunctured disk region of some
/// sub-collection across the region. Throws MoveRefused otherwise.
CurveSystem isotope_across(const CurveSystem& s, int u, const Region& region);

}  // namespace bouquet
