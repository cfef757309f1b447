#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bouquet/curvesys.hpp"
#include "bouquet/moves.hpp"
#include "bouquet/word.hpp"

namespace bouquet {

enum class Failure { None, IsotopicPair, PairIntersection, TripleCycle, NoPlacement };

/// Stable report text of a failure kind.
std::string failure_text(Failure f);

struct TripleResult {
  bool yes = false;
  Failure failure = Failure::None;
  std::string detail;
  std::array<int, 3> order{};  // x < y < z < x once the pairwise checks pass
  bool order_known = false;
  int twisted_intersection = -1;  // i(x, T_y^-1(z))
  bool blocked = false;
};

/// Decides whether curves a, b, c form a bouquet.
TripleResult triple_bouquet(const CurveSystem& s, int a, int b, int c);

/// Key of an unpunctured three-sided disk region of {a, b, c} with one side
/// per curve, least key first. Throws MoveRefused unless all pairs meet once.
std::optional<std::string> triangle_check(const CurveSystem& s, int a, int b, int c);

struct Witness {
  std::array<int, 3> triple;  // tested in order x < y < z < x
  int twisted_intersection = -1;
  std::optional<std::string> triangle;
};

struct BouquetCertificate {
  bool yes = false;
  std::vector<int> order;  // cyclic order when yes
  std::vector<Witness> witnesses;
  Failure failure = Failure::None;
  std::string detail;
  std::vector<std::string> notes;
};

struct ExtendResult {
  bool yes = false;
  std::vector<int> order;
  Failure failure = Failure::None;
  std::string detail;
  std::optional<Witness> witness;
};

/// Adds `added` to a bouquet already known to have cyclic order `order`.
ExtendResult extend_bouquet(const CurveSystem& s, const std::vector<int>& order, int added);

/// Full decision with a cyclic-order certificate. The order starts with
/// curves.front().
BouquetCertificate detect_bouquet(const CurveSystem& s, const std::vector<int>& curves);

struct LinearResult {
  bool yes = false;
  Failure failure = Failure::None;
  int failing_index = 0;  // i of the failing triple (c_1, c_i, c_{i+1}), 1-based
  int triple_checks = 0;
  std::string detail;
};

/// Pairwise intersection one plus the n-2 triples (c_1, c_i, c_{i+1}).
LinearResult check_linear_criterion(const CurveSystem& s, const std::vector<int>& order);

struct RelationProfile {
  struct Pair {
    int a, b;
    int intersection;
    bool blocked;
    bool braid;
  };
  struct Triple {
    int a, b, c;
    std::optional<std::array<int, 3>> variant;  // (p, q, r): T_qT_pT_rT_q = T_rT_qT_pT_r
  };
  std::vector<int> curves;
  std::vector<Pair> pairs;
  std::vector<Triple> triples;
};

RelationProfile relation_profile(const CurveSystem& s, const std::vector<int>& curves);

/// The relators a profile asserts, as twist words over T1..Tn where T_i is the
/// i-th curve of `order`.
std::vector<Word> profile_relators(const RelationProfile& p, const std::vector<int>& order);

/// Replaces a_k by T_{a_(k-1)}^-1(a_k) for k = n..2 along the certificate
/// order, reduces, and names the curves 1', 2', ... in order. The result
/// keeps only the ordered curves.
CurveSystem bouquet_to_chain(const CurveSystem& s, const BouquetCertificate& cert);

/// Consecutive curves meet once, all other pairs are disjoint.
bool is_chain(const CurveSystem& s, const std::vector<int>& order);

}  // namespace bouquet
