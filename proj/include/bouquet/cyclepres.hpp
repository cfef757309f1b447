#pragma once

#include <string>
#include <vector>

#include "bouquet/braid.hpp"
#include "bouquet/word.hpp"

namespace bouquet {

/// A named relator of the cycle presentation.
struct Relator {
  enum class Kind { Braid, Cycle };
  Kind kind;
  std::vector<int> indices;  // 1-based twist indices: (i, j) or (i, j, k)
  Word word;

  /// "braid(1,2)" / "cycle(1,2,3)".
  std::string id() const;
};

/// Generators T_1..T_n with every braid relation T_iT_jT_i = T_jT_iT_j and,
/// per triple i<j<k, the cycle relation T_jT_iT_kT_j = T_kT_jT_iT_k.
struct CyclePresentation {
  int n = 0;
  AlphabetPtr alphabet;
  std::vector<Relator> braid_relators;
  std::vector<Relator> cycle_relators;
};

CyclePresentation build_presentation(int n);

/// Twist alphabet T1..Tn (cached per n).
AlphabetPtr twist_alphabet(int n);

/// T_iT_jT_iT_j^-1T_i^-1T_j^-1 (1-based indices).
Word braid_relator(int n, int i, int j);

/// Cycle relator for three twists in cyclic order p < q < r < p:
/// (T_q T_p T_r T_q)(T_r T_q T_p T_r)^-1. The order is first rotated so the
/// smallest index leads, so all three rotations give the same relator.
Word cycle_relator(int n, int p, int q, int r);

/// φ: T_k ↦ P_k σ_k P_k^-1 with P_k = σ_1 ... σ_{k-1}, into B_{n+1}.
Homomorphism chain_phi(int n);
/// ψ: σ_1 ↦ T_1, σ_{k+1} ↦ T_k^-1 T_{k+1} T_k.
Homomorphism chain_psi(int n);
/// φ built from the recursion φ(T_{k+1}) = φ(T_k) σ_{k+1} φ(T_k)^-1.
Homomorphism chain_phi_recursive(int n);

struct RelatorCheck {
  std::string id;
  bool ok = false;
};

/// Maps every relator of build_presentation(n) through φ and checks that the
/// image is the trivial braid. Runs across hardware threads; the report
/// order is the presentation order.
std::vector<RelatorCheck> verify_relators(int n);

/// Checks φ(ψ(σ_k)) = σ_k in B_{n+1} for k = 1..n.
std::vector<RelatorCheck> round_trip(int n);

/// Decides T-word equality through φ. Faithful only when the twists come
/// from a π1-injective bouquet; callers report that assumption.
bool twist_word_equals(int n, const Word& w1, const Word& w2);

/// Parses a twist word (`T<k>:` header optional) over T1..Tn.
Word parse_twist_word(std::string_view text, int n);

}  // namespace bouquet
