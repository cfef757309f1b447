#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bouquet/word.hpp"

namespace bouquet {

/// A positive braid in which every pair of strands crosses at most once,
/// identified with its permutation. `image[x]` is the image of x (0-based)
/// and products compose as functions: (A*B)(x) = A(B(x)), so the braid
/// σ_{i1}...σ_{im} has permutation s_{i1} ∘ ... ∘ s_{im}.
class PermutationBraid {
public:
  explicit PermutationBraid(std::vector<int> image);

  static PermutationBraid identity(int strands);
  /// The half twist Δ (reversal permutation).
  static PermutationBraid delta(int strands);
  /// σ_i, zero-based i in [0, strands-2].
  static PermutationBraid generator(int strands, int i);

  int strands() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  int operator[](int x) const { return image_[x]; }

  /// Number of crossings (inversions).
  int length() const;
  bool is_identity() const;
  bool is_delta() const;

  /// σ_i ≼ this, i.e. this = σ_i · B for a permutation braid B.
  bool starts_with(int i) const;
  /// this ≽ σ_i, i.e. this = B · σ_i.
  bool ends_with(int i) const;

  /// Δ^-1 · this · Δ.
  PermutationBraid flipped() const;
  PermutationBraid inverse_perm() const;

  /// One reduced positive word (0-based generator indices) for this braid.
  std::vector<int> reduced_word() const;

  friend PermutationBraid operator*(const PermutationBraid& a, const PermutationBraid& b);
  friend auto operator<=>(const PermutationBraid&, const PermutationBraid&) = default;

private:
  std::vector<int> image_;
};

/// Δ^inf · factors[0] · ... with consecutive factors left-weighted and no
/// factor equal to the identity or to Δ.
struct GarsideNormalForm {
  int strands = 0;
  int inf = 0;
  std::vector<PermutationBraid> factors;

  int sup() const { return inf + static_cast<int>(factors.size()); }
  std::string str() const;
  /// A braid word representing this element.
  std::vector<int> to_letters() const;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

/// A word in the Artin generators σ_1..σ_{k-1} of B_k.
class BraidWord {
public:
  BraidWord(int strands, std::vector<int> letters = {});
  BraidWord(int strands, Word word);

  static AlphabetPtr alphabet_for(int strands);

  int strands() const { return strands_; }
  const Word& word() const { return word_; }
  std::span<const int> letters() const { return word_.letters(); }

  /// Accepts the `B<k>:` header. Without header or `strands` the strand count
/// is the least one that fits the letters.
  static BraidWord parse(std::string_view text, int strands = -1);
  std::string str() const;

private:
  int strands_;
  Word word_;
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);

/// Makes (a, b) left-weighted in place, keeping the product a·b fixed.
/// Returns true if anything moved.
bool left_weight(PermutationBraid& a, PermutationBraid& b);

GarsideNormalForm normal_form(const BraidWord& w);
/// Normal form of a raw letter sequence over B_strands.
GarsideNormalForm normal_form(int strands, std::span<const int> letters);

bool equals(const BraidWord& w1, const BraidWord& w2);
bool is_trivial(const BraidWord& w);

/// σ1 σ2 ... σ_{k-1} σ1 ... (the standard positive word for Δ).
BraidWord delta_word(int strands);

}  // namespace bouquet
