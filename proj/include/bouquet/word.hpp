#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bouquet {

/// Thrown for malformed text input (words, curve files, CLI arguments).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown when two operands live over different generator sets.
class AlphabetMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An ordered set of named generators. Two alphabets are compatible when
/// they have the same labels in the same order.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> labels);

  /// Generators named `<prefix>1 .. <prefix>n`.
  static std::shared_ptr<const Alphabet> indexed(std::string_view prefix, int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> labels_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A freely reduced word over an alphabet.
///
/// Letters are stored as nonzero integers: `+(g+1)` is generator `g`,
/// `-(g+1)` its inverse. The constructor reduces, so every Word value is
/// freely reduced.
class Word {
public:
  explicit Word(AlphabetPtr alphabet, std::vector<int> letters = {});

  static Word identity(AlphabetPtr alphabet) { return Word(std::move(alphabet)); }
  /// The single letter `g^sign`, g zero-based.
  static Word generator(AlphabetPtr alphabet, int g, int sign = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Canonical text: whitespace separated signed 1-based integers.
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b);
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

private:
  AlphabetPtr alphabet_;
  std::vector<int> letters_;
};

/// Free reduction of a raw letter sequence (stack based, single pass).
std::vector<int> free_reduce(std::span<const int> letters);

Word concat(const Word& w1, const Word& w2);
Word invert(const Word& w);
/// f w f^-1
Word conjugate(const Word& f, const Word& w);
/// w^k for any integer k.
Word power(const Word& w, int k);
/// Cyclic rotation of the underlying letters by `shift` positions, reduced.
Word rotate(const Word& w, int shift);

inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

/// A homomorphism of free groups, given by the images of the generators.
class Homomorphism {
public:
  Homomorphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  const Word& image(int g) const { return images_.at(g); }

  Word operator()(const Word& w) const;

  /// Composition: (this ∘ inner)(w) = this(inner(w)).
  Homomorphism after(const Homomorphism& inner) const;

private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Word> images_;
};

Word apply_hom(const Homomorphism& h, const Word& w);

/// Result of parsing the word grammar: an optional `B<k>:` or `T<k>:`
/// header and the letters.
struct ParsedWord {
  char kind = 0;          // 'B', 'T' or 0 when no header
  int header_size = -1;   // k from the header, -1 when absent
  std::vector<int> letters;
};

/// Accepts `[B<k>:|T<k>:] <body>` where the body is either signed integers
/// ("1 2 -1") or letters ("abA", lowercase generator, uppercase inverse).
/// An empty body is the identity.
ParsedWord parse_word_text(std::string_view text);

/// Parses `text` over `alphabet`; rejects indices outside the alphabet.
Word parse_word(std::string_view text, const AlphabetPtr& alphabet);

}  // namespace bouquet
