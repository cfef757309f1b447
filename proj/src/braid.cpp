#include "bouquet/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bouquet {

PermutationBraid::PermutationBraid(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x])
      throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

PermutationBraid PermutationBraid::identity(int strands) {
  std::vector<int> image(strands);
  std::iota(image.begin(), image.end(), 0);
  return PermutationBraid(std::move(image));
}

PermutationBraid PermutationBraid::delta(int strands) {
  std::vector<int> image(strands);
  for (int x = 0; x < strands; ++x) image[x] = strands - 1 - x;
  return PermutationBraid(std::move(image));
}

PermutationBraid PermutationBraid::generator(int strands, int i) {
  if (i < 0 || i + 1 >= strands) throw std::out_of_range("generator index out of range");
  auto p = identity(strands);
  std::swap(p.image_[i], p.image_[i + 1]);
  return p;
}

int PermutationBraid::length() const {
  int inv = 0;
  for (std::size_t x = 0; x < image_.size(); ++x)
    for (std::size_t y = x + 1; y < image_.size(); ++y)
      if (image_[x] > image_[y]) ++inv;
  return inv;
}

bool PermutationBraid::is_identity() const {
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != static_cast<int>(x)) return false;
  return true;
}

bool PermutationBraid::is_delta() const {
  const int n = strands();
  for (int x = 0; x < n; ++x)
    if (image_[x] != n - 1 - x) return false;
  return true;
}

// s_i ∘ π swaps the values i and i+1; the length drops iff i+1 sits left of i.
bool PermutationBraid::starts_with(int i) const {
  int pos_i = -1, pos_next = -1;
  for (int x = 0; x < strands(); ++x) {
    if (image_[x] == i) pos_i = x;
    if (image_[x] == i + 1) pos_next = x;
  }
  return pos_next < pos_i;
}

bool PermutationBraid::ends_with(int i) const { return image_[i] > image_[i + 1]; }

PermutationBraid PermutationBraid::flipped() const {
  const int n = strands();
  std::vector<int> image(n);
  for (int x = 0; x < n; ++x) image[x] = n - 1 - image_[n - 1 - x];
  return PermutationBraid(std::move(image));
}

PermutationBraid PermutationBraid::inverse_perm() const {
  std::vector<int> image(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) image[image_[x]] = static_cast<int>(x);
  return PermutationBraid(std::move(image));
}

std::vector<int> PermutationBraid::reduced_word() const {
  // Peel left descents: π = s_i ∘ π' with ℓ(π') = ℓ(π) - 1.
  std::vector<int> word;
  PermutationBraid rest = *this;
  while (!rest.is_identity()) {
    for (int i = 0; i + 1 < strands(); ++i) {
      if (rest.starts_with(i)) {
        word.push_back(i);
        rest = generator(strands(), i) * rest;
        break;
      }
    }
  }
  return word;
}

PermutationBraid operator*(const PermutationBraid& a, const PermutationBraid& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  std::vector<int> image(a.image_.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = a.image_[b.image_[x]];
  return PermutationBraid(std::move(image));
}

std::string GarsideNormalForm::str() const {
  std::ostringstream os;
  os << "inf " << inf << " factors [";
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (f) os << " |";
    for (int g : factors[f].reduced_word()) os << ' ' << g + 1;
  }
  os << (factors.empty() ? "]" : " ]");
  return os.str();
}

std::vector<int> GarsideNormalForm::to_letters() const {
  std::vector<int> letters;
  auto delta = PermutationBraid::delta(strands).reduced_word();
  for (int p = 0; p < std::abs(inf); ++p) {
    if (inf > 0) {
      for (int g : delta) letters.push_back(g + 1);
    } else {
      for (auto it = delta.rbegin(); it != delta.rend(); ++it) letters.push_back(-(*it + 1));
    }
  }
  for (const auto& f : factors)
    for (int g : f.reduced_word()) letters.push_back(g + 1);
  return free_reduce(letters);
}

AlphabetPtr BraidWord::alphabet_for(int strands) {
  if (strands < 2) throw std::invalid_argument("braid groups need at least 2 strands");
  static thread_local std::vector<AlphabetPtr> cache;
  if (static_cast<int>(cache.size()) <= strands) cache.resize(strands + 1);
  if (!cache[strands]) cache[strands] = Alphabet::indexed("s", strands - 1);
  return cache[strands];
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), word_(alphabet_for(strands), std::move(letters)) {}

BraidWord::BraidWord(int strands, Word word) : strands_(strands), word_(std::move(word)) {
  if (word_.alphabet()->size() != strands - 1) throw AlphabetMismatch("word is not over B_" + std::to_string(strands));
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  auto parsed = parse_word_text(text);
  if (parsed.kind == 'T') throw ParseError("expected a braid word (B<k>:), got a twist word header");
  int k = parsed.header_size > 0 ? parsed.header_size : strands;
  if (parsed.header_size > 0 && strands > 0 && parsed.header_size != strands)
    throw ParseError("header B" + std::to_string(parsed.header_size) + " conflicts with " +
                     std::to_string(strands) + " strands");
  if (k < 2) {
    int maxg = 0;
    for (int x : parsed.letters) maxg = std::max(maxg, std::abs(x));
    k = std::max(2, maxg + 1);
  }
  for (int x : parsed.letters)
    if (std::abs(x) > k - 1)
      throw ParseError("generator " + std::to_string(std::abs(x)) + " needs more than " + std::to_string(k) +
                       " strands");
  return BraidWord(k, std::move(parsed.letters));
}

std::string BraidWord::str() const { return "B" + std::to_string(strands_) + ": " + word_.str(); }

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw AlphabetMismatch("strand count mismatch");
  return BraidWord(a.strands(), concat(a.word(), b.word()));
}

BraidWord inverse(const BraidWord& w) { return BraidWord(w.strands(), invert(w.word())); }

bool left_weight(PermutationBraid& a, PermutationBraid& b) {
  const int n = a.strands();
  bool moved = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (b.starts_with(i) && !a.ends_with(i)) {
        auto s = PermutationBraid::generator(n, i);
        a = a * s;
        b = s * b;
        moved = again = true;
      }
    }
  }
  return moved;
}

GarsideNormalForm normal_form(int strands, std::span<const int> raw) {
  const auto letters = free_reduce(raw);
  const auto delta = PermutationBraid::delta(strands);

  // σ_i^-1 = Δ^-1 · (Δ σ_i^-1); every Δ^-1 is pulled to the front, flipping
  // the factors it passes.
  int negatives_after = 0;
  std::vector<PermutationBraid> factors(letters.size(), PermutationBraid::identity(strands));
  for (std::size_t j = letters.size(); j-- > 0;) {
    int x = letters[j];
    if (std::abs(x) >= strands) throw std::out_of_range("generator outside B_" + std::to_string(strands));
    auto s = PermutationBraid::generator(strands, std::abs(x) - 1);
    PermutationBraid f = x > 0 ? s : delta * s;
    if (negatives_after % 2) f = f.flipped();
    factors[j] = f;
    if (x < 0) ++negatives_after;
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = factors.size(); j-- > 1;)
      if (left_weight(factors[j - 1], factors[j])) changed = true;
  }

  GarsideNormalForm nf;
  nf.strands = strands;
  nf.inf = -negatives_after;
  std::size_t first = 0;
  while (first < factors.size() && factors[first].is_delta()) {
    ++nf.inf;
    ++first;
  }
  for (std::size_t j = first; j < factors.size(); ++j)
    if (!factors[j].is_identity()) nf.factors.push_back(factors[j]);
  return nf;
}

GarsideNormalForm normal_form(const BraidWord& w) { return normal_form(w.strands(), w.letters()); }

bool equals(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands()) throw AlphabetMismatch("strand count mismatch");
  return normal_form(w1) == normal_form(w2);
}

bool is_trivial(const BraidWord& w) {
  auto nf = normal_form(w);
  return nf.inf == 0 && nf.factors.empty();
}

BraidWord delta_word(int strands) {
  std::vector<int> letters;
  for (int g : PermutationBraid::delta(strands).reduced_word()) letters.push_back(g + 1);
  return BraidWord(strands, std::move(letters));
}

}  // namespace bouquet
