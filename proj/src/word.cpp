#include "bouquet/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace bouquet {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("alphabet must have at least one generator");
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("alphabet labels must be distinct");
}

AlphabetPtr Alphabet::indexed(std::string_view prefix, int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return std::make_shared<const Alphabet>(std::move(labels));
}

std::vector<int> free_reduce(std::span<const int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word::Word(AlphabetPtr alphabet, std::vector<int> letters) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("word needs an alphabet");
  for (int x : letters) {
    if (x == 0 || std::abs(x) > alphabet_->size())
      throw std::out_of_range("letter " + std::to_string(x) + " outside alphabet of size " +
                              std::to_string(alphabet_->size()));
  }
  letters_ = free_reduce(letters);
}

Word Word::generator(AlphabetPtr alphabet, int g, int sign) {
  return Word(std::move(alphabet), {sign > 0 ? g + 1 : -(g + 1)});
}

std::string Word::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters_[i]);
  }
  return s;
}

bool operator==(const Word& a, const Word& b) {
  return *a.alphabet_ == *b.alphabet_ && a.letters_ == b.letters_;
}

namespace {

void require_same(const Word& a, const Word& b) {
  if (!(*a.alphabet() == *b.alphabet())) throw AlphabetMismatch("words over different alphabets");
}

}  // namespace

Word concat(const Word& w1, const Word& w2) {
  require_same(w1, w2);
  std::vector<int> letters(w1.letters().begin(), w1.letters().end());
  letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
  return Word(w1.alphabet(), std::move(letters));
}

Word invert(const Word& w) {
  std::vector<int> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(-*it);
  return Word(w.alphabet(), std::move(letters));
}

Word conjugate(const Word& f, const Word& w) { return concat(concat(f, w), invert(f)); }

Word power(const Word& w, int k) {
  Word base = k < 0 ? invert(w) : w;
  Word out = Word::identity(w.alphabet());
  for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
  return out;
}

Word rotate(const Word& w, int shift) {
  auto letters = std::vector<int>(w.letters().begin(), w.letters().end());
  if (letters.empty()) return w;
  int n = static_cast<int>(letters.size());
  shift = ((shift % n) + n) % n;
  std::rotate(letters.begin(), letters.begin() + shift, letters.end());
  return Word(w.alphabet(), std::move(letters));
}

Homomorphism::Homomorphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_->size())
    throw std::invalid_argument("homomorphism needs one image per source generator");
  for (const auto& w : images_)
    if (!(*w.alphabet() == *target_)) throw AlphabetMismatch("image word not over target alphabet");
}

Word Homomorphism::operator()(const Word& w) const {
  if (!(*w.alphabet() == *source_)) throw AlphabetMismatch("word not over homomorphism source");
  std::vector<int> letters;
  for (int x : w.letters()) {
    const auto img = images_[std::abs(x) - 1].letters();
    if (x > 0) {
      letters.insert(letters.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) letters.push_back(-*it);
    }
  }
  return Word(target_, std::move(letters));
}

Homomorphism Homomorphism::after(const Homomorphism& inner) const {
  if (!(*inner.target_ == *source_)) throw AlphabetMismatch("composition of incompatible homomorphisms");
  std::vector<Word> images;
  images.reserve(inner.images_.size());
  for (const auto& w : inner.images_) images.push_back((*this)(w));
  return Homomorphism(inner.source_, target_, std::move(images));
}

Word apply_hom(const Homomorphism& h, const Word& w) { return h(w); }

ParsedWord parse_word_text(std::string_view text) {
  ParsedWord out;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;

  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    std::string_view head = text.substr(pos, colon - pos);
    while (!head.empty() && is_space(head.back())) head.remove_suffix(1);
    if (head.size() < 2 || (head[0] != 'B' && head[0] != 'T'))
      throw ParseError("bad word header '" + std::string(head) + "', expected B<k>: or T<k>:");
    int k = 0;
    auto [ptr, ec] = std::from_chars(head.data() + 1, head.data() + head.size(), k);
    if (ec != std::errc() || ptr != head.data() + head.size() || k < 1)
      throw ParseError("bad word header '" + std::string(head) + "'");
    out.kind = head[0];
    out.header_size = k;
    pos = colon + 1;
  }

  std::string_view body = text.substr(pos);
  bool numeric = std::any_of(body.begin(), body.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
  });
  if (numeric) {
    std::size_t i = 0;
    while (i < body.size()) {
      if (is_space(body[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < body.size() && !is_space(body[j])) ++j;
      std::string_view tok = body.substr(i, j - i);
      if (!tok.empty() && tok[0] == '+') tok.remove_prefix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0)
        throw ParseError("bad letter '" + std::string(body.substr(i, j - i)) + "' at offset " +
                         std::to_string(pos + i));
      out.letters.push_back(v);
      i = j;
    }
  } else {
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (is_space(c)) continue;
      if (c >= 'a' && c <= 'z')
        out.letters.push_back(c - 'a' + 1);
      else if (c >= 'A' && c <= 'Z')
        out.letters.push_back(-(c - 'A' + 1));
      else
        throw ParseError(std::string("bad letter '") + c + "' at offset " + std::to_string(pos + i));
    }
  }
  return out;
}

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  auto parsed = parse_word_text(text);
  for (int x : parsed.letters)
    if (std::abs(x) > alphabet->size())
      throw ParseError("generator " + std::to_string(std::abs(x)) + " outside alphabet of size " +
                       std::to_string(alphabet->size()));
  return Word(alphabet, std::move(parsed.letters));
}

}  // namespace bouquet
