#include "bouquet/cyclepres.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace bouquet {

std::string Relator::id() const {
  std::string s = kind == Kind::Braid ? "braid(" : "cycle(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(indices[i]);
  }
  return s + ")";
}

AlphabetPtr twist_alphabet(int n) {
  static thread_local std::vector<AlphabetPtr> cache;
  if (n < 1) throw std::invalid_argument("twist alphabet needs n >= 1");
  if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
  if (!cache[n]) cache[n] = Alphabet::indexed("T", n);
  return cache[n];
}

Word braid_relator(int n, int i, int j) {
  return Word(twist_alphabet(n), {i, j, i, -j, -i, -j});
}

Word cycle_relator(int n, int p, int q, int r) {
  // Rotate (p, q, r) so the smallest index comes first.
  while (p > q || p > r) {
    int t = p;
    p = q;
    q = r;
    r = t;
  }
  return Word(twist_alphabet(n), {q, p, r, q, -r, -p, -q, -r});
}

CyclePresentation build_presentation(int n) {
  if (n < 2) throw std::invalid_argument("cycle presentation needs n >= 2");
  CyclePresentation pres;
  pres.n = n;
  pres.alphabet = twist_alphabet(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      pres.braid_relators.push_back({Relator::Kind::Braid, {i, j}, braid_relator(n, i, j)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        pres.cycle_relators.push_back({Relator::Kind::Cycle, {i, j, k}, cycle_relator(n, i, j, k)});
  return pres;
}

Homomorphism chain_phi(int n) {
  auto sigma = BraidWord::alphabet_for(n + 1);
  std::vector<Word> images;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> prefix;
    for (int m = 1; m < k; ++m) prefix.push_back(m);
    Word p(sigma, prefix);
    images.push_back(conjugate(p, Word::generator(sigma, k - 1)));
  }
  return Homomorphism(twist_alphabet(n), sigma, std::move(images));
}

Homomorphism chain_phi_recursive(int n) {
  auto sigma = BraidWord::alphabet_for(n + 1);
  std::vector<Word> images{Word::generator(sigma, 0)};
  for (int k = 1; k < n; ++k) images.push_back(conjugate(images.back(), Word::generator(sigma, k)));
  return Homomorphism(twist_alphabet(n), sigma, std::move(images));
}

Homomorphism chain_psi(int n) {
  auto twists = twist_alphabet(n);
  std::vector<Word> images{Word::generator(twists, 0)};
  for (int k = 1; k < n; ++k) images.push_back(Word(twists, {-k, k + 1, k}));
  return Homomorphism(BraidWord::alphabet_for(n + 1), twists, std::move(images));
}

namespace {

template <typename Job>
std::vector<RelatorCheck> run_parallel(std::size_t count, Job job) {
  std::vector<RelatorCheck> out(count);
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> futures;
  for (std::size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = job(i);
    }));
  }
  for (auto& f : futures) f.get();
  return out;
}

}  // namespace

std::vector<RelatorCheck> verify_relators(int n) {
  const auto pres = build_presentation(n);
  std::vector<const Relator*> all;
  for (const auto& r : pres.braid_relators) all.push_back(&r);
  for (const auto& r : pres.cycle_relators) all.push_back(&r);
  const auto phi = chain_phi(n);
  return run_parallel(all.size(), [&](std::size_t i) {
    BraidWord image(n + 1, phi(all[i]->word));
    return RelatorCheck{all[i]->id(), is_trivial(image)};
  });
}

std::vector<RelatorCheck> round_trip(int n) {
  if (n < 2) throw std::invalid_argument("round trip needs n >= 2");
  const auto phi = chain_phi(n);
  const auto psi = chain_psi(n);
  const auto sigma = BraidWord::alphabet_for(n + 1);
  std::vector<RelatorCheck> out;
  for (int k = 1; k <= n; ++k) {
    Word s = Word::generator(sigma, k - 1);
    BraidWord back(n + 1, phi(psi(s)));
    out.push_back({"sigma" + std::to_string(k), equals(back, BraidWord(n + 1, s))});
  }
  return out;
}

bool twist_word_equals(int n, const Word& w1, const Word& w2) {
  const auto phi = chain_phi(n);
  return equals(BraidWord(n + 1, phi(w1)), BraidWord(n + 1, phi(w2)));
}

Word parse_twist_word(std::string_view text, int n) {
  auto parsed = parse_word_text(text);
  if (parsed.kind == 'B') throw ParseError("expected a twist word (T<k>:), got a braid word header");
  if (parsed.header_size > 0 && parsed.header_size != n)
    throw ParseError("header T" + std::to_string(parsed.header_size) + " conflicts with n = " + std::to_string(n));
  for (int x : parsed.letters)
    if (std::abs(x) > n) throw ParseError("twist generator " + std::to_string(std::abs(x)) + " outside T1..T" + std::to_string(n));
  return Word(twist_alphabet(n), std::move(parsed.letters));
}

}  // namespace bouquet
