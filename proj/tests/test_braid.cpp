#include <numeric>
#include <random>

#include "bouquet/braid.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bouquet;

namespace {

std::vector<int> random_braid(std::mt19937_64& rng, int strands, int len) {
  std::uniform_int_distribution<int> g(1, strands - 1), sign(0, 1);
  std::vector<int> out;
  for (int i = 0; i < len; ++i) out.push_back(sign(rng) ? g(rng) : -g(rng));
  return out;
}

BraidWord bw(int k, std::vector<int> letters) { return BraidWord(k, std::move(letters)); }

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Permutation of a braid word, computed letter by letter.
std::vector<int> word_permutation(int k, const std::vector<int>& w) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int i = std::abs(*it) - 1;
    for (int& x : perm)
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
  }
  return perm;
}

}  // namespace

TEST_CASE("normal form examples") {
  auto d = normal_form(bw(3, {1, 2, 1}));
  CHECK(d.inf == 1);
  CHECK(d.factors.empty());
  CHECK(normal_form(bw(3, {})).inf == 0);
  CHECK(normal_form(bw(3, {})).factors.empty());
  auto t = normal_form(bw(3, {1, -1}));
  CHECK(t.inf == 0);
  CHECK(t.factors.empty());
}

TEST_CASE("delta agrees with the bounded Artin-move oracle") {
  oracle::ArtinClasses classes(3, 6);
  CHECK(classes.klass({1, 2, 1}) == classes.klass({2, 1, 2}));
  CHECK(classes.klass({1, 2, 1}) != classes.klass({1, 2}));
  CHECK(normal_form(bw(3, {2, 1, 2})) == normal_form(bw(3, {1, 2, 1})));
}

TEST_CASE("equals and is_trivial") {
  CHECK(equals(bw(3, {1, 2, 1}), bw(3, {2, 1, 2})));
  CHECK(equals(bw(4, {1, 3}), bw(4, {3, 1})));
  CHECK_FALSE(equals(bw(3, {1}), bw(3, {2})));
  CHECK(is_trivial(bw(3, {1, 2, 1, -2, -1, -2})));
  CHECK_FALSE(is_trivial(bw(3, {1})));
  // s2 s1 s3 s2 sends strand 1 to 3, s3 s2 s1 s3 sends it to 4.
  const std::vector<int> mixed{2, 1, 3, 2, -3, -1, -2, -3};
  CHECK_FALSE(is_trivial(bw(4, mixed)));
  CHECK(word_permutation(4, {2, 1, 3, 2}) != word_permutation(4, {3, 2, 1, 3}));
  CHECK_FALSE(oracle::FreeAction(4).equal(mixed, {}));
  CHECK(is_trivial(bw(4, {2, 1, 3, 2, -2, -3, -1, -2})));
  CHECK_THROWS_AS(equals(bw(3, {1}), bw(4, {1})), std::invalid_argument);
}

TEST_CASE("text form") {
  auto b = BraidWord::parse("B4: 1 2 -1");
  CHECK(b.strands() == 4);
  CHECK(b.str() == "B4: 1 2 -1");
  CHECK_THROWS_AS(BraidWord::parse("B3: 3"), ParseError);
  CHECK(BraidWord::parse("1 2").strands() == 3);
  CHECK_THROWS_AS(BraidWord::parse("B3: 1", 4), ParseError);
}

TEST_CASE("normal form structure") {
  std::mt19937_64 rng(5);
  for (int k = 2; k <= 6; ++k) {
    for (int trial = 0; trial < 100; ++trial) {
      auto w = random_braid(rng, k, trial % 25);
      auto nf = normal_form(k, w);
      for (std::size_t i = 0; i < nf.factors.size(); ++i) {
        CHECK_FALSE(nf.factors[i].is_identity());
        CHECK_FALSE(nf.factors[i].is_delta());
        if (i + 1 < nf.factors.size()) {
          // Left-weighted: every σ_j starting the next factor ends this one.
          for (int j = 0; j + 1 < k; ++j)
            if (nf.factors[i + 1].starts_with(j)) CHECK(nf.factors[i].ends_with(j));
        }
      }
      CHECK(normal_form(k, nf.to_letters()) == nf);
      // Permutation of the braid (Δ^inf contributes the reversal inf times).
      auto perm = PermutationBraid::identity(k);
      for (int i = 0; i < std::abs(nf.inf); ++i) perm = perm * PermutationBraid::delta(k);
      for (const auto& f : nf.factors) perm = perm * f;
      CHECK(perm.image() == word_permutation(k, w));
    }
  }
}

TEST_CASE("equals matches the free-group action on random words") {
  std::mt19937_64 rng(9);
  for (int k = 3; k <= 5; ++k) {
    oracle::FreeAction action(k);
    for (int trial = 0; trial < 300; ++trial) {
      auto a = random_braid(rng, k, 6);
      // Half the time b is a rewritten form of a: conjugate and cancel.
      auto b = trial % 2 ? random_braid(rng, k, 6) : cat(cat(a, {1, 2, 1}), {-2, -1, -2});
      CHECK(equals(bw(k, a), bw(k, b)) == action.equal(a, b));
    }
  }
}

TEST_CASE("Artin-move oracle agrees on all B3 pairs up to length 4") {
  oracle::ArtinClasses classes(3, 8);
  oracle::FreeAction action(3);
  std::vector<std::vector<int>> words;
  for (const auto& w : classes.words())
    if (w.size() <= 4) words.push_back(w);
  std::vector<GarsideNormalForm> nfs;
  for (const auto& w : words) nfs.push_back(normal_form(3, w));
  int mismatches = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const bool same = nfs[i] == nfs[j];
      if (same != (classes.klass(words[i]) == classes.klass(words[j]))) ++mismatches;
      if (same != action.equal(words[i], words[j])) ++mismatches;
    }
  CHECK(mismatches == 0);
}

TEST_CASE("delta squared is central") {
  std::mt19937_64 rng(13);
  for (int k = 3; k <= 6; ++k) {
    auto d = delta_word(k);
    auto d2 = d * d;
    for (int trial = 0; trial < 50; ++trial) {
      auto w = bw(k, random_braid(rng, k, 10));
      CHECK(equals(d2 * w, w * d2));
    }
  }
}

TEST_CASE("normal form of a product depends only on the factors' elements") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 4;
    auto a = random_braid(rng, k, 5), b = random_braid(rng, k, 5);
    // a' = a with a braid relator spliced in, b' = b with a cancelling pair.
    auto a2 = cat({2, 3, 2, -3, -2, -3}, a);
    auto b2 = cat(cat(b, {1, -1}), {3, 1, -3, -1});
    CHECK(normal_form(bw(k, cat(a, b))) == normal_form(bw(k, cat(a2, b2))));
  }
}

TEST_CASE("left_weight keeps the product") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> perm_a(5), perm_b(5);
    std::iota(perm_a.begin(), perm_a.end(), 0);
    std::iota(perm_b.begin(), perm_b.end(), 0);
    std::shuffle(perm_a.begin(), perm_a.end(), rng);
    std::shuffle(perm_b.begin(), perm_b.end(), rng);
    PermutationBraid a(perm_a), b(perm_b);
    const auto before = cat(a.reduced_word(), b.reduced_word());
    left_weight(a, b);
    const auto after = cat(a.reduced_word(), b.reduced_word());
    auto shift = [](std::vector<int> w) {
      for (int& x : w) ++x;
      return w;
    };
    CHECK(equals(bw(5, shift(before)), bw(5, shift(after))));
    for (int j = 0; j < 4; ++j)
      if (b.starts_with(j)) CHECK(a.ends_with(j));
  }
}
