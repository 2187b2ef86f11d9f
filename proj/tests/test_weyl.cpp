#include <algorithm>
#include <random>

#include "doctest.h"
#include "weylcells/weyl.h"

using namespace wc;
using weyl::from_word;
using weyl::identity;
using weyl::simple;

namespace {

const RootSystem& sys(char f, int n) { return RootSystem::get(CartanType(f, n)); }

// Words of the longest elements, transcribed from the closed forms.
std::vector<int> long_word_formula(CartanType t) {
  int n = t.rank;
  std::vector<int> w;  // 0-based
  auto push = [&](int one_based) { w.push_back(one_based - 1); };
  switch (t.family) {
    case 'A':
      for (int k = n; k >= 1; --k)
        for (int j = k; j <= n; ++j) push(j);
      break;
    case 'B':
    case 'C':
      for (int k = n; k >= 1; --k) {
        for (int j = k; j <= n; ++j) push(j);
        for (int j = n - 1; j >= k; --j) push(j);
      }
      break;
    case 'D':
      push(n);
      push(n - 1);
      for (int k = n - 2; k >= 1; --k) {
        for (int j = k; j <= n - 2; ++j) push(j);
        push(n);
        push(n - 1);
        for (int j = n - 2; j >= k; --j) push(j);
      }
      break;
    default:
      break;
  }
  return w;
}

}  // namespace

TEST_CASE("from_word basics") {
  const RootSystem& a2 = sys('A', 2);
  CHECK(from_word(a2, {}) == identity(a2));
  CHECK(from_word(a2, {0, 0}) == identity(a2));
  CHECK(from_word(a2, {0, 1, 0}) == from_word(a2, {1, 0, 1}));
  CHECK_THROWS_AS(simple(a2, 5), std::invalid_argument);
}

TEST_CASE("inversion sets") {
  const RootSystem& a2 = sys('A', 2);
  for (int i = 0; i < 2; ++i) {
    InversionBits b = weyl::inversion_set(simple(a2, i));
    CHECK(b.count() == 1);
    CHECK(b.test(a2.index_of(a2.simple_root(i))));
  }
  // s1 s2 -> {alpha_1, alpha_1 + alpha_2}
  InversionBits b = weyl::inversion_set(from_word(a2, {0, 1}));
  CHECK(b.count() == 2);
  CHECK(b.test(a2.index_of(Coords{1, 0})));
  CHECK(b.test(a2.index_of(Coords{1, 1})));

  WeylElt w0 = weyl::longest_element(a2);
  CHECK(weyl::inversion_set(w0).count() == static_cast<size_t>(a2.num_positive()));
}

TEST_CASE("word recovery from inversion sets") {
  const RootSystem& a2 = sys('A', 2);
  InversionBits b;
  b.set(a2.index_of(Coords{1, 0}));
  CHECK(weyl::word_from_inversions(a2, b) == std::vector<int>{0});
  b.set(a2.index_of(Coords{1, 1}));
  CHECK(weyl::word_from_inversions(a2, b) == std::vector<int>{0, 1});

  // {alpha_1 + alpha_2} alone is not an inversion set
  InversionBits bad;
  bad.set(a2.index_of(Coords{1, 1}));
  CHECK_THROWS_AS(weyl::word_from_inversions(a2, bad), std::invalid_argument);

  // w0 of G2 has length 6
  const RootSystem& g2 = sys('G', 2);
  InversionBits all;
  for (int k = 0; k < g2.num_positive(); ++k) all.set(k);
  CHECK(weyl::word_from_inversions(g2, all).size() == 6);
}

TEST_CASE("round trip word <-> inversions, exhaustive at rank <= 4") {
  for (CartanType t : {CartanType('A', 3), CartanType('B', 3), CartanType('C', 3),
                       CartanType('G', 2), CartanType('A', 4), CartanType('B', 4),
                       CartanType('D', 4), CartanType('F', 4)}) {
    const RootSystem& rs = RootSystem::get(t);
    CAPTURE(t.str());
    for (const auto& w : weyl::all_elements(rs)) {
      std::vector<int> word = weyl::canonical_word(w);
      CHECK(from_word(rs, word) == w);
      CHECK(static_cast<int>(word.size()) == weyl::length(w));
    }
  }
}

TEST_CASE("round trip on random E6 elements") {
  const RootSystem& e6 = sys('E', 6);
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> gen(0, 5);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> word;
    for (int k = 0; k < 40; ++k) word.push_back(gen(rng));
    WeylElt w = from_word(e6, word);
    CHECK(from_word(e6, weyl::canonical_word(w)) == w);
  }
}

TEST_CASE("group operations") {
  const RootSystem& f4 = sys('F', 4);
  WeylElt w0 = weyl::longest_element(f4);
  CHECK(weyl::length(w0) == 24);
  CHECK(weyl::multiply(w0, w0) == identity(f4));
  CHECK(weyl::length(identity(f4)) == 0);

  const RootSystem& a2 = sys('A', 2);
  WeylElt w = from_word(a2, {1, 0});  // s2 s1
  CHECK(weyl::left_descents(w) == std::set<int>{1});
  CHECK(weyl::right_descents(w) == std::set<int>{0});
  CHECK(weyl::inverse(weyl::inverse(w)) == w);
  CHECK(weyl::length(weyl::inverse(w)) == weyl::length(w));
  CHECK_THROWS_AS(weyl::multiply(identity(a2), identity(f4)), std::invalid_argument);
}

TEST_CASE("length of w0 w is l(w0) - l(w)") {
  for (CartanType t : {CartanType('B', 3), CartanType('G', 2), CartanType('A', 4)}) {
    const RootSystem& rs = RootSystem::get(t);
    WeylElt w0 = weyl::longest_element(rs);
    int lw0 = weyl::length(w0);
    for (const auto& w : weyl::all_elements(rs))
      CHECK(weyl::length(weyl::multiply(w0, w)) == lw0 - weyl::length(w));
  }
}

TEST_CASE("longest element closed forms") {
  // classical families via the telescoping products
  for (CartanType t : {CartanType('A', 4), CartanType('B', 4), CartanType('C', 3),
                       CartanType('D', 4), CartanType('D', 5)}) {
    const RootSystem& rs = RootSystem::get(t);
    CAPTURE(t.str());
    CHECK(from_word(rs, long_word_formula(t)) == weyl::longest_element(rs));
  }

  // E6: an explicit 36-letter word. The source table numbers the branch node
  // 4 off a 1-2-3-5-6 chain; translate into our numbering (2->3, 3->4, 4->2).
  const RootSystem& e6 = sys('E', 6);
  std::vector<int> e6w1 = {5, 4, 3, 5, 4, 3, 2, 3, 5, 4, 3, 2, 1, 2, 3, 5, 4, 3,
                           2, 1, 6, 5, 3, 4, 2, 1, 3, 2, 5, 3, 4, 6, 5, 3, 2, 1};
  const int relabel[7] = {0, 1, 3, 4, 2, 5, 6};
  for (int& x : e6w1) x = relabel[x] - 1;
  CHECK(e6w1.size() == 36);
  CHECK(from_word(e6, e6w1) == weyl::longest_element(e6));

  // F4: the explicit 24-letter word
  const RootSystem& f4 = sys('F', 4);
  std::vector<int> f4w = {3, 2, 3, 2, 1, 2, 3, 2, 1, 4, 3, 2,
                          1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4};
  for (int& x : f4w) --x;
  CHECK(f4w.size() == 24);
  CHECK(from_word(f4, f4w) == weyl::longest_element(f4));

  // G2: both 6-letter alternating words
  const RootSystem& g2 = sys('G', 2);
  CHECK(from_word(g2, {0, 1, 0, 1, 0, 1}) == weyl::longest_element(g2));
  CHECK(from_word(g2, {1, 0, 1, 0, 1, 0}) == weyl::longest_element(g2));
}

TEST_CASE("one-line notation fixtures") {
  const RootSystem& a3 = sys('A', 3);
  WeylElt w0 = weyl::longest_element(a3);
  CHECK(weyl::one_line(w0) == SignedSeq{4, 3, 2, 1});
  CHECK(weyl::one_line(weyl::multiply(w0, simple(a3, 0))) == SignedSeq{3, 4, 2, 1});

  const RootSystem& c3 = sys('C', 3);
  WeylElt v = weyl::multiply(weyl::longest_element(c3), from_word(c3, {2, 1, 0}));
  CHECK(weyl::one_line(v) == SignedSeq{-2, -3, 1});

  for (int n : {4, 5}) {
    const RootSystem& dn = sys('D', n);
    SignedSeq expect{-2, -1};
    for (int k = 3; k <= n; ++k) expect.push_back(k);
    CHECK(weyl::one_line(simple(dn, n - 1)) == expect);
  }

  // longest elements in one-line form
  const RootSystem& b3 = sys('B', 3);
  CHECK(weyl::one_line(weyl::longest_element(b3)) == SignedSeq{-1, -2, -3});
  const RootSystem& d5 = sys('D', 5);
  CHECK(weyl::one_line(weyl::longest_element(d5)) == SignedSeq{1, -2, -3, -4, -5});
  const RootSystem& d4 = sys('D', 4);
  CHECK(weyl::one_line(weyl::longest_element(d4)) == SignedSeq{-1, -2, -3, -4});
  // A_n: n+1 entries
  const RootSystem& a4 = sys('A', 4);
  CHECK(weyl::one_line(weyl::longest_element(a4)) == SignedSeq{5, 4, 3, 2, 1});
}

TEST_CASE("one-line round trip, exhaustive on A3, B3, C3, D4") {
  for (CartanType t : {CartanType('A', 3), CartanType('B', 3), CartanType('C', 3),
                       CartanType('D', 4)}) {
    const RootSystem& rs = RootSystem::get(t);
    CAPTURE(t.str());
    for (const auto& w : weyl::all_elements(rs))
      CHECK(weyl::from_one_line(rs, weyl::one_line(w)) == w);
  }
}

TEST_CASE("one-line rejects malformed sequences") {
  const RootSystem& b3 = sys('B', 3);
  CHECK_THROWS_AS(weyl::from_one_line(b3, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(weyl::from_one_line(b3, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(weyl::from_one_line(b3, {0, 1, 2}), std::invalid_argument);
  const RootSystem& d4 = sys('D', 4);
  CHECK_THROWS_AS(weyl::from_one_line(d4, {-1, 2, 3, 4}), std::invalid_argument);
  const RootSystem& a3 = sys('A', 3);
  CHECK_THROWS_AS(weyl::from_one_line(a3, {-1, 2, 3, 4}), std::invalid_argument);
  const RootSystem& g2 = sys('G', 2);
  CHECK_THROWS_AS(weyl::one_line(weyl::longest_element(g2)), std::invalid_argument);
}

TEST_CASE("left multiplication by s_i swaps the values i, i+1 in type A") {
  const RootSystem& a3 = sys('A', 3);
  for (const auto& w : weyl::all_elements(a3)) {
    SignedSeq line = weyl::one_line(w);
    for (int i = 0; i < 3; ++i) {
      SignedSeq swapped = line;
      for (int& v : swapped) {
        if (v == i + 1) v = i + 2;
        else if (v == i + 2) v = i + 1;
      }
      CHECK(weyl::one_line(weyl::multiply(simple(a3, i), w)) == swapped);
    }
  }
}

TEST_CASE("Bruhat order") {
  const RootSystem& a2 = sys('A', 2);
  WeylElt w0 = weyl::longest_element(a2);
  for (const auto& w : weyl::all_elements(a2)) {
    CHECK(weyl::bruhat_leq(identity(a2), w));
    CHECK(weyl::bruhat_leq(w, w0));
  }
  CHECK(weyl::bruhat_leq(simple(a2, 0), from_word(a2, {1, 0, 1})));

  const RootSystem& a3 = sys('A', 3);
  CHECK(weyl::lower_interval(weyl::longest_element(a3)).size() == 24);
  const RootSystem& b3 = sys('B', 3);
  CHECK(weyl::lower_interval(weyl::longest_element(b3)).size() == 48);
  CHECK_THROWS_AS(weyl::lower_interval(weyl::longest_element(b3), 10),
                  weyl::BudgetExceeded);
}

TEST_CASE("lower intervals agree with a brute-force subword oracle") {
  // Oracle: v <= w iff some subsequence of a reduced word of w is a reduced
  // word of v; enumerate all 2^l subsequences.
  const RootSystem& a3 = sys('A', 3);
  auto oracle_interval = [&](const WeylElt& w) {
    std::vector<int> word = weyl::canonical_word(w);
    std::set<WeylElt> out;
    size_t l = word.size();
    for (size_t mask = 0; mask < (size_t{1} << l); ++mask) {
      std::vector<int> sub;
      for (size_t k = 0; k < l; ++k)
        if (mask & (size_t{1} << k)) sub.push_back(word[k]);
      WeylElt v = from_word(a3, sub);
      if (weyl::length(v) == static_cast<int>(sub.size())) out.insert(v);
    }
    return out;
  };
  for (const auto& w : weyl::all_elements(a3)) {
    if (weyl::length(w) > 5) continue;
    auto expect = oracle_interval(w);
    auto got = weyl::lower_interval(w);
    CHECK(std::set<WeylElt>(got.begin(), got.end()) == expect);
    for (const auto& v : weyl::all_elements(a3))
      CHECK(weyl::bruhat_leq(v, w) == (expect.count(v) > 0));
  }
}

TEST_CASE("inversion sets are biconvex") {
  const RootSystem& b3 = sys('B', 3);
  for (const auto& w : weyl::all_elements(b3))
    CHECK(weyl::is_biconvex(b3, weyl::inversion_set(w)));
}

TEST_CASE("element parsing") {
  const RootSystem& c3 = sys('C', 3);
  CHECK(weyl::parse_element(c3, "3 2 3") == from_word(c3, {2, 1, 2}));
  CHECK(weyl::parse_element(c3, "(-2,-3,1)") ==
        weyl::from_one_line(c3, {-2, -3, 1}));
  const RootSystem& a3 = sys('A', 3);
  // four entries cannot be a word in rank 3, so this is one-line
  CHECK(weyl::parse_element(a3, "3 4 1 2") == weyl::from_one_line(a3, {3, 4, 1, 2}));
  CHECK_THROWS_AS(weyl::parse_element(a3, "junk"), std::invalid_argument);
}
