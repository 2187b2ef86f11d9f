#include <map>
#include <set>

#include "doctest.h"
#include "weylcells/cells.h"

using namespace wc;

namespace {

const RootSystem& sys(char f, int n) { return RootSystem::get(CartanType(f, n)); }

// Independent oracle: enumerate every letter sequence of length l(w) whose
// product is w and whose prefixes all increase in length.
std::uint64_t oracle_count_words(const WeylElt& w) {
  const RootSystem& rs = w.rs();
  std::uint64_t count = 0;
  int target = weyl::length(w);
  auto rec = [&](auto&& self, const WeylElt& cur, int len) -> void {
    if (len == target) {
      if (cur == w) ++count;
      return;
    }
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElt next = weyl::multiply(cur, weyl::simple(rs, i));
      if (weyl::length(next) == len + 1) self(self, next, len + 1);
    }
  };
  rec(rec, weyl::identity(rs), 0);
  return count;
}

std::set<WeylElt> to_set(const std::vector<WeylElt>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("reduced word counts") {
  const RootSystem& a2 = sys('A', 2);
  CHECK(cells::count_reduced_words(weyl::simple(a2, 0)) == 1);
  CHECK(cells::count_reduced_words(weyl::from_word(a2, {0, 1, 0})) == 2);

  const RootSystem& a3 = sys('A', 3);
  WeylElt w0 = weyl::longest_element(a3);
  CHECK(oracle_count_words(w0) == 16);
  CHECK(cells::count_reduced_words(w0) == 16);

  // spot-check the recursion against the oracle on short elements of W(B3)
  const RootSystem& b3 = sys('B', 3);
  for (const auto& w : weyl::all_elements(b3)) {
    if (weyl::length(w) > 6) continue;
    CHECK(cells::count_reduced_words(w) == oracle_count_words(w));
  }
}

TEST_CASE("enumerate_C agrees with the brute-force filter on small groups") {
  for (CartanType t : {CartanType('A', 2), CartanType('A', 3), CartanType('B', 3),
                       CartanType('G', 2)}) {
    const RootSystem& rs = RootSystem::get(t);
    CAPTURE(t.str());
    std::set<WeylElt> brute;
    for (const auto& w : weyl::all_elements(rs))
      if (!w.is_identity() && cells::count_reduced_words(w) == 1) brute.insert(w);
    CHECK(to_set(cells::enumerate_C(rs)) == brute);
  }

  const RootSystem& a2 = sys('A', 2);
  std::set<WeylElt> expect = {weyl::simple(a2, 0), weyl::simple(a2, 1),
                              weyl::from_word(a2, {0, 1}), weyl::from_word(a2, {1, 0})};
  CHECK(to_set(cells::enumerate_C(a2)) == expect);

  CHECK(cells::enumerate_C(sys('G', 2)).size() == 10);
}

TEST_CASE("cell sizes match the published table") {
  auto cell_size = [](const RootSystem& rs, int i) {
    return cells::right_cell(rs, i).elements.size();
  };
  for (int n = 1; n <= 6; ++n) {
    const RootSystem& rs = sys('A', n);
    for (int i = 0; i < n; ++i) CHECK(cell_size(rs, i) == static_cast<size_t>(n));
  }
  for (char f : {'B', 'C'})
    for (int n = 2; n <= 5; ++n) {
      const RootSystem& rs = sys(f, n);
      for (int i = 0; i < n; ++i) {
        size_t expect = (i == n - 1) ? n + 1 : 2 * n - 1;
        CAPTURE(f);
        CAPTURE(n);
        CAPTURE(i);
        CHECK(cell_size(rs, i) == expect);
      }
    }
  for (int n = 3; n <= 6; ++n) {
    const RootSystem& rs = sys('D', n);
    for (int i = 0; i < n; ++i) CHECK(cell_size(rs, i) == static_cast<size_t>(n));
  }
  CHECK(cell_size(sys('B', 3), 2) == 4);
  CHECK(cell_size(sys('C', 4), 1) == 7);
}

TEST_CASE("cells partition C") {
  for (CartanType t : {CartanType('A', 4), CartanType('C', 3), CartanType('D', 4),
                       CartanType('F', 4), CartanType('G', 2), CartanType('E', 6)}) {
    const RootSystem& rs = RootSystem::get(t);
    CAPTURE(t.str());
    std::set<WeylElt> whole = to_set(cells::enumerate_C(rs));
    std::set<WeylElt> unioned;
    size_t total = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      auto cell = cells::right_cell(rs, i);
      total += cell.elements.size();
      for (const auto& w : cell.elements) unioned.insert(w);
    }
    CHECK(unioned == whole);
    CHECK(total == whole.size());
  }
}

TEST_CASE("closed forms of the exceptional cells") {
  const RootSystem& e6 = sys('E', 6);
  auto c4 = cells::right_cell(e6, 3);
  std::set<WeylElt> expect;
  for (auto word : std::vector<std::vector<int>>{
           {4}, {4, 3}, {4, 3, 1}, {4, 5}, {4, 5, 6}, {4, 2}}) {
    for (int& x : word) --x;
    expect.insert(weyl::from_word(e6, word));
  }
  CHECK(to_set(c4.elements) == expect);
  CHECK(c4.elements.size() == 6);

  // route (a) == route (b) holds for every E7/E8 cell as well
  for (int n : {7, 8}) {
    const RootSystem& rs = sys('E', n);
    size_t total = 0;
    for (int i = 0; i < n; ++i) total += cells::right_cell(rs, i).elements.size();
    CHECK(total == cells::enumerate_C(rs).size());
  }
  for (int i = 0; i < 4; ++i) CHECK(cells::right_cell(sys('F', 4), i).elements.size() == 6);
}

TEST_CASE("w0-translated cells") {
  const RootSystem& a3 = sys('A', 3);
  auto w0c1 = cells::w0_right_cell(a3, 0);
  std::set<SignedSeq> lines;
  for (const auto& w : w0c1.elements) lines.insert(weyl::one_line(w));
  CHECK(lines == std::set<SignedSeq>{{3, 4, 2, 1}, {3, 2, 4, 1}, {3, 2, 1, 4}});

  // C_n: the minimal-length element of w0*C_n is w0 s_n s_{n-1} ... s_1
  for (int n : {3, 4}) {
    const RootSystem& cn = sys('C', n);
    auto cell = cells::w0_right_cell(cn, n - 1);
    std::vector<int> word;
    for (int k = n - 1; k >= 0; --k) word.push_back(k);
    WeylElt expect = weyl::multiply(weyl::longest_element(cn), weyl::from_word(cn, word));
    CHECK(std::count(cell.min_length_elements.begin(), cell.min_length_elements.end(), expect) ==
          1);
  }

  // G2: w0*C_1 = C_2 and w0*C_2 = C_1
  const RootSystem& g2 = sys('G', 2);
  CHECK(to_set(cells::w0_right_cell(g2, 0).elements) == to_set(cells::right_cell(g2, 1).elements));
  CHECK(to_set(cells::w0_right_cell(g2, 1).elements) == to_set(cells::right_cell(g2, 0).elements));

  // translation identity on lengths
  const RootSystem& b3 = sys('B', 3);
  WeylElt w0 = weyl::longest_element(b3);
  for (int i = 0; i < 3; ++i)
    for (const auto& x : cells::right_cell(b3, i).elements)
      CHECK(weyl::length(weyl::multiply(w0, x)) == weyl::length(w0) - weyl::length(x));
}

TEST_CASE("classify") {
  const RootSystem& f4 = sys('F', 4);
  WeylElt s3 = weyl::simple(f4, 2);
  auto c = cells::classify(s3);
  CHECK(c.c_node == 2);
  CHECK(!c.w0c_node.has_value());

  WeylElt w0s3 = weyl::multiply(weyl::longest_element(f4), s3);
  auto d = cells::classify(w0s3);
  CHECK(d.w0c_node == 2);
  CHECK(!d.c_node.has_value());

  auto e = cells::classify(weyl::longest_element(f4));
  CHECK(!e.c_node.has_value());
  CHECK(!e.w0c_node.has_value());

  auto idc = cells::classify(weyl::identity(f4));
  CHECK(!idc.c_node.has_value());
  CHECK(!idc.w0c_node.has_value());

  // G2: s2 s1 lies in C_2 and in w0*C_1 simultaneously
  const RootSystem& g2 = sys('G', 2);
  auto g = cells::classify(weyl::from_word(g2, {1, 0}));
  CHECK(g.c_node == 1);
  CHECK(g.w0c_node == 0);
}
