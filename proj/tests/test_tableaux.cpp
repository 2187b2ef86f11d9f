#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "weylcells/cells.h"
#include "weylcells/tableaux.h"

using namespace wc;
using namespace wc::tableaux;

TEST_CASE("insertion fixtures") {
  auto [p1, q1] = rs_insert({1, 2, 3});
  CHECK(p1.rows == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(shape(p1) == std::vector<int>{3});

  auto [p2, q2] = rs_insert({3, 4, 2, 1});
  CHECK(p2.rows == std::vector<std::vector<int>>{{1, 4}, {2}, {3}});
  CHECK(shape(p2) == std::vector<int>{2, 1, 1});
  CHECK(shape(q2) == std::vector<int>{2, 1, 1});

  auto [p3, q3] = rs_insert({2, 1});
  CHECK(p3.rows == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(q3.rows == std::vector<std::vector<int>>{{1}, {2}});

  auto [p4, q4] = rs_insert({4, 3, 2, 1});
  CHECK(shape(p4) == std::vector<int>{1, 1, 1, 1});

  CHECK_THROWS_AS(rs_insert({1, 1}), std::invalid_argument);
}

TEST_CASE("P and Q are standard tableaux of equal shape") {
  std::mt19937 rng(3);
  std::vector<int> seq{1, 2, 3, 4, 5, 6, 7, 8};
  for (int t = 0; t < 100; ++t) {
    std::shuffle(seq.begin(), seq.end(), rng);
    auto [p, q] = rs_insert(seq);
    CHECK(is_standard_shape(p));
    CHECK(is_standard_shape(q));
    CHECK(shape(p) == shape(q));
    int cells = 0;
    for (int l : shape(p)) cells += l;
    CHECK(cells == static_cast<int>(seq.size()));
  }
}

TEST_CASE("reversal conjugates the shape") {
  std::mt19937 rng(5);
  std::vector<int> seq{1, 2, 3, 4, 5, 6, 7};
  auto conjugate = [](std::vector<int> s) {
    std::vector<int> c;
    for (int col = 0; !s.empty() && col < s[0]; ++col) {
      int cnt = 0;
      for (int l : s)
        if (l > col) ++cnt;
      c.push_back(cnt);
    }
    return c;
  };
  for (int t = 0; t < 50; ++t) {
    std::shuffle(seq.begin(), seq.end(), rng);
    std::vector<int> rev(seq.rbegin(), seq.rend());
    CHECK(shape(rs_insert(rev).first) == conjugate(shape(rs_insert(seq).first)));
  }
}

TEST_CASE("P is constant on each right cell of type A, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const RootSystem& rs = RootSystem::get(CartanType('A', n));
    for (int i = 0; i < n; ++i) {
      for (bool w0side : {false, true}) {
        auto cell = w0side ? cells::w0_right_cell(rs, i) : cells::right_cell(rs, i);
        Tableau first;
        bool have = false;
        for (const auto& w : cell.elements) {
          Tableau p = rs_insert(weyl::one_line(w)).first;
          if (!have) {
            first = p;
            have = true;
          } else {
            CAPTURE(n);
            CAPTURE(i);
            CAPTURE(w0side);
            CHECK(p == first);
          }
        }
      }
    }
  }
}

TEST_CASE("rendering") {
  auto [p, q] = rs_insert({3, 4, 2, 1});
  CHECK(render(p) == "1 4\n2\n3\n");
  (void)q;
}
