#include "doctest.h"
#include "weylcells/rootsys.h"

using namespace wc;

namespace {

int positive_count_formula(CartanType t) {
  int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("positive root counts match the classical formulas") {
  std::vector<CartanType> types;
  for (int n = 1; n <= 6; ++n) types.emplace_back('A', n);
  for (int n = 2; n <= 5; ++n) types.emplace_back('B', n);
  for (int n = 2; n <= 5; ++n) types.emplace_back('C', n);
  for (int n = 3; n <= 6; ++n) types.emplace_back('D', n);
  for (int n = 6; n <= 8; ++n) types.emplace_back('E', n);
  types.emplace_back('F', 4);
  types.emplace_back('G', 2);
  for (CartanType t : types) {
    const RootSystem& rs = RootSystem::get(t);
    CAPTURE(t.str());
    CHECK(rs.num_positive() == positive_count_formula(t));
  }
}

TEST_CASE("invalid ranks are rejected") {
  CHECK_THROWS_AS(RootSystem::build(CartanType('B', 1)), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(CartanType('D', 2)), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(CartanType('E', 5)), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(CartanType('F', 3)), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(CartanType('G', 3)), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("Q7"), std::invalid_argument);
  CHECK(parse_cartan_type("b3") == CartanType('B', 3));
}

TEST_CASE("positive roots are distinct nonnegative combinations, sorted by height then lex") {
  for (CartanType t : {CartanType('B', 3), CartanType('F', 4), CartanType('D', 4)}) {
    const RootSystem& rs = RootSystem::get(t);
    CAPTURE(t.str());
    for (int k = 0; k < rs.num_positive(); ++k) {
      CHECK(all_nonnegative(rs.positive(k)));
      if (k > 0) {
        int hp = height(rs.positive(k - 1)), hk = height(rs.positive(k));
        CHECK((hp < hk || (hp == hk && rs.positive(k - 1) < rs.positive(k))));
      }
    }
  }
}

TEST_CASE("root lengths are normalized to squared length 2, 4 or 6") {
  for (CartanType t : {CartanType('A', 3), CartanType('B', 3), CartanType('C', 3),
                       CartanType('F', 4), CartanType('G', 2)}) {
    const RootSystem& rs = RootSystem::get(t);
    CAPTURE(t.str());
    long long shortest = -1;
    for (const auto& r : rs.positive_roots()) {
      long long sq = rs.bilinear(r, r);
      CHECK((sq == 2 || sq == 4 || sq == 6));
      if (shortest < 0 || sq < shortest) shortest = sq;
    }
    CHECK(shortest == 2);
    for (int i = 0; i < rs.rank(); ++i) {
      Coords a = rs.simple_root(i);
      CHECK(rs.bilinear(a, a) == 2 * rs.symmetrizer(i));
    }
  }
}

TEST_CASE("reflection closure: reflecting any root by any root lands in the root set") {
  for (CartanType t : {CartanType('A', 3), CartanType('C', 3), CartanType('G', 2),
                       CartanType('D', 4)}) {
    const RootSystem& rs = RootSystem::get(t);
    CAPTURE(t.str());
    for (const auto& a : rs.positive_roots())
      for (const auto& b : rs.positive_roots()) CHECK(rs.is_root(rs.reflect(a, b)));
  }
}

TEST_CASE("pairing integrality on all pairs of roots") {
  const RootSystem& rs = RootSystem::get(CartanType('F', 4));
  for (const auto& a : rs.positive_roots())
    for (const auto& b : rs.positive_roots()) CHECK_NOTHROW(rs.pair_int(b, a));
}

TEST_CASE("highest short root equals highest root exactly in simply-laced types") {
  for (CartanType t : {CartanType('A', 4), CartanType('D', 5), CartanType('E', 6)}) {
    const RootSystem& rs = RootSystem::get(t);
    CHECK(rs.highest_short_root() == rs.highest_root());
  }
  for (CartanType t : {CartanType('B', 3), CartanType('C', 3), CartanType('F', 4),
                       CartanType('G', 2)}) {
    const RootSystem& rs = RootSystem::get(t);
    CHECK(rs.highest_short_root() != rs.highest_root());
  }
}

TEST_CASE("pairing against rho") {
  for (CartanType t : {CartanType('A', 2), CartanType('B', 3), CartanType('G', 2)}) {
    const RootSystem& rs = RootSystem::get(t);
    std::vector<Rat> rho(rs.rank(), Rat(1));
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(rs.pairing(rho, rs.simple_root(i)) == Rat(1));
      std::vector<Rat> rho_minus_ai = rho;
      // coordinates of rho - alpha_i: 1 - cartan(k, i)
      for (int k = 0; k < rs.rank(); ++k)
        rho_minus_ai[k] = Rat(1) - Rat(rs.cartan(k, i));
      CHECK(rs.pairing(rho_minus_ai, rs.simple_root(i)) == Rat(-1));
    }
  }
  // (rho, beta^vee) = 2 for the highest root of A2
  const RootSystem& a2 = RootSystem::get(CartanType('A', 2));
  std::vector<Rat> rho2(2, Rat(1));
  CHECK(a2.pairing(rho2, a2.highest_root()) == Rat(2));
}

TEST_CASE("simple reflection examples") {
  const RootSystem& a2 = RootSystem::get(CartanType('A', 2));
  Coords a1 = a2.simple_root(0), al2 = a2.simple_root(1);
  CHECK(a2.reflect(a1, a1) == negate(a1));
  CHECK(a2.reflect(a1, al2) == Coords{1, 1});

  // C2 with alpha_2 long: s_{alpha_2}(alpha_1) = alpha_1 + alpha_2
  const RootSystem& c2 = RootSystem::get(CartanType('C', 2));
  CHECK(c2.reflect(c2.simple_root(1), c2.simple_root(0)) == Coords{1, 1});
}

TEST_CASE("Cartan matrices carry the arrows fixed by the conventions") {
  const RootSystem& b3 = RootSystem::get(CartanType('B', 3));
  CHECK(b3.cartan(2, 1) == -2);  // alpha_3 short
  CHECK(b3.cartan(1, 2) == -1);
  const RootSystem& c3 = RootSystem::get(CartanType('C', 3));
  CHECK(c3.cartan(1, 2) == -2);  // alpha_3 long
  CHECK(c3.cartan(2, 1) == -1);
  const RootSystem& g2 = RootSystem::get(CartanType('G', 2));
  CHECK(g2.cartan(0, 1) == -3);  // alpha_1 short
  CHECK(g2.cartan(1, 0) == -1);
  const RootSystem& f4 = RootSystem::get(CartanType('F', 4));
  CHECK(f4.cartan(2, 1) == -2);  // alpha_1, alpha_2 long
  CHECK(f4.cartan(1, 2) == -1);
}
