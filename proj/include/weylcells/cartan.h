#pragma once

#include <string>

namespace wc {

// Simple Lie type: one of the families A..G with a rank.
// Node numbering conventions are fixed in docs/conventions.md:
//   A_n, B_n, C_n, F_4: chain 1-2-...-n, with the short roots at the
//     high-numbered end for B (alpha_n short) and the long root at the
//     high-numbered end for C (alpha_n long); F_4 has alpha_1, alpha_2 long.
//   D_n: chain 1-...-(n-2) with fork nodes n-1 and n attached to n-2.
//   E_r: chain 1-3-4-5-6(-7-8) with node 2 attached to node 4.
//   G_2: alpha_1 short, alpha_2 long.
struct CartanType {
  char family = 'A';  // 'A'..'G'
  int rank = 1;

  CartanType() = default;
  CartanType(char f, int r) : family(f), rank(r) {}

  bool valid() const {
    switch (family) {
      case 'A': return rank >= 1;
      case 'B': return rank >= 2;
      case 'C': return rank >= 2;
      case 'D': return rank >= 3;
      case 'E': return rank >= 6 && rank <= 8;
      case 'F': return rank == 4;
      case 'G': return rank == 2;
      default: return false;
    }
  }

  bool classical() const {
    return family == 'A' || family == 'B' || family == 'C' || family == 'D';
  }

  bool simply_laced() const {
    return family == 'A' || family == 'D' || family == 'E';
  }

  std::string str() const { return family + std::to_string(rank); }

  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const CartanType& a, const CartanType& b) { return !(a == b); }
  friend bool operator<(const CartanType& a, const CartanType& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
};

// Parses strings like "B3" or "b 3"; throws std::invalid_argument on garbage.
CartanType parse_cartan_type(const std::string& s);

}  // namespace wc
