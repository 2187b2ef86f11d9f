#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weylcells/weyl.h"

namespace wc {
namespace cells {

// Number of reduced words of w, by recursion over right descents.
std::uint64_t count_reduced_words(const WeylElt& w);
bool has_unique_reduced_word(const WeylElt& w);

// The set C of elements (excluding the identity) with a unique reduced word,
// ordered by length then lexicographically by canonical word. Computed by
// breadth-first word extension: every prefix of a unique-word element again
// has a unique word, so the search tree is closed under truncation.
std::vector<WeylElt> enumerate_C(const RootSystem& rs);

enum class Side { C, w0C };

struct CellDescriptor {
  CartanType type;
  int node = 0;  // 0-based
  Side side = Side::C;
};

struct CellElements {
  CellDescriptor descriptor;
  std::vector<WeylElt> elements;             // ordered by length, then word
  std::vector<WeylElt> min_length_elements;  // argmin of length
  std::vector<WeylElt> max_length_elements;  // argmax of length
};

// The right cell C_i (0-based node), computed two ways: as the closed-form
// union of weak-order intervals and as the left-descent filter of C. The two
// routes must agree; a mismatch throws std::logic_error.
CellElements right_cell(const RootSystem& rs, int i);

// The translate w0 * C_i.
CellElements w0_right_cell(const RootSystem& rs, int i);

// Branch words (0-based letters) of the closed-form description of C_i:
// C_i is the union over branches b of { w : s_i <= w <= b in weak order }.
std::vector<std::vector<int>> cell_branch_words(CartanType t, int i);

struct Classification {
  std::optional<int> c_node;    // w in C_i
  std::optional<int> w0c_node;  // w in w0 C_i
};

Classification classify(const WeylElt& w);

}  // namespace cells
}  // namespace wc
