#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylcells/rootsys.h"

namespace wc {

// Bitset over the ambient system's positive-root order; bit k set means the
// k-th positive root lies in Phi_w. Large enough for E8 (120 positive roots).
using InversionBits = std::bitset<128>;

// One-line notation entries: nonzero signed integers with distinct absolute
// values. Classical types only.
using SignedSeq = std::vector<int>;

// A Weyl group element, represented by its integer matrix action on
// simple-root coordinates. Equality, hashing and ordering use the matrix, so
// two elements compare equal exactly when they are equal in the group.
class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(const RootSystem* rs, std::vector<int> mat) : rs_(rs), m_(std::move(mat)) {}

  const RootSystem& rs() const { return *rs_; }
  const RootSystem* rs_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }

  int at(int i, int j) const { return m_[i * rank() + j]; }
  const std::vector<int>& matrix() const { return m_; }

  // Image of a coordinate vector under the element's action.
  Coords apply(const Coords& c) const;

  bool is_identity() const;

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.rs_ == b.rs_ && a.m_ == b.m_;
  }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.m_ < b.m_; }

  struct Hash {
    size_t operator()(const WeylElt& w) const {
      size_t h = 1469598103934665603ull;
      for (int x : w.m_) {
        h ^= static_cast<size_t>(x) + 0x9e3779b9;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<int> m_;
};

namespace weyl {

WeylElt identity(const RootSystem& rs);
WeylElt simple(const RootSystem& rs, int i);  // 0-based node

// Product of simple reflections for a word of 0-based letters. The word need
// not be reduced.
WeylElt from_word(const RootSystem& rs, const std::vector<int>& word);

WeylElt multiply(const WeylElt& a, const WeylElt& b);
WeylElt inverse(const WeylElt& w);

InversionBits inversion_set(const WeylElt& w);
int length(const WeylElt& w);

// Recovers a reduced word (0-based letters) from an inversion set by peeling
// simple roots, lowest node first; throws std::invalid_argument if the set is
// not an inversion set. Applied to inversion_set(w) this gives the canonical
// reduced word of w.
std::vector<int> word_from_inversions(const RootSystem& rs, InversionBits bits);
std::vector<int> canonical_word(const WeylElt& w);

std::set<int> left_descents(const WeylElt& w);
std::set<int> right_descents(const WeylElt& w);

WeylElt longest_element(const RootSystem& rs);

bool bruhat_leq(const WeylElt& v, const WeylElt& w);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All v <= w in Bruhat order; throws BudgetExceeded if the interval would
// exceed max_elements.
std::vector<WeylElt> lower_interval(const WeylElt& w, size_t max_elements = 200000);

// Full group enumeration (intended for desk-scale ranks).
std::vector<WeylElt> all_elements(const RootSystem& rs);

// One-line notation for classical types; see docs/conventions.md for the
// position rules. Type A_n uses n+1 entries, B/C/D_n use n entries.
SignedSeq one_line(const WeylElt& w);
WeylElt from_one_line(const RootSystem& rs, const SignedSeq& seq);

// Text I/O. Words print 1-based ("3 2 3 4"); one-line prints "(-2,-3,1)".
std::string word_str(const std::vector<int>& word);
std::string one_line_str(const SignedSeq& seq);
std::vector<int> parse_word(const RootSystem& rs, const std::string& text);
// Parses either syntax: parenthesized/signed input is one-line, otherwise a
// word in 1-based generator indices.
WeylElt parse_element(const RootSystem& rs, const std::string& text);

// Debug/property helper: inversion sets are exactly the biconvex subsets.
bool is_biconvex(const RootSystem& rs, const InversionBits& bits);

}  // namespace weyl
}  // namespace wc
