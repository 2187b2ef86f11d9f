#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylcells/cartan.h"
#include "weylcells/rational.h"

namespace wc {

// A root is an integer coordinate vector over the simple roots of a fixed
// ambient system. Valid roots are all-nonnegative or all-nonpositive.
using Coords = std::vector<int>;

bool all_nonnegative(const Coords& c);
bool all_nonpositive(const Coords& c);
Coords negate(const Coords& c);
int height(const Coords& c);

// Exact data for one simple root system: Cartan matrix, symmetrizer,
// positive roots in a fixed deterministic order (height, then lex), and the
// highest (short) roots. Immutable after build; all arithmetic is integral
// or rational, never floating point.
//
// Normalization: short roots have squared length 2, so (alpha_i, alpha_i)
// is 2, 4 or 6 and the symmetrizer d_i = (alpha_i,alpha_i)/2 lies in {1,2,3}.
class RootSystem {
 public:
  static RootSystem build(CartanType t);

  // Shared instance per type; lives for the program duration.
  static const RootSystem& get(CartanType t);

  CartanType type() const { return type_; }
  int rank() const { return n_; }

  // Cartan integer a(i,j) = <alpha_j, alpha_i^vee>, 0-based nodes.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  // d_i = (alpha_i,alpha_i)/2.
  int symmetrizer(int i) const { return sym_[i]; }

  int num_positive() const { return static_cast<int>(positive_.size()); }
  const Coords& positive(int k) const { return positive_[k]; }
  const std::vector<Coords>& positive_roots() const { return positive_; }

  // Index of a positive root in the fixed order, or -1 if not a positive root.
  int index_of(const Coords& c) const;
  bool is_root(const Coords& c) const;

  Coords simple_root(int i) const;

  // Bilinear form (a, b) = sum d_i * cartan(i,j) pieces; exact integer under
  // the normalization above.
  long long bilinear(const Coords& a, const Coords& b) const;
  // <b, a^vee> = 2(b,a)/(a,a); integral for roots a, b.
  int pair_int(const Coords& b, const Coords& a) const;

  // s_i(b), simple reflection on coordinates.
  Coords reflect_simple(int i, const Coords& b) const;
  // s_a(b) for arbitrary roots a, b of this system.
  Coords reflect(const Coords& a, const Coords& b) const;

  const Coords& highest_root() const { return highest_; }
  const Coords& highest_short_root() const { return highest_short_; }
  bool simply_laced() const { return type_.simply_laced(); }

  // (lambda, alpha^vee) for a weight given in fundamental-weight coordinates
  // (coordinate k is (lambda, alpha_k^vee)) and a root alpha of this system.
  Rat pairing(const std::vector<Rat>& lambda_fund, const Coords& alpha) const;

  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;
  RootSystem(RootSystem&&) = default;

 private:
  RootSystem() = default;

  CartanType type_;
  int n_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::vector<Coords> positive_;
  std::map<Coords, int> index_;
  Coords highest_;
  Coords highest_short_;
};

std::vector<std::vector<int>> cartan_matrix(CartanType t);

}  // namespace wc
