#pragma once

#include <optional>
#include <set>
#include <vector>

#include "weylcells/cells.h"
#include "weylcells/rational.h"
#include "weylcells/weyl.h"

namespace wc {
namespace av {

// Weights live in fundamental-weight coordinates: coordinate k is
// (lambda, alpha_k^vee).
using Weight = std::vector<Rat>;

Weight rho(const RootSystem& rs);

// w(lambda) in fundamental coordinates.
Weight weyl_on_weight(const WeylElt& w, const Weight& lambda);

// I_lambda for lambda = -w*rho: the simple nodes alpha with
// (-w rho, alpha^vee) a positive integer. 0-based node indices.
std::set<int> I_lambda(const RootSystem& rs, const WeylElt& w);

// Is (lambda, alpha^vee) a positive integer for every alpha in J?
bool is_dominant_for(const RootSystem& rs, const Weight& lambda, const std::set<int>& J);

struct AVResult {
  int node = 0;  // 0-based i with w in w0*C_i
  WeylElt representative_min;
  std::vector<WeylElt> minimal_elements;       // all length-minimal elements of w0*C_i
  std::optional<WeylElt> representative_max;   // w0*s_i, simply-laced types only
  bool irreducible = true;
};

// The branch word (0-based) of C_i whose translate under w0 is the reported
// minimal-length representative of w0*C_i.
std::vector<int> representative_branch(CartanType t, int i);

// Associated-variety representative for an integral minimal element
// (throws std::invalid_argument when w is not in w0*C).
AVResult av_representative(const RootSystem& rs, const WeylElt& w);

}  // namespace av
}  // namespace wc
