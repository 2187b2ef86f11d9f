#pragma once

#include <string>
#include <vector>

#include "weylcells/weyl.h"

namespace wc {
namespace bp {

// The stellar types: root systems whose Dynkin diagram is a star, other than
// A1 and A2. Their node numbering follows the ambient conventions (B2/B3
// short root at the last node, C3 long root at the last node, G2 short root
// at node 1, D4 fork at nodes 3 and 4).
enum class StellarType { B2, G2, A3, B3, C3, D4 };

CartanType stellar_cartan_type(StellarType t);
const char* stellar_name(StellarType t);
const RootSystem& stellar_system(StellarType t);

// A stellar root subsystem Delta of the ambient system: base is the simple
// system of Delta+ = Delta cap Phi+, ordered by the standard node numbering
// of the stellar type; positive_idx indexes Delta+ in the ambient
// positive-root order.
struct Subsystem {
  StellarType label;
  std::vector<Coords> base;
  std::vector<int> positive_idx;
};

// All stellar root subsystems of the ambient system, deduplicated by root
// set. The result is computed once per Cartan type and cached.
const std::vector<Subsystem>& stellar_subsystems(const RootSystem& rs);

// The flattening f_Delta(w): the unique sigma in W(Delta) whose inversion set
// is Phi_w cap Delta+, returned as a reduced word (0-based) in the standard
// generators of the stellar type.
std::vector<int> flatten(const RootSystem& rs, const WeylElt& w, const Subsystem& sub);

// Elements sigma of W(stellar type) whose pattern makes a Schubert variety
// singular, closed under diagram automorphisms of the stellar type.
const std::vector<WeylElt>& forbidden_elements(StellarType t);

struct BPWitness {
  StellarType label;
  std::vector<Coords> base;
  std::vector<int> sigma_word;
};

struct BPVerdict {
  bool smooth = true;
  std::vector<BPWitness> witness;  // one entry when smooth is false
};

// Smoothness by the stellar-subsystem criterion; valid in every type.
BPVerdict smooth_bp(const RootSystem& rs, const WeylElt& w);

}  // namespace bp
}  // namespace wc
