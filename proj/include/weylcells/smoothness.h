#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weylcells/bp.h"
#include "weylcells/cells.h"
#include "weylcells/patterns.h"

namespace wc {
namespace smoothness {

enum class Engine { typeA, restricted_list, bp, oracle };

const char* engine_name(Engine e);

struct TypeAWitness {
  patterns::TypeAPattern pattern;
  std::vector<int> positions;
};

struct SignedWitness {
  SignedSeq pattern;
  std::vector<int> positions;
};

using Witness = std::variant<std::monostate, TypeAWitness, SignedWitness, bp::BPWitness>;

struct Verdict {
  bool smooth = true;
  Engine engine = Engine::bp;
  Witness witness;  // populated exactly when smooth is false

  std::string witness_str() const;
};

// Engine dispatch: type A uses 3412/4231 avoidance, B/C/D elements of w0*C
// use the restricted signed-pattern lists, everything else the stellar
// subsystem test. In debug builds every applicable engine is evaluated and
// disagreement aborts.
Verdict is_smooth(const RootSystem& rs, const WeylElt& w);

// The individual engines, exposed for cross-validation.
Verdict smooth_typeA(const RootSystem& rs, const WeylElt& w);
// Requires w in w0*C (throws std::invalid_argument otherwise).
Verdict smooth_restricted(const RootSystem& rs, const WeylElt& w);
Verdict smooth_via_bp(const RootSystem& rs, const WeylElt& w);

// Poincare polynomial of the lower Bruhat interval: coefficient of t^k is
// the number of v <= w with l(v) = k.
struct PoincarePolynomial {
  std::vector<long long> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

PoincarePolynomial poincare(const RootSystem& rs, const WeylElt& w, size_t max_elements = 200000);
bool is_palindromic(const PoincarePolynomial& p);

// Smooth elements of the right cell w0*C_i (0-based node).
std::vector<WeylElt> smooth_elements_of_cell(const RootSystem& rs, int i);

struct NodeReport {
  int node = 0;  // 0-based
  std::vector<WeylElt> computed;
  std::vector<WeylElt> expected;
  bool match = false;
};

// Compares computed smooth sets S(w0*C_i) against the closed-form tables,
// node by node. Mismatches are report content, not exceptions.
std::vector<NodeReport> verify_smcell(const RootSystem& rs);

// The closed-form expectation for S(w0*C_i).
std::vector<WeylElt> expected_smooth_cell(const RootSystem& rs, int i);

}  // namespace smoothness
}  // namespace wc
