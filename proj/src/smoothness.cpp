#include "weylcells/smoothness.h"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wc {
namespace smoothness {

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::typeA: return "typeA";
    case Engine::restricted_list: return "restricted_list";
    case Engine::bp: return "bp";
    case Engine::oracle: return "oracle";
  }
  return "?";
}

std::string Verdict::witness_str() const {
  std::ostringstream os;
  if (std::holds_alternative<std::monostate>(witness)) return "";
  if (const auto* a = std::get_if<TypeAWitness>(&witness)) {
    os << (a->pattern == patterns::TypeAPattern::p3412 ? "3412" : "4231") << " at positions";
    for (int p : a->positions) os << ' ' << p + 1;
    return os.str();
  }
  if (const auto* s = std::get_if<SignedWitness>(&witness)) {
    os << patterns::bar_notation(s->pattern) << " at positions";
    for (int p : s->positions) os << ' ' << p + 1;
    return os.str();
  }
  const auto& b = std::get<bp::BPWitness>(witness);
  os << "subsystem " << bp::stellar_name(b.label) << ", sigma = " << weyl::word_str(b.sigma_word);
  return os.str();
}

Verdict smooth_typeA(const RootSystem& rs, const WeylElt& w) {
  if (rs.type().family != 'A') throw std::invalid_argument("typeA engine requires type A");
  SignedSeq line = weyl::one_line(w);
  Verdict v;
  v.engine = Engine::typeA;
  for (auto p : {patterns::TypeAPattern::p3412, patterns::TypeAPattern::p4231}) {
    if (auto pos = patterns::find_typeA_pattern(line, p)) {
      v.smooth = false;
      v.witness = TypeAWitness{p, *pos};
      return v;
    }
  }
  return v;
}

Verdict smooth_restricted(const RootSystem& rs, const WeylElt& w) {
  char fam = rs.type().family;
  if (fam != 'B' && fam != 'C' && fam != 'D')
    throw std::invalid_argument("restricted engine requires type B, C or D");
  if (!cells::classify(w).w0c_node.has_value())
    throw std::invalid_argument("restricted engine requires an element of w0*C");
  SignedSeq line = weyl::one_line(w);
  Verdict v;
  v.engine = Engine::restricted_list;
  for (const auto& p : patterns::restricted_forbidden_list(fam, rs.rank())) {
    if (auto pos = patterns::find_signed_pattern(line, p)) {
      v.smooth = false;
      v.witness = SignedWitness{p, *pos};
      return v;
    }
  }
  return v;
}

Verdict smooth_via_bp(const RootSystem& rs, const WeylElt& w) {
  bp::BPVerdict bv = bp::smooth_bp(rs, w);
  Verdict v;
  v.engine = Engine::bp;
  v.smooth = bv.smooth;
  if (!bv.smooth) v.witness = bv.witness.front();
  return v;
}

Verdict is_smooth(const RootSystem& rs, const WeylElt& w) {
  char fam = rs.type().family;
  if (fam == 'A') {
#ifndef NDEBUG
    assert(smooth_typeA(rs, w).smooth == smooth_via_bp(rs, w).smooth &&
           "type A engine disagrees with the subsystem engine");
#endif
    return smooth_typeA(rs, w);
  }
  if ((fam == 'B' || fam == 'C' || fam == 'D') && cells::classify(w).w0c_node.has_value()) {
    Verdict v = smooth_restricted(rs, w);
#ifndef NDEBUG
    assert(v.smooth == smooth_via_bp(rs, w).smooth &&
           "restricted-list engine disagrees with the subsystem engine");
#endif
    return v;
  }
  return smooth_via_bp(rs, w);
}

PoincarePolynomial poincare(const RootSystem& rs, const WeylElt& w, size_t max_elements) {
  (void)rs;
  std::vector<WeylElt> interval = weyl::lower_interval(w, max_elements);
  PoincarePolynomial p;
  p.coefficients.assign(weyl::length(w) + 1, 0);
  for (const auto& v : interval) ++p.coefficients[weyl::length(v)];
  return p;
}

bool is_palindromic(const PoincarePolynomial& p) {
  size_t n = p.coefficients.size();
  for (size_t k = 0; k < n; ++k)
    if (p.coefficients[k] != p.coefficients[n - 1 - k]) return false;
  return true;
}

std::vector<WeylElt> smooth_elements_of_cell(const RootSystem& rs, int i) {
  std::vector<WeylElt> out;
  for (const auto& w : cells::w0_right_cell(rs, i).elements)
    if (is_smooth(rs, w).smooth) out.push_back(w);
  return out;
}

namespace {

std::vector<int> chain(int from, int to) {  // 1-based, inclusive, either direction
  std::vector<int> w;
  if (from <= to)
    for (int k = from; k <= to; ++k) w.push_back(k);
  else
    for (int k = from; k >= to; --k) w.push_back(k);
  return w;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

WeylElt w0_times(const RootSystem& rs, const std::vector<int>& word_1based) {
  std::vector<int> word;
  for (int x : word_1based) word.push_back(x - 1);
  return weyl::multiply(weyl::longest_element(rs), weyl::from_word(rs, word));
}

}  // namespace

std::vector<WeylElt> expected_smooth_cell(const RootSystem& rs, int i) {
  CartanType t = rs.type();
  int n = t.rank;
  int node = i + 1;
  std::vector<WeylElt> out;
  auto add = [&](const std::vector<int>& word) { out.push_back(w0_times(rs, word)); };
  auto full_cell = [&]() {
    for (const auto& w : cells::w0_right_cell(rs, i).elements) out.push_back(w);
  };

  switch (t.family) {
    case 'A':
      if (node == 1 || node == n) full_cell();
      else {
        add(chain(node, 1));
        add(chain(node, n));
      }
      break;
    case 'B':
      if (node == 1) {
        for (int j = 1; j <= n; ++j) {
          std::vector<int> suffix;
          for (int k = n - 1; k >= n - j + 1; --k) suffix.push_back(k);
          add(concat(chain(1, n), suffix));
        }
      } else if (node == n) {
        add(chain(n, 1));
      } else {
        add(concat(chain(node, n), chain(n - 1, 1)));
      }
      break;
    case 'C':
      if (node == 1) {
        full_cell();
      } else if (node == n) {
        add(chain(n, 1));
      } else {
        add(chain(node, 1));
        add(concat(chain(node, n), chain(n - 1, 1)));
      }
      break;
    case 'D':
      if (n < 4) throw std::invalid_argument("closed-form smooth sets start at D4");
      if (node == 1) {
        add(concat(chain(1, n - 2), {n - 1}));
        add(concat(chain(1, n - 2), {n}));
      } else if (node <= n - 2) {
        // empty
      } else if (n == 4) {
        if (node == 3) {
          add({3, 2, 1});
          add({3, 2, 4});
        } else {
          add({4, 2, 1});
          add({4, 2, 3});
        }
      } else if (node == n - 1) {
        add(chain(n - 1, 1));
      } else {
        add(concat({n}, chain(n - 2, 1)));
      }
      break;
    case 'E':
    case 'F':
      // empty
      break;
    case 'G':
      if (node == 1) {
        add({1, 2, 1, 2, 1});  // w0 * 12121 = s2
        add({1, 2, 1, 2});     // = s2 s1
        add({1, 2, 1});        // = s2 s1 s2
      } else {
        add({2, 1, 2, 1, 2});  // = s1
        add({2, 1, 2, 1});     // = s1 s2
      }
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NodeReport> verify_smcell(const RootSystem& rs) {
  std::vector<NodeReport> out;
  for (int i = 0; i < rs.rank(); ++i) {
    NodeReport r;
    r.node = i;
    r.computed = smooth_elements_of_cell(rs, i);
    r.expected = expected_smooth_cell(rs, i);
    std::sort(r.computed.begin(), r.computed.end());
    std::sort(r.expected.begin(), r.expected.end());
    r.match = r.computed == r.expected;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace smoothness
}  // namespace wc
