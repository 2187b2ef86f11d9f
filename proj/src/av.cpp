#include "weylcells/av.h"

#include <algorithm>
#include <stdexcept>

namespace wc {
namespace av {

Weight rho(const RootSystem& rs) { return Weight(rs.rank(), Rat(1)); }

Weight weyl_on_weight(const WeylElt& w, const Weight& lambda) {
  const RootSystem& rs = w.rs();
  int n = rs.rank();
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("weyl_on_weight: wrong coordinate count");
  // w(lambda) applies the word letters right to left; each simple reflection
  // acts by (s_i mu)_k = mu_k - mu_i * a(k,i).
  std::vector<int> word = weyl::canonical_word(w);
  Weight mu = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    Rat mi = mu[i];
    if (mi == Rat(0)) continue;
    for (int k = 0; k < n; ++k) mu[k] = mu[k] - mi * Rat(rs.cartan(k, i));
  }
  return mu;
}

std::set<int> I_lambda(const RootSystem& rs, const WeylElt& w) {
  Weight mu = weyl_on_weight(w, rho(rs));
  std::set<int> out;
  for (int k = 0; k < rs.rank(); ++k) {
    Rat v = -mu[k];
    if (v.is_positive_integer()) out.insert(k);
  }
  return out;
}

bool is_dominant_for(const RootSystem& rs, const Weight& lambda, const std::set<int>& J) {
  for (int k : J) {
    if (k < 0 || k >= rs.rank()) throw std::invalid_argument("is_dominant_for: bad node");
    if (!lambda[k].is_positive_integer()) return false;
  }
  return true;
}

std::vector<int> representative_branch(CartanType t, int i) {
  auto branches = cells::cell_branch_words(t, i);
  size_t best_len = 0;
  for (const auto& b : branches) best_len = std::max(best_len, b.size());
  std::vector<std::vector<int>> longest;
  for (const auto& b : branches)
    if (b.size() == best_len) longest.push_back(b);
  if (longest.size() == 1) return longest.front();

  // Tie-break matching the per-type case analyses: types A and E keep the
  // branch running toward the last chain node, B/C keep the descending
  // branch, D prefers the branch through node n-1, then the descending one.
  auto last_is = [&](int letter_1based) {
    for (const auto& b : longest)
      if (b.back() == letter_1based - 1) return b;
    return std::vector<int>();
  };
  switch (t.family) {
    case 'A':
    case 'E': {
      auto best = longest.front();
      for (const auto& b : longest)
        if (b.back() > best.back()) best = b;
      return best;
    }
    case 'B':
    case 'C': {
      auto b = last_is(1);
      if (!b.empty()) return b;
      break;
    }
    case 'D': {
      for (int pref : {t.rank - 1, 1, t.rank}) {
        auto b = last_is(pref);
        if (!b.empty()) return b;
      }
      break;
    }
    default:
      break;
  }
  return longest.front();
}

AVResult av_representative(const RootSystem& rs, const WeylElt& w) {
  cells::Classification cls = cells::classify(w);
  if (!cls.w0c_node.has_value())
    throw std::invalid_argument("not integral minimal: element is not in w0*C");
  int i = *cls.w0c_node;

  cells::CellElements cell = cells::w0_right_cell(rs, i);
  AVResult out;
  out.node = i;
  out.minimal_elements = cell.min_length_elements;

  std::vector<int> branch = representative_branch(rs.type(), i);
  WeylElt rep = weyl::multiply(weyl::longest_element(rs), weyl::from_word(rs, branch));
  if (std::find(out.minimal_elements.begin(), out.minimal_elements.end(), rep) ==
      out.minimal_elements.end())
    throw std::logic_error("av_representative: closed-form representative is not length-minimal");
  out.representative_min = rep;

  if (rs.simply_laced()) {
    WeylElt wmax = weyl::multiply(weyl::longest_element(rs), weyl::simple(rs, i));
    if (cell.max_length_elements.size() != 1 || cell.max_length_elements.front() != wmax)
      throw std::logic_error("av_representative: w0*s_i is not the unique longest element");
    out.representative_max = wmax;
  }
  return out;
}

}  // namespace av
}  // namespace wc
