#include "weylcells/cells.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wc {
namespace cells {

namespace {

std::uint64_t count_rec(const WeylElt& w,
                        std::unordered_map<WeylElt, std::uint64_t, WeylElt::Hash>& memo) {
  if (w.is_identity()) return 1;
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (int s : weyl::right_descents(w))
    total += count_rec(weyl::multiply(w, weyl::simple(w.rs(), s)), memo);
  memo[w] = total;
  return total;
}

bool elt_order(const WeylElt& a, const WeylElt& b) {
  int la = weyl::length(a), lb = weyl::length(b);
  if (la != lb) return la < lb;
  return weyl::canonical_word(a) < weyl::canonical_word(b);
}

void sort_elements(std::vector<WeylElt>& v) { std::sort(v.begin(), v.end(), elt_order); }

CellElements make_cell(CellDescriptor d, std::vector<WeylElt> elements) {
  sort_elements(elements);
  CellElements out;
  out.descriptor = d;
  out.elements = std::move(elements);
  int lo = -1, hi = -1;
  for (const auto& w : out.elements) {
    int l = weyl::length(w);
    if (lo < 0 || l < lo) lo = l;
    if (l > hi) hi = l;
  }
  for (const auto& w : out.elements) {
    int l = weyl::length(w);
    if (l == lo) out.min_length_elements.push_back(w);
    if (l == hi) out.max_length_elements.push_back(w);
  }
  return out;
}

}  // namespace

std::uint64_t count_reduced_words(const WeylElt& w) {
  std::unordered_map<WeylElt, std::uint64_t, WeylElt::Hash> memo;
  return count_rec(w, memo);
}

bool has_unique_reduced_word(const WeylElt& w) {
  return !w.is_identity() && count_reduced_words(w) == 1;
}

std::vector<WeylElt> enumerate_C(const RootSystem& rs) {
  std::vector<WeylElt> out;
  std::unordered_set<WeylElt, WeylElt::Hash> seen;
  std::vector<WeylElt> frontier;
  std::unordered_map<WeylElt, std::uint64_t, WeylElt::Hash> memo;
  for (int i = 0; i < rs.rank(); ++i) {
    WeylElt s = weyl::simple(rs, i);
    if (seen.insert(s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier) {
      out.push_back(w);
      int lw = weyl::length(w);
      for (int i = 0; i < rs.rank(); ++i) {
        WeylElt ws = weyl::multiply(w, weyl::simple(rs, i));
        if (weyl::length(ws) <= lw) continue;
        if (seen.count(ws)) continue;
        if (count_rec(ws, memo) == 1) {
          seen.insert(ws);
          next.push_back(ws);
        }
      }
    }
    frontier = std::move(next);
  }
  sort_elements(out);
  return out;
}

std::vector<std::vector<int>> cell_branch_words(CartanType t, int i) {
  int n = t.rank;
  int node = i + 1;  // 1-based for the tables below
  std::vector<std::vector<int>> branches;
  auto add = [&](std::vector<int> word_1based) {
    for (int& x : word_1based) --x;
    branches.push_back(std::move(word_1based));
  };
  auto chain = [](int from, int to) {
    std::vector<int> w;
    if (from <= to)
      for (int k = from; k <= to; ++k) w.push_back(k);
    else
      for (int k = from; k >= to; --k) w.push_back(k);
    return w;
  };
  auto concat = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  switch (t.family) {
    case 'A':
      add(chain(node, n));
      add(chain(node, 1));
      break;
    case 'B':
    case 'C':
      if (node <= n - 1) {
        add(chain(node, 1));
        add(concat(chain(node, n), chain(n - 1, 1)));
      } else {
        add(chain(n, 1));
        add({n, n - 1, n});
      }
      break;
    case 'D':
      if (node <= n - 2) {
        add(concat(chain(node, n - 2), {n - 1}));
        add(concat(chain(node, n - 2), {n}));
        add(chain(node, 1));
      } else if (node == n - 1) {
        add(chain(n - 1, 1));
        add({n - 1, n - 2, n});
      } else {
        add(concat({n}, chain(n - 2, 1)));
        add({n, n - 2, n - 1});
      }
      break;
    case 'E': {
      // Branch tables for E6/E7/E8; node 2 hangs off node 4.
      auto up = [&](int from) { return chain(from, n); };  // along 5-6-7-8
      switch (node) {
        case 1:
          add(concat({1, 3, 4}, up(5)));
          add({1, 3, 4, 2});
          break;
        case 2:
          add({2, 4, 3, 1});
          add(concat({2, 4}, up(5)));
          break;
        case 3:
          add({3, 1});
          add(concat({3, 4}, up(5)));
          add({3, 4, 2});
          break;
        case 4:
          add({4, 3, 1});
          add(concat({4}, up(5)));
          add({4, 2});
          break;
        case 5:
          add({5, 4, 3, 1});
          add({5, 4, 2});
          add(concat({5}, up(6)));
          break;
        case 6:
          if (n >= 7) add(concat({6}, up(7)));
          add({6, 5, 4, 3, 1});
          add({6, 5, 4, 2});
          break;
        case 7:
          add({7, 6, 5, 4, 3, 1});
          add({7, 6, 5, 4, 2});
          if (n >= 8) add({7, 8});
          break;
        case 8:
          add({8, 7, 6, 5, 4, 3, 1});
          add({8, 7, 6, 5, 4, 2});
          break;
        default:
          throw std::invalid_argument("bad node");
      }
      break;
    }
    case 'F':
      switch (node) {
        case 1:
          add({1, 2, 3, 4});
          add({1, 2, 3, 2, 1});
          break;
        case 2:
          add({2, 1});
          add({2, 3, 4});
          add({2, 3, 2, 1});
          break;
        case 3:
          add({3, 4});
          add({3, 2, 1});
          add({3, 2, 3, 4});
          break;
        case 4:
          add({4, 3, 2, 1});
          add({4, 3, 2, 3, 4});
          break;
        default:
          throw std::invalid_argument("bad node");
      }
      break;
    case 'G':
      if (node == 1)
        add({1, 2, 1, 2, 1});
      else
        add({2, 1, 2, 1, 2});
      break;
  }
  return branches;
}

CellElements right_cell(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("right_cell: node out of range");

  // Route (a): nonempty prefixes of the closed-form branch words. Each branch
  // bound has a unique reduced word, so its weak-order lower set is exactly
  // the prefix set.
  std::set<WeylElt> closed_form;
  for (const auto& b : cell_branch_words(rs.type(), i)) {
    WeylElt bound = weyl::from_word(rs, b);
    if (weyl::length(bound) != static_cast<int>(b.size()))
      throw std::logic_error("right_cell: branch word is not reduced");
    if (!has_unique_reduced_word(bound))
      throw std::logic_error("right_cell: branch bound has several reduced words");
    WeylElt w = weyl::identity(rs);
    for (int s : b) {
      w = weyl::multiply(w, weyl::simple(rs, s));
      closed_form.insert(w);
    }
  }

  // Route (b): left-descent filter on the unique-reduced-word cell.
  std::vector<WeylElt> filtered;
  for (const auto& w : enumerate_C(rs))
    if (weyl::left_descents(w) == std::set<int>{i}) filtered.push_back(w);

  std::set<WeylElt> filtered_set(filtered.begin(), filtered.end());
  if (filtered_set != closed_form)
    throw std::logic_error("right_cell: closed form and descent filter disagree for " +
                           rs.type().str() + " node " + std::to_string(i + 1));

  return make_cell({rs.type(), i, Side::C}, std::move(filtered));
}

CellElements w0_right_cell(const RootSystem& rs, int i) {
  CellElements base = right_cell(rs, i);
  WeylElt w0 = weyl::longest_element(rs);
  std::vector<WeylElt> translated;
  int lw0 = weyl::length(w0);
  for (const auto& x : base.elements) {
    WeylElt w0x = weyl::multiply(w0, x);
    if (weyl::length(w0x) != lw0 - weyl::length(x))
      throw std::logic_error("w0_right_cell: length did not translate");
    translated.push_back(w0x);
  }
  return make_cell({rs.type(), i, Side::w0C}, std::move(translated));
}

Classification classify(const WeylElt& w) {
  Classification out;
  if (has_unique_reduced_word(w)) {
    auto ld = weyl::left_descents(w);
    if (ld.size() != 1) throw std::logic_error("classify: unique-word element with bad descent set");
    out.c_node = *ld.begin();
  }
  WeylElt u = weyl::multiply(weyl::longest_element(w.rs()), w);
  if (has_unique_reduced_word(u)) {
    auto ld = weyl::left_descents(u);
    if (ld.size() != 1) throw std::logic_error("classify: unique-word element with bad descent set");
    out.w0c_node = *ld.begin();
  }
  return out;
}

}  // namespace cells
}  // namespace wc
