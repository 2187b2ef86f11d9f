#include "weylcells/patterns.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace wc {
namespace patterns {

SignedSeq fl(const SignedSeq& seq) {
  std::vector<int> abs_sorted;
  for (int v : seq) {
    if (v == 0) throw std::invalid_argument("fl: zero entry");
    abs_sorted.push_back(std::abs(v));
  }
  std::sort(abs_sorted.begin(), abs_sorted.end());
  for (size_t i = 0; i + 1 < abs_sorted.size(); ++i)
    if (abs_sorted[i] == abs_sorted[i + 1])
      throw std::invalid_argument("fl: repeated absolute value");
  SignedSeq out(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    int r = static_cast<int>(std::lower_bound(abs_sorted.begin(), abs_sorted.end(),
                                              std::abs(seq[i])) -
                             abs_sorted.begin()) +
            1;
    out[i] = seq[i] < 0 ? -r : r;
  }
  return out;
}

bool is_signed_pattern(const SignedSeq& p) { return !p.empty() && fl(p) == p; }

namespace {

bool subsequence_matches(const SignedSeq& seq, const std::vector<int>& pos, const SignedSeq& p) {
  size_t k = p.size();
  for (size_t i = 0; i < k; ++i)
    if ((seq[pos[i]] < 0) != (p[i] < 0)) return false;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if ((std::abs(seq[pos[i]]) < std::abs(seq[pos[j]])) != (std::abs(p[i]) < std::abs(p[j])))
        return false;
  return true;
}

bool search(const SignedSeq& seq, const SignedSeq& p, size_t from, std::vector<int>& pos) {
  if (pos.size() == p.size()) return subsequence_matches(seq, pos, p);
  for (size_t i = from; i + (p.size() - pos.size()) <= seq.size(); ++i) {
    pos.push_back(static_cast<int>(i));
    // prune: sign must match at this slot
    if ((seq[i] < 0) == (p[pos.size() - 1] < 0) && search(seq, p, i + 1, pos)) return true;
    pos.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_signed_pattern(const SignedSeq& seq, const SignedSeq& p) {
  if (!is_signed_pattern(p)) throw std::invalid_argument("find_signed_pattern: not a pattern");
  if (p.size() > seq.size()) return std::nullopt;
  std::vector<int> pos;
  if (search(seq, p, 0, pos)) return pos;
  return std::nullopt;
}

bool contains_signed_pattern(const SignedSeq& seq, const SignedSeq& p) {
  return find_signed_pattern(seq, p).has_value();
}

std::optional<std::vector<int>> find_typeA_pattern(const SignedSeq& w, TypeAPattern p) {
  int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          bool hit = p == TypeAPattern::p3412
                         ? (w[k] < w[l] && w[l] < w[i] && w[i] < w[j])
                         : (w[l] < w[j] && w[j] < w[k] && w[k] < w[i]);
          if (hit) return std::vector<int>{i, j, k, l};
        }
  return std::nullopt;
}

bool contains_typeA_pattern(const SignedSeq& perm, TypeAPattern p) {
  return find_typeA_pattern(perm, p).has_value();
}

std::vector<SignedSeq> restricted_forbidden_list(char family, int rank) {
  switch (family) {
    case 'B':
      return {{-1, 2, -3}, {1, -2, -3}, {1, -3, -2},  {-2, 1, -3},       {2, -1, -3}, {2, -3, -1},
              {-3, 1, -2}, {-3, -2, 1}, {-3, 2, -1},  {-3, -4, -1, -2},  {-2, -1}};
    case 'C':
      return {{-1, 2, -3}, {-2, -1, -3}, {-2, 1, -3}, {2, -1, -3},       {2, -3, -1}, {-3, -2, -1},
              {-3, -2, 1}, {-3, 2, -1},  {3, -2, -1}, {-3, -4, -1, -2},  {1, -2}};
    case 'D':
      if (rank % 2 == 0)
        return {{-1, -3, -2},   {2, 1, -3, -4}, {-2, -1, -3},     {2, -3, 1, -4},
                {-2, -4, 3, 1}, {3, 1, -2, -4}, {3, -2, 1, -4},   {-3, -2, -1},
                {3, -2, -4, 1}, {-3, -4, -1, -2}, {3, -4, 1, -2}};
      return {{-1, 2, -3},     {1, -3, -2},    {-2, -1, -3},     {-2, 1, -3, -4},
              {2, 1, -3, -4},  {2, -1, -3, -4}, {-2, 4, -3, -1}, {3, -1, -2, -4},
              {3, 1, -2, -4},  {3, -4, -1, -2}};
    default:
      throw std::invalid_argument("restricted list defined for families B, C, D only");
  }
}

std::string bar_notation(const SignedSeq& p) {
  static const char* overline = "\xCC\x85";  // U+0305 COMBINING OVERLINE
  std::string out;
  for (int v : p) {
    out += std::to_string(std::abs(v));
    if (v < 0) out += overline;
  }
  return out;
}

}  // namespace patterns
}  // namespace wc
