#include "weylcells/weyl.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wc {

Coords WeylElt::apply(const Coords& c) const {
  int n = rank();
  Coords r(n, 0);
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j) * c[j];
    r[i] = s;
  }
  return r;
}

bool WeylElt::is_identity() const {
  int n = rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

namespace weyl {

WeylElt identity(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return WeylElt(&rs, std::move(m));
}

WeylElt simple(const RootSystem& rs, int i) {
  int n = rs.rank();
  if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
  // s_i on coordinates: row i gets e_i - (row i of Cartan matrix).
  std::vector<int> m(n * n, 0);
  for (int r = 0; r < n; ++r) m[r * n + r] = 1;
  for (int j = 0; j < n; ++j) m[i * n + j] -= rs.cartan(i, j);
  return WeylElt(&rs, std::move(m));
}

WeylElt multiply(const WeylElt& a, const WeylElt& b) {
  if (a.rs_ptr() != b.rs_ptr())
    throw std::invalid_argument("multiply: mismatched root systems");
  int n = a.rank();
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) m[i * n + j] += aik * b.at(k, j);
    }
  return WeylElt(a.rs_ptr(), std::move(m));
}

WeylElt from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt w = identity(rs);
  for (int i : word) w = multiply(w, simple(rs, i));
  return w;
}

InversionBits inversion_set(const WeylElt& w) {
  // Phi_w = { -w(beta) : beta > 0, w(beta) < 0 }.
  const RootSystem& rs = w.rs();
  InversionBits bits;
  for (int k = 0; k < rs.num_positive(); ++k) {
    Coords img = w.apply(rs.positive(k));
    if (all_nonpositive(img)) {
      int idx = rs.index_of(negate(img));
      if (idx < 0) throw std::logic_error("inversion_set: image is not a root");
      bits.set(idx);
    }
  }
  return bits;
}

int length(const WeylElt& w) { return static_cast<int>(inversion_set(w).count()); }

std::vector<int> word_from_inversions(const RootSystem& rs, InversionBits bits) {
  std::vector<Coords> set;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (bits.test(k)) set.push_back(rs.positive(k));

  std::vector<int> word;
  while (!set.empty()) {
    int node = -1;
    size_t pos = 0;
    for (size_t t = 0; t < set.size(); ++t) {
      if (height(set[t]) != 1) continue;
      int i = -1;
      for (int j = 0; j < rs.rank(); ++j)
        if (set[t][j] == 1) i = j;
      if (node == -1 || i < node) {
        node = i;
        pos = t;
      }
    }
    if (node < 0)
      throw std::invalid_argument("word_from_inversions: not an inversion set (no simple root to peel)");
    word.push_back(node);
    set.erase(set.begin() + static_cast<long>(pos));
    for (auto& r : set) {
      r = rs.reflect_simple(node, r);
      if (!all_nonnegative(r))
        throw std::invalid_argument("word_from_inversions: not an inversion set (peel left the cone)");
    }
  }
  return word;
}

std::vector<int> canonical_word(const WeylElt& w) {
  return word_from_inversions(w.rs(), inversion_set(w));
}

WeylElt inverse(const WeylElt& w) {
  std::vector<int> word = canonical_word(w);
  std::reverse(word.begin(), word.end());
  return from_word(w.rs(), word);
}

std::set<int> left_descents(const WeylElt& w) {
  // s_i is a left descent iff alpha_i lies in Phi_w.
  const RootSystem& rs = w.rs();
  InversionBits bits = inversion_set(w);
  std::set<int> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (bits.test(rs.index_of(rs.simple_root(i)))) out.insert(i);
  return out;
}

std::set<int> right_descents(const WeylElt& w) {
  // s_i is a right descent iff w(alpha_i) < 0.
  const RootSystem& rs = w.rs();
  std::set<int> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (all_nonpositive(w.apply(rs.simple_root(i)))) out.insert(i);
  return out;
}

WeylElt longest_element(const RootSystem& rs) {
  InversionBits bits;
  for (int k = 0; k < rs.num_positive(); ++k) bits.set(k);
  return from_word(rs, word_from_inversions(rs, bits));
}

bool bruhat_leq(const WeylElt& v, const WeylElt& w) {
  if (v.rs_ptr() != w.rs_ptr())
    throw std::invalid_argument("bruhat_leq: mismatched root systems");
  int lv = length(v), lw = length(w);
  if (lv > lw) return false;
  if (v == w) return true;
  if (lw == 0) return v.is_identity();
  // Lifting property along any right descent of w.
  int s = *right_descents(w).begin();
  WeylElt ws = multiply(w, simple(w.rs(), s));
  WeylElt vs = multiply(v, simple(v.rs(), s));
  if (length(vs) < lv) return bruhat_leq(vs, ws);
  return bruhat_leq(v, ws);
}

std::vector<WeylElt> lower_interval(const WeylElt& w, size_t max_elements) {
  // [e, xs] = [e, x] union [e, x]s when l(xs) = l(x)+1; apply along the
  // prefixes of the canonical reduced word of w.
  std::vector<int> word = canonical_word(w);
  std::unordered_set<WeylElt, WeylElt::Hash> interval;
  interval.insert(identity(w.rs()));
  for (int s : word) {
    std::unordered_set<WeylElt, WeylElt::Hash> next = interval;
    for (const auto& x : interval) {
      next.insert(multiply(x, simple(w.rs(), s)));
      if (next.size() > max_elements)
        throw BudgetExceeded("lower_interval: budget of " + std::to_string(max_elements) +
                             " elements exceeded");
    }
    interval = std::move(next);
  }
  std::vector<WeylElt> out(interval.begin(), interval.end());
  std::sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) {
    int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

std::vector<WeylElt> all_elements(const RootSystem& rs) {
  std::vector<WeylElt> out;
  std::unordered_set<WeylElt, WeylElt::Hash> seen;
  std::vector<WeylElt> frontier{identity(rs)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier) {
      out.push_back(w);
      for (int i = 0; i < rs.rank(); ++i) {
        WeylElt ws = multiply(w, simple(rs, i));
        if (seen.insert(ws).second) next.push_back(ws);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

namespace {

int one_line_size(const RootSystem& rs) {
  CartanType t = rs.type();
  if (!t.classical())
    throw std::invalid_argument("one-line notation is defined for classical types only");
  return t.family == 'A' ? t.rank + 1 : t.rank;
}

// Applies the right-multiplication rule for generator i (0-based) in place.
void apply_rule(CartanType t, int i, SignedSeq& seq) {
  int n = t.rank;
  if (t.family == 'A') {
    std::swap(seq[i], seq[i + 1]);
    return;
  }
  if (i <= n - 2) {
    // spec node i+1 swaps positions n-i-1, n-i (1-based), i.e. indices n-i-2, n-i-1
    std::swap(seq[n - i - 2], seq[n - i - 1]);
    return;
  }
  if (t.family == 'B' || t.family == 'C') {
    seq[0] = -seq[0];
    return;
  }
  // D: (a1, a2, ...) -> (-a2, -a1, ...)
  std::swap(seq[0], seq[1]);
  seq[0] = -seq[0];
  seq[1] = -seq[1];
}

// Euclidean coordinates of the simple roots matching the position rules; see
// docs/conventions.md. Entries are doubled so everything stays integral
// (type C needs e_1 = alpha_n / 2).
std::vector<Coords> euclid_basis_x2(const RootSystem& rs) {
  CartanType t = rs.type();
  int n = t.rank;
  std::vector<Coords> u;
  if (t.family == 'A') {
    for (int i = 0; i < n; ++i) {
      Coords v(n + 1, 0);
      v[i] = 2;
      v[i + 1] = -2;
      u.push_back(v);
    }
    return u;
  }
  for (int i = 0; i + 1 < n; ++i) {
    // alpha_{i+1} = e_{n-i} - e_{n-i-1} in 1-based Euclidean positions
    Coords v(n, 0);
    v[n - i - 1] = 2;
    v[n - i - 2] = -2;
    u.push_back(v);
  }
  Coords last(n, 0);
  if (t.family == 'B') last[0] = 2;
  if (t.family == 'C') last[0] = 4;
  if (t.family == 'D') {
    last[0] = 2;
    last[1] = 2;
  }
  u.push_back(last);
  return u;
}

}  // namespace

SignedSeq one_line(const WeylElt& w) {
  const RootSystem& rs = w.rs();
  int N = one_line_size(rs);
  SignedSeq seq(N);
  std::iota(seq.begin(), seq.end(), 1);
  for (int i : canonical_word(w)) apply_rule(rs.type(), i, seq);
  return seq;
}

WeylElt from_one_line(const RootSystem& rs, const SignedSeq& seq) {
  CartanType t = rs.type();
  int N = one_line_size(rs);
  if (static_cast<int>(seq.size()) != N)
    throw std::invalid_argument("one-line: expected " + std::to_string(N) + " entries");
  std::vector<bool> used(N, false);
  int negs = 0;
  for (int v : seq) {
    int a = v < 0 ? -v : v;
    if (v == 0 || a > N || used[a - 1])
      throw std::invalid_argument("one-line: entries must have distinct absolute values 1.." +
                                  std::to_string(N));
    used[a - 1] = true;
    if (v < 0) ++negs;
  }
  if (t.family == 'A' && negs > 0)
    throw std::invalid_argument("one-line: type A entries must be positive");
  if (t.family == 'D' && negs % 2 != 0)
    throw std::invalid_argument("one-line: type D requires an even number of sign changes");

  // The sequence determines the signed permutation matrix P of w^{-1} in the
  // Euclidean model: row p picks coordinate |seq_p| with sign(seq_p).
  auto apply_P = [&](const Coords& v_x2) {
    Coords r(N, 0);
    for (int p = 0; p < N; ++p) {
      int a = seq[p] < 0 ? -seq[p] : seq[p];
      r[p] = (seq[p] < 0 ? -1 : 1) * v_x2[a - 1];
    }
    return r;
  };

  std::vector<Coords> basis = euclid_basis_x2(rs);
  int n = rs.rank();
  std::vector<int> m(n * n, 0);
  for (int j = 0; j < n; ++j) {
    Coords img = apply_P(basis[j]);
    // Solve img = sum_i c_i * basis[i] exactly.
    if (t.family == 'A') {
      // alpha_i = e_i - e_{i+1}: coefficients are prefix sums.
      int run = 0;
      long long total = 0;
      for (int k = 0; k < N; ++k) total += img[k];
      if (total != 0) throw std::invalid_argument("one-line: not a type A permutation");
      for (int i = 0; i < n; ++i) {
        run += img[i];
        if (run % 2 != 0) throw std::invalid_argument("one-line: invalid sequence");
        m[i * n + j] = run / 2;
      }
    } else {
      // Gaussian elimination over the rationals on the doubled basis.
      std::vector<std::vector<Rat>> aug(N, std::vector<Rat>(n + 1));
      for (int r = 0; r < N; ++r) {
        for (int c = 0; c < n; ++c) aug[r][c] = Rat(basis[c][r]);
        aug[r][n] = Rat(img[r]);
      }
      int row = 0;
      std::vector<int> pivot_col(n, -1);
      for (int c = 0; c < n && row < N; ++c) {
        int pr = -1;
        for (int r = row; r < N; ++r)
          if (aug[r][c] != Rat(0)) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(aug[pr], aug[row]);
        Rat inv = Rat(1) / aug[row][c];
        for (int cc = c; cc <= n; ++cc) aug[row][cc] = aug[row][cc] * inv;
        for (int r = 0; r < N; ++r) {
          if (r == row || aug[r][c] == Rat(0)) continue;
          Rat f = aug[r][c];
          for (int cc = c; cc <= n; ++cc) aug[r][cc] = aug[r][cc] - f * aug[row][cc];
        }
        pivot_col[c] = row;
        ++row;
      }
      for (int c = 0; c < n; ++c) {
        if (pivot_col[c] < 0) throw std::logic_error("one-line: singular Euclidean basis");
        Rat val = aug[pivot_col[c]][n];
        if (!val.is_integer())
          throw std::invalid_argument("one-line: sequence is not a Weyl group element");
        m[c * n + j] = static_cast<int>(val.num);
      }
    }
  }

  WeylElt winv(&rs, std::move(m));
  // Sanity: the matrix must permute the root set.
  for (int i = 0; i < n; ++i)
    if (!rs.is_root(winv.apply(rs.simple_root(i))))
      throw std::invalid_argument("one-line: sequence is not a Weyl group element");
  return inverse(winv);
}

std::string word_str(const std::vector<int>& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << word[i] + 1;
  }
  return os.str();
}

std::string one_line_str(const SignedSeq& seq) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ',';
    os << seq[i];
  }
  os << ')';
  return os.str();
}

namespace {

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      out.push_back(std::stoi(cur));
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') {
      flush();
    } else {
      throw std::invalid_argument("cannot parse element: " + text);
    }
  }
  flush();
  return out;
}

}  // namespace

std::vector<int> parse_word(const RootSystem& rs, const std::string& text) {
  std::vector<int> letters = parse_ints(text);
  std::vector<int> word;
  for (int x : letters) {
    if (x < 1 || x > rs.rank())
      throw std::invalid_argument("word letter out of range 1.." + std::to_string(rs.rank()));
    word.push_back(x - 1);
  }
  return word;
}

WeylElt parse_element(const RootSystem& rs, const std::string& text) {
  bool has_paren = text.find('(') != std::string::npos;
  bool has_minus = text.find('-') != std::string::npos;
  std::vector<int> vals = parse_ints(text);
  if (vals.empty()) return identity(rs);
  bool word_shaped = !has_paren && !has_minus;
  for (int v : vals)
    if (v < 1 || v > rs.rank()) word_shaped = false;
  if (word_shaped) {
    std::vector<int> word;
    for (int v : vals) word.push_back(v - 1);
    return from_word(rs, word);
  }
  return from_one_line(rs, vals);
}

bool is_biconvex(const RootSystem& rs, const InversionBits& bits) {
  int m = rs.num_positive();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Coords sum(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) sum[j] = rs.positive(a)[j] + rs.positive(b)[j];
      int k = rs.index_of(sum);
      if (k < 0) continue;
      if (bits.test(a) && bits.test(b) && !bits.test(k)) return false;
      if (!bits.test(a) && !bits.test(b) && bits.test(k)) return false;
    }
  return true;
}

}  // namespace weyl
}  // namespace wc
