#include "weylcells/rootsys.h"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace wc {

CartanType parse_cartan_type(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.size() < 2) throw std::invalid_argument("cannot parse Cartan type: " + s);
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  int rank = 0;
  try {
    rank = std::stoi(t.substr(1));
  } catch (...) {
    throw std::invalid_argument("cannot parse Cartan type: " + s);
  }
  CartanType ct(fam, rank);
  if (!ct.valid()) throw std::invalid_argument("invalid Cartan type: " + s);
  return ct;
}

bool all_nonnegative(const Coords& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool all_nonpositive(const Coords& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
}

Coords negate(const Coords& c) {
  Coords r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = -c[i];
  return r;
}

int height(const Coords& c) {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

std::vector<std::vector<int>> cartan_matrix(CartanType t) {
  if (!t.valid()) throw std::invalid_argument("invalid Cartan type: " + t.str());
  int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);  // fork: nodes n-1, n both attached to n-2
      break;
    case 'E':
      // chain 1-3-4-5-6(-7-8), node 2 attached to node 4 (0-based: 1 on 3)
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      if (n >= 7) link(5, 6);
      if (n >= 8) link(6, 7);
      link(1, 3);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short, alpha_2 long
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

std::vector<int> symmetrizer_for(CartanType t) {
  int n = t.rank;
  std::vector<int> d(n, 1);
  switch (t.family) {
    case 'B':
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      d[n - 1] = 2;
      break;
    case 'F':
      d[0] = d[1] = 2;
      break;
    case 'G':
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

RootSystem RootSystem::build(CartanType t) {
  if (!t.valid()) throw std::invalid_argument("invalid Cartan type: " + t.str());
  RootSystem rs;
  rs.type_ = t;
  rs.n_ = t.rank;
  rs.cartan_ = cartan_matrix(t);
  rs.sym_ = symmetrizer_for(t);

  // Close the simple roots under simple reflections.
  std::set<Coords> all;
  std::vector<Coords> frontier;
  for (int i = 0; i < rs.n_; ++i) {
    Coords a(rs.n_, 0);
    a[i] = 1;
    all.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < rs.n_; ++i) {
        Coords r = rs.reflect_simple(i, b);
        if (all.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }

  for (const auto& r : all) {
    bool pos = all_nonnegative(r);
    bool neg = all_nonpositive(r);
    if (!pos && !neg)
      throw std::logic_error("root with mixed signs in closure of " + t.str());
    if (pos) rs.positive_.push_back(r);
  }
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Coords& a, const Coords& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (int k = 0; k < static_cast<int>(rs.positive_.size()); ++k)
    rs.index_[rs.positive_[k]] = k;

  rs.highest_ = rs.positive_.back();
  long long minsq = -1;
  for (const auto& r : rs.positive_) {
    long long sq = rs.bilinear(r, r);
    if (minsq < 0 || sq < minsq) minsq = sq;
  }
  if (minsq != 2) throw std::logic_error("short root normalization broken in " + t.str());
  for (const auto& r : rs.positive_)
    if (rs.bilinear(r, r) == minsq) rs.highest_short_ = r;  // order is by height

  return rs;
}

const RootSystem& RootSystem::get(CartanType t) {
  static std::mutex mu;
  static std::map<CartanType, std::unique_ptr<RootSystem>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(t);
  if (it == registry.end())
    it = registry.emplace(t, std::make_unique<RootSystem>(build(t))).first;
  return *it->second;
}

int RootSystem::index_of(const Coords& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Coords& c) const {
  if (index_of(c) >= 0) return true;
  return index_of(negate(c)) >= 0;
}

Coords RootSystem::simple_root(int i) const {
  Coords a(n_, 0);
  a[i] = 1;
  return a;
}

long long RootSystem::bilinear(const Coords& a, const Coords& b) const {
  // (a,b) = sum_{i,j} a_i b_j d_i cartan(i,j)
  long long s = 0;
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      s += static_cast<long long>(a[i]) * b[j] * sym_[i] * cartan_[i][j];
    }
  }
  return s;
}

int RootSystem::pair_int(const Coords& b, const Coords& a) const {
  long long num = 2 * bilinear(b, a);
  long long den = bilinear(a, a);
  if (den == 0 || num % den != 0)
    throw std::logic_error("non-integral root pairing");
  return static_cast<int>(num / den);
}

Coords RootSystem::reflect_simple(int i, const Coords& b) const {
  // s_i(b) = b - <b, alpha_i^vee> alpha_i, and <b, alpha_i^vee> = (A b)_i.
  int c = 0;
  for (int j = 0; j < n_; ++j) c += cartan_[i][j] * b[j];
  Coords r = b;
  r[i] -= c;
  return r;
}

Coords RootSystem::reflect(const Coords& a, const Coords& b) const {
  if (!is_root(a) || !is_root(b)) throw std::invalid_argument("reflect: not a root");
  int c = pair_int(b, a);
  Coords r = b;
  for (int j = 0; j < n_; ++j) r[j] -= c * a[j];
  return r;
}

Rat RootSystem::pairing(const std::vector<Rat>& lambda_fund, const Coords& alpha) const {
  if (!is_root(alpha)) throw std::invalid_argument("pairing: not a root");
  // (lambda, alpha^vee) = sum_j g_j d_j lambda_j / d_alpha for alpha = sum g_j alpha_j.
  Rat num(0);
  for (int j = 0; j < n_; ++j)
    if (alpha[j] != 0) num = num + Rat(alpha[j]) * Rat(sym_[j]) * lambda_fund[j];
  Rat d_alpha(bilinear(alpha, alpha), 2);
  return num / d_alpha;
}

}  // namespace wc
