#include "weylcells/bp.h"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace wc {
namespace bp {

CartanType stellar_cartan_type(StellarType t) {
  switch (t) {
    case StellarType::B2: return CartanType('B', 2);
    case StellarType::G2: return CartanType('G', 2);
    case StellarType::A3: return CartanType('A', 3);
    case StellarType::B3: return CartanType('B', 3);
    case StellarType::C3: return CartanType('C', 3);
    case StellarType::D4: return CartanType('D', 4);
  }
  throw std::logic_error("bad stellar type");
}

const char* stellar_name(StellarType t) {
  switch (t) {
    case StellarType::B2: return "B2";
    case StellarType::G2: return "G2";
    case StellarType::A3: return "A3";
    case StellarType::B3: return "B3";
    case StellarType::C3: return "C3";
    case StellarType::D4: return "D4";
  }
  return "?";
}

const RootSystem& stellar_system(StellarType t) { return RootSystem::get(stellar_cartan_type(t)); }

namespace {

const StellarType kAllStellar[] = {StellarType::B2, StellarType::G2, StellarType::A3,
                                   StellarType::B3, StellarType::C3, StellarType::D4};

// Diagram automorphisms: node permutations preserving the Cartan matrix.
std::vector<std::vector<int>> cartan_automorphisms(const std::vector<std::vector<int>>& c) {
  int k = static_cast<int>(c.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j)
        if (c[perm[i]][perm[j]] != c[i][j]) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<int>> forbidden_words(StellarType t) {
  using W = std::vector<int>;
  switch (t) {
    case StellarType::B2:
      return {{1, 0, 1}};
    case StellarType::G2:
      // [s2] s1 s2 s1 [s2], and s1 s2 s1 s2 s1
      return {{0, 1, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0, 1}, {0, 1, 0, 1, 0}};
    case StellarType::A3:
      return {{1, 0, 2, 1}, {0, 1, 2, 1, 0}};
    case StellarType::B3: {
      std::vector<W> out = {{1, 0, 2, 1}};
      W head = {0, 1, 2, 1, 0};
      for (const W& tail : std::vector<W>{{}, {2}, {2, 1}, {1, 2}, {1, 2, 1}}) {
        W w = head;
        w.insert(w.end(), tail.begin(), tail.end());
        out.push_back(w);
      }
      return out;
    }
    case StellarType::C3: {
      std::vector<W> out;
      W core = {1, 0, 2, 1};
      for (bool pre : {false, true})
        for (bool post : {false, true}) {
          W w;
          if (pre) w.push_back(2);
          w.insert(w.end(), core.begin(), core.end());
          if (post) w.push_back(2);
          out.push_back(w);
        }
      out.push_back({2, 1, 0, 1, 2});
      out.push_back({0, 1, 2, 1, 0, 2, 1, 2});
      return out;
    }
    case StellarType::D4:
      return {{1, 0, 2, 3, 1}};
  }
  throw std::logic_error("bad stellar type");
}

size_t expected_forbidden_count(StellarType t) {
  switch (t) {
    case StellarType::B2: return 1;
    case StellarType::G2: return 5;
    case StellarType::A3: return 2;
    case StellarType::B3: return 6;
    case StellarType::C3: return 6;
    case StellarType::D4: return 1;
  }
  return 0;
}

}  // namespace

const std::vector<WeylElt>& forbidden_elements(StellarType t) {
  static std::mutex mu;
  static std::map<StellarType, std::vector<WeylElt>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;

  const RootSystem& rs = stellar_system(t);
  auto autos = cartan_automorphisms(cartan_matrix(stellar_cartan_type(t)));
  std::set<WeylElt> elems;
  for (const auto& word : forbidden_words(t)) {
    for (const auto& pi : autos) {
      std::vector<int> relabeled;
      for (int s : word) relabeled.push_back(pi[s]);
      elems.insert(weyl::from_word(rs, relabeled));
    }
  }
  std::vector<WeylElt> out(elems.begin(), elems.end());
  if (out.size() != expected_forbidden_count(t))
    throw std::logic_error(std::string("forbidden table for ") + stellar_name(t) +
                           " has wrong size after closure");
  return cache.emplace(t, std::move(out)).first->second;
}

namespace {

// Pairing table shared by the base searches over one ambient system.
struct PairTable {
  std::vector<std::vector<int>> val;  // val[a][b] = <beta_b, beta_a^vee>

  explicit PairTable(const RootSystem& rs) {
    int m = rs.num_positive();
    val.assign(m, std::vector<int>(m, 0));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) val[a][b] = rs.pair_int(rs.positive(b), rs.positive(a));
  }
};

// Backtracking search for ordered bases matching the stellar Cartan matrix.
// Nodes are placed so that each one is adjacent to an earlier one, which
// keeps the candidate lists to the neighbors of a placed root.
struct BaseSearch {
  const RootSystem& rs;
  const std::vector<std::vector<int>>& target;
  const PairTable& pairs;
  int k;
  std::vector<int> order;   // node placement order
  std::vector<int> chosen;  // chosen[node] = positive-root index
  std::vector<std::vector<int>>& results;

  BaseSearch(const RootSystem& r, const std::vector<std::vector<int>>& t, const PairTable& p,
             std::vector<std::vector<int>>& res)
      : rs(r), target(t), pairs(p), k(static_cast<int>(t.size())), results(res) {
    // Highest-degree node first, then grow along edges.
    std::vector<int> degree(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && target[i][j] != 0) ++degree[i];
    int start = 0;
    for (int i = 1; i < k; ++i)
      if (degree[i] > degree[start]) start = i;
    std::vector<bool> placed(k, false);
    order.push_back(start);
    placed[start] = true;
    while (static_cast<int>(order.size()) < k) {
      for (int i = 0; i < k; ++i) {
        if (placed[i]) continue;
        bool adjacent = false;
        for (int j : order)
          if (target[i][j] != 0) adjacent = true;
        if (adjacent) {
          order.push_back(i);
          placed[i] = true;
          break;
        }
      }
    }
  }

  void run() {
    chosen.assign(k, -1);
    place(0);
  }

  void place(int step) {
    if (step == k) {
      results.push_back(chosen);
      return;
    }
    int node = order[step];
    int m = rs.num_positive();
    // Restrict candidates to the neighbor list of an already placed adjacent
    // node when one exists.
    int anchor = -1;
    for (int s = 0; s < step; ++s)
      if (target[order[s]][node] != 0) anchor = order[s];
    for (int cand = 0; cand < m; ++cand) {
      if (anchor >= 0 && pairs.val[chosen[anchor]][cand] != target[anchor][node]) continue;
      bool ok = true;
      for (int s = 0; s < step && ok; ++s) {
        int prev = order[s];
        if (chosen[prev] == cand)
          ok = false;
        else if (pairs.val[chosen[prev]][cand] != target[prev][node] ||
                 pairs.val[cand][chosen[prev]] != target[node][prev])
          ok = false;
      }
      if (!ok) continue;
      chosen[node] = cand;
      place(step + 1);
      chosen[node] = -1;
    }
  }
};

// Reflection closure of a candidate base inside the ambient system; returns
// the positive part Delta+ as ambient positive indices.
std::vector<int> closure_positive(const RootSystem& rs, const std::vector<Coords>& base) {
  std::set<Coords> delta(base.begin(), base.end());
  for (const auto& b : base) delta.insert(negate(b));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Coords> snapshot(delta.begin(), delta.end());
    for (const auto& b : base)
      for (const auto& r : snapshot)
        if (delta.insert(rs.reflect(b, r)).second) grew = true;
  }
  std::vector<int> pos;
  for (const auto& r : delta) {
    int idx = rs.index_of(r);
    if (idx >= 0) pos.push_back(idx);
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

// Simple system of a set of positive roots: the elements that are not sums of
// two others from the set.
std::set<Coords> indecomposables(const RootSystem& rs, const std::vector<int>& positive_idx) {
  std::set<Coords> in;
  std::set<Coords> roots;
  for (int idx : positive_idx) roots.insert(rs.positive(idx));
  for (const auto& gamma : roots) {
    bool decomposable = false;
    for (const auto& a : roots) {
      if (decomposable) break;
      if (a == gamma) continue;
      Coords diff(gamma.size());
      for (size_t j = 0; j < gamma.size(); ++j) diff[j] = gamma[j] - a[j];
      if (roots.count(diff)) decomposable = true;
    }
    if (!decomposable) in.insert(gamma);
  }
  return in;
}

std::vector<Subsystem> enumerate_stellar(const RootSystem& rs) {
  std::vector<Subsystem> out;
  std::set<std::vector<int>> seen;  // by Delta+ index set
  PairTable pairs(rs);
  for (StellarType t : kAllStellar) {
    CartanType ct = stellar_cartan_type(t);
    if (ct.rank > rs.rank()) continue;
    auto target = cartan_matrix(ct);
    std::vector<std::vector<int>> bases;
    BaseSearch(rs, target, pairs, bases).run();
    int expected_pos = RootSystem::get(ct).num_positive();
    for (const auto& idxs : bases) {
      std::vector<Coords> base;
      for (int idx : idxs) base.push_back(rs.positive(idx));
      std::vector<int> pos = closure_positive(rs, base);
      if (static_cast<int>(pos.size()) != expected_pos) continue;
      std::set<Coords> simple = indecomposables(rs, pos);
      if (simple != std::set<Coords>(base.begin(), base.end())) continue;
      if (!seen.insert(pos).second) continue;
      out.push_back(Subsystem{t, std::move(base), std::move(pos)});
    }
  }
  return out;
}

}  // namespace

const std::vector<Subsystem>& stellar_subsystems(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<CartanType, std::unique_ptr<std::vector<Subsystem>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rs.type());
  if (it == cache.end()) {
    it = cache.emplace(rs.type(),
                       std::make_unique<std::vector<Subsystem>>(enumerate_stellar(rs))).first;
  }
  return *it->second;
}

std::vector<int> flatten(const RootSystem& rs, const WeylElt& w, const Subsystem& sub) {
  InversionBits inv = weyl::inversion_set(w);
  std::vector<Coords> set;
  for (int idx : sub.positive_idx)
    if (inv.test(idx)) set.push_back(rs.positive(idx));

  std::vector<int> word;
  while (!set.empty()) {
    int node = -1;
    size_t at = 0;
    for (size_t t = 0; t < set.size(); ++t) {
      auto hit = std::find(sub.base.begin(), sub.base.end(), set[t]);
      if (hit == sub.base.end()) continue;
      int cand = static_cast<int>(hit - sub.base.begin());
      if (node == -1 || cand < node) {
        node = cand;
        at = t;
      }
    }
    if (node < 0)
      throw std::logic_error("flatten: intersection is not an inversion set of the subsystem");
    word.push_back(node);
    Coords gamma = sub.base[node];
    set.erase(set.begin() + static_cast<long>(at));
    for (auto& r : set) r = rs.reflect(gamma, r);
  }
  return word;
}

BPVerdict smooth_bp(const RootSystem& rs, const WeylElt& w) {
  BPVerdict v;
  for (const auto& sub : stellar_subsystems(rs)) {
    std::vector<int> word = flatten(rs, w, sub);
    WeylElt sigma = weyl::from_word(stellar_system(sub.label), word);
    const auto& bad = forbidden_elements(sub.label);
    if (std::find(bad.begin(), bad.end(), sigma) != bad.end()) {
      v.smooth = false;
      v.witness.push_back(BPWitness{sub.label, sub.base, weyl::canonical_word(sigma)});
      return v;
    }
  }
  return v;
}

}  // namespace bp
}  // namespace wc
