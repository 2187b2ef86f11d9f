#include "weylcells/tableaux.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wc {
namespace tableaux {

std::pair<Tableau, Tableau> rs_insert(const std::vector<int>& seq) {
  std::set<int> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size()) throw std::invalid_argument("rs_insert: repeated entries");

  Tableau p, q;
  for (size_t step = 0; step < seq.size(); ++step) {
    int x = seq[step];
    size_t row = 0;
    while (true) {
      if (row == p.rows.size()) {
        p.rows.emplace_back();
        q.rows.emplace_back();
      }
      auto& r = p.rows[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        q.rows[row].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(*it, x);  // bump the leftmost entry strictly bigger than x
      ++row;
    }
  }
  return {p, q};
}

std::vector<int> shape(const Tableau& t) {
  std::vector<int> s;
  for (const auto& r : t.rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

bool is_standard_shape(const Tableau& t) {
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    if (r.empty()) return false;
    if (i + 1 < t.rows.size() && t.rows[i + 1].size() > r.size()) return false;
    for (size_t j = 0; j + 1 < r.size(); ++j)
      if (r[j] >= r[j + 1]) return false;
    if (i + 1 < t.rows.size())
      for (size_t j = 0; j < t.rows[i + 1].size(); ++j)
        if (t.rows[i][j] >= t.rows[i + 1][j]) return false;
  }
  return true;
}

std::string render(const Tableau& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j) os << ' ';
      os << t.rows[i][j];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tableaux
}  // namespace wc
