#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wc {
namespace tableaux {

// Young tableau: rows strictly increase left to right, columns strictly
// increase top to bottom, row lengths weakly decrease.
struct Tableau {
  std::vector<std::vector<int>> rows;

  bool operator==(const Tableau& o) const { return rows == o.rows; }
};

// Row-insertion of a sequence of distinct integers; returns the insertion
// tableau P and the recording tableau Q (entries 1..n in insertion order).
std::pair<Tableau, Tableau> rs_insert(const std::vector<int>& seq);

std::vector<int> shape(const Tableau& t);

bool is_standard_shape(const Tableau& t);

std::string render(const Tableau& t);

}  // namespace tableaux
}  // namespace wc
