#include "weylcells/report.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace wc {
namespace report {

json element_json(const WeylElt& w) {
  json j;
  std::vector<int> word = weyl::canonical_word(w);
  for (int& x : word) ++x;
  j["word"] = word;
  if (w.rs().type().classical())
    j["one_line"] = weyl::one_line(w);
  else
    j["one_line"] = nullptr;
  j["length"] = weyl::length(w);
  return j;
}

std::string element_text(const WeylElt& w) {
  std::ostringstream os;
  std::vector<int> word = weyl::canonical_word(w);
  os << (word.empty() ? "e" : weyl::word_str(word));
  if (w.rs().type().classical()) os << "  " << weyl::one_line_str(weyl::one_line(w));
  os << "  length " << weyl::length(w);
  return os.str();
}

json cells_json(const cells::CellElements& cell) {
  json j;
  j["node"] = cell.descriptor.node + 1;
  j["side"] = cell.descriptor.side == cells::Side::C ? "C" : "w0C";
  j["size"] = cell.elements.size();
  json elems = json::array();
  for (const auto& w : cell.elements) elems.push_back(element_json(w));
  j["elements"] = std::move(elems);
  json mins = json::array();
  for (const auto& w : cell.min_length_elements) mins.push_back(element_json(w));
  j["min_length_elements"] = std::move(mins);
  json maxs = json::array();
  for (const auto& w : cell.max_length_elements) maxs.push_back(element_json(w));
  j["max_length_elements"] = std::move(maxs);
  return j;
}

std::string cells_text(const cells::CellElements& cell) {
  std::ostringstream os;
  os << (cell.descriptor.side == cells::Side::C ? "C_" : "w0C_") << cell.descriptor.node + 1
     << " of " << cell.descriptor.type.str() << ": " << cell.elements.size() << " elements\n";
  for (const auto& w : cell.elements) os << "  " << element_text(w) << '\n';
  return os.str();
}

json verdict_json(const WeylElt& w, const smoothness::Verdict& v) {
  json j;
  j["element"] = element_json(w);
  j["smooth"] = v.smooth;
  j["engine"] = smoothness::engine_name(v.engine);
  if (!v.smooth)
    j["witness"] = v.witness_str();
  else
    j["witness"] = nullptr;
  return j;
}

std::string verdict_text(const WeylElt& w, const smoothness::Verdict& v) {
  std::ostringstream os;
  os << element_text(w) << "\n"
     << (v.smooth ? "smooth" : "non-smooth") << "  [engine: " << smoothness::engine_name(v.engine)
     << "]";
  if (!v.smooth) os << "\n  witness: " << v.witness_str();
  return os.str();
}

json av_json(const av::AVResult& r) {
  json j;
  j["cell"] = r.node + 1;
  j["representative_min"] = element_json(r.representative_min);
  json mins = json::array();
  for (const auto& w : r.minimal_elements) mins.push_back(element_json(w));
  j["minimal_elements"] = std::move(mins);
  if (r.representative_max)
    j["representative_max"] = element_json(*r.representative_max);
  else
    j["representative_max"] = nullptr;
  j["irreducible"] = r.irreducible;
  return j;
}

std::string av_text(const av::AVResult& r) {
  std::ostringstream os;
  os << "cell w0C_" << r.node + 1 << "\n";
  os << "w_min: " << element_text(r.representative_min) << "\n";
  if (r.minimal_elements.size() > 1) {
    os << "minimal-length elements:\n";
    for (const auto& w : r.minimal_elements) os << "  " << element_text(w) << "\n";
  }
  if (r.representative_max) os << "w_max: " << element_text(*r.representative_max) << "\n";
  os << "irreducible: yes";
  return os.str();
}

json poincare_json(const WeylElt& w, const smoothness::PoincarePolynomial& p) {
  json j;
  j["element"] = element_json(w);
  j["coefficients"] = p.coefficients;
  j["palindromic"] = smoothness::is_palindromic(p);
  return j;
}

std::string poincare_text(const WeylElt& w, const smoothness::PoincarePolynomial& p) {
  std::ostringstream os;
  os << element_text(w) << "\np(t) = ";
  bool first = true;
  for (size_t k = 0; k < p.coefficients.size(); ++k) {
    if (p.coefficients[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || p.coefficients[k] != 1) os << p.coefficients[k];
    if (k == 1) os << "t";
    if (k > 1) os << "t^" << k;
  }
  os << "\npalindromic: " << (smoothness::is_palindromic(p) ? "yes" : "no");
  return os.str();
}

json tableaux_json(const tableaux::Tableau& p, const tableaux::Tableau& q) {
  json j;
  j["P"] = p.rows;
  j["Q"] = q.rows;
  j["shape"] = tableaux::shape(p);
  return j;
}

std::string tableaux_text(const tableaux::Tableau& p, const tableaux::Tableau& q) {
  std::ostringstream os;
  os << "P:\n" << tableaux::render(p) << "Q:\n" << tableaux::render(q);
  std::vector<int> s = tableaux::shape(p);
  os << "shape: [";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << "]";
  return os.str();
}

namespace {

int expected_cell_size(CartanType t, int i) {
  int n = t.rank;
  int node = i + 1;
  switch (t.family) {
    case 'A':
      return n;
    case 'B':
    case 'C':
      return node == n ? n + 1 : 2 * n - 1;
    case 'D':
      return n;
    default: {
      // No published size column; count distinct nonempty prefixes of the
      // closed-form branch words.
      std::set<std::vector<int>> prefixes;
      for (const auto& b : cells::cell_branch_words(t, i))
        for (size_t len = 1; len <= b.size(); ++len)
          prefixes.insert(std::vector<int>(b.begin(), b.begin() + static_cast<long>(len)));
      return static_cast<int>(prefixes.size());
    }
  }
}

// Closed-form branch giving the minimal-length representative of w0*C_i,
// per the case analyses; 1-based letters, empty when no form is pinned.
std::vector<int> av_fixture_branch(CartanType t, int i) {
  int n = t.rank;
  int node = i + 1;
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
    case 'B':
    case 'C':
      if (node == n) return chain(n, 1);
      return concat(chain(node, n), chain(n - 1, 1));
    case 'D':
      if (n < 4) return {};
      if (node == 1) return concat(chain(1, n - 2), {n - 1});
      if (node <= n - 2)
        return n - node >= node ? concat(chain(node, n - 2), {n - 1}) : chain(node, 1);
      if (node == n - 1) return chain(n - 1, 1);
      return concat({n}, chain(n - 2, 1));
    case 'E':
      if (n == 6) {
        switch (node) {
          case 1: return {1, 3, 4, 5, 6};
          case 2: return {2, 4, 5, 6};
          case 3: return {3, 4, 5, 6};
          case 4: return {4, 5, 6};
          case 5: return {5, 4, 3, 1};
          case 6: return {6, 5, 4, 3, 1};
        }
      }
      return {};
    case 'F':
      switch (node) {
        case 1: return {1, 2, 3, 2, 1};
        case 2: return {2, 3, 2, 1};
        case 3: return {3, 2, 3, 4};
        case 4: return {4, 3, 2, 3, 4};
      }
      return {};
    case 'G':
      return node == 1 ? std::vector<int>{1, 2, 1, 2, 1} : std::vector<int>{2, 1, 2, 1, 2};
    default:
      return {};
  }
}

}  // namespace

VerifyOutcome verify_json(const RootSystem& rs) {
  VerifyOutcome out;
  json results = json::array();

  // Cell sizes and the two cell computations (the closed form against the
  // unique-reduced-word filter; right_cell throws if those disagree).
  for (int i = 0; i < rs.rank(); ++i) {
    cells::CellElements cell = cells::right_cell(rs, i);
    json j;
    j["check"] = "cell_size";
    j["node"] = i + 1;
    j["computed"] = cell.elements.size();
    j["expected"] = expected_cell_size(rs.type(), i);
    j["match"] = (static_cast<int>(cell.elements.size()) == expected_cell_size(rs.type(), i));
    if (!j["match"].get<bool>()) out.all_match = false;
    results.push_back(std::move(j));
  }

  // Smooth sets per cell against the closed forms.
  for (const auto& r : smoothness::verify_smcell(rs)) {
    json j;
    j["check"] = "smooth_cell";
    j["node"] = r.node + 1;
    json comp = json::array();
    for (const auto& w : r.computed) comp.push_back(element_json(w));
    json exp = json::array();
    for (const auto& w : r.expected) exp.push_back(element_json(w));
    j["computed"] = std::move(comp);
    j["expected"] = std::move(exp);
    j["match"] = r.match;
    if (!r.match) out.all_match = false;
    results.push_back(std::move(j));
  }

  // Associated-variety representatives per cell against the closed forms.
  for (int i = 0; i < rs.rank(); ++i) {
    WeylElt w0si = weyl::multiply(weyl::longest_element(rs), weyl::simple(rs, i));
    av::AVResult r = av::av_representative(rs, w0si);
    json j;
    j["check"] = "av_representative";
    j["node"] = i + 1;
    j["computed"] = element_json(r.representative_min);
    std::vector<int> fixture = av_fixture_branch(rs.type(), i);
    bool match = true;
    if (!fixture.empty()) {
      for (int& x : fixture) --x;
      WeylElt expect =
          weyl::multiply(weyl::longest_element(rs), weyl::from_word(rs, fixture));
      j["expected"] = element_json(expect);
      match = (expect == r.representative_min);
    } else {
      j["expected"] = nullptr;
    }
    j["minimal_length_count"] = r.minimal_elements.size();
    j["match"] = match;
    if (!match) out.all_match = false;
    results.push_back(std::move(j));
  }

  out.body = std::move(results);
  return out;
}

std::string verify_text(const RootSystem& rs, const VerifyOutcome& outcome) {
  std::ostringstream os;
  os << "verify " << rs.type().str() << "\n";
  for (const auto& j : outcome.body) {
    os << "  [" << (j["match"].get<bool>() ? "PASS" : "FAIL") << "] "
       << j["check"].get<std::string>() << " node " << j["node"].get<int>();
    if (j["check"] == "cell_size")
      os << ": size " << j["computed"].get<size_t>() << " expected " << j["expected"].get<int>();
    if (j["check"] == "smooth_cell")
      os << ": " << j["computed"].size() << " smooth elements, expected " << j["expected"].size();
    os << "\n";
  }
  os << (outcome.all_match ? "PASS" : "FAIL") << ": " << rs.type().str();
  return os.str();
}

json envelope(const RootSystem& rs, const std::string& command, json results) {
  json j;
  j["type"] = std::string(1, rs.type().family);
  j["rank"] = rs.type().rank;
  j["command"] = command;
  j["results"] = std::move(results);
  return j;
}

}  // namespace report
}  // namespace wc
