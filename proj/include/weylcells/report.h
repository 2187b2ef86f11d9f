#pragma once

#include <string>

#include "json.hpp"
#include "weylcells/av.h"
#include "weylcells/cells.h"
#include "weylcells/smoothness.h"
#include "weylcells/tableaux.h"

namespace wc {
namespace report {

using json = nlohmann::ordered_json;

// {"word":[...1-based], "one_line":[...]|null, "length":int}
json element_json(const WeylElt& w);
std::string element_text(const WeylElt& w);

json cells_json(const cells::CellElements& cell);
std::string cells_text(const cells::CellElements& cell);

json verdict_json(const WeylElt& w, const smoothness::Verdict& v);
std::string verdict_text(const WeylElt& w, const smoothness::Verdict& v);

json av_json(const av::AVResult& r);
std::string av_text(const av::AVResult& r);

json poincare_json(const WeylElt& w, const smoothness::PoincarePolynomial& p);
std::string poincare_text(const WeylElt& w, const smoothness::PoincarePolynomial& p);

json tableaux_json(const tableaux::Tableau& p, const tableaux::Tableau& q);
std::string tableaux_text(const tableaux::Tableau& p, const tableaux::Tableau& q);

struct VerifyOutcome {
  json body;
  bool all_match = true;
};

// Runs the closed-form checks for one type: smooth cells, cell sizes against
// the size table, and representative sweeps.
VerifyOutcome verify_json(const RootSystem& rs);
std::string verify_text(const RootSystem& rs, const VerifyOutcome& outcome);

// Wraps command results in the stable top-level envelope.
json envelope(const RootSystem& rs, const std::string& command, json results);

}  // namespace report
}  // namespace wc
