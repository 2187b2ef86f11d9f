#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "weylcells/report.h"

namespace {

using namespace wc;

struct Options {
  std::string type;
  int rank = 0;
  int node = 0;
  bool node_set = false;
  std::string side = "C";
  std::string format = "text";
  std::string element;
  std::string seq;
  bool extended = false;
  size_t oracle_cap = 200000;
};

const RootSystem& system_for(const Options& opt) {
  CartanType t = parse_cartan_type(opt.type + std::to_string(opt.rank));
  return RootSystem::get(t);
}

void emit(const Options& opt, const report::json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int cmd_cells(const Options& opt) {
  const RootSystem& rs = system_for(opt);
  if (!opt.node_set) throw CLI::ValidationError("--node is required for cells");
  if (opt.node < 1 || opt.node > rs.rank()) throw CLI::ValidationError("--node out of range");
  cells::CellElements cell = opt.side == "w0" ? cells::w0_right_cell(rs, opt.node - 1)
                                              : cells::right_cell(rs, opt.node - 1);
  emit(opt, report::envelope(rs, "cells", report::json::array({report::cells_json(cell)})),
       report::cells_text(cell));
  return 0;
}

int cmd_smooth(const Options& opt) {
  const RootSystem& rs = system_for(opt);
  WeylElt w = weyl::parse_element(rs, opt.element);
  smoothness::Verdict v = smoothness::is_smooth(rs, w);
  emit(opt, report::envelope(rs, "smooth", report::json::array({report::verdict_json(w, v)})),
       report::verdict_text(w, v));
  return 0;
}

int cmd_verify(const Options& opt) {
  const RootSystem& rs = system_for(opt);
  if (rs.type().family == 'E' && rs.rank() >= 7 && !opt.extended)
    throw CLI::ValidationError("verify for E7/E8 needs --extended (subsystem enumeration)");
  report::VerifyOutcome outcome = report::verify_json(rs);
  emit(opt, report::envelope(rs, "verify", outcome.body), report::verify_text(rs, outcome));
  return outcome.all_match ? 0 : 1;
}

int cmd_av(const Options& opt) {
  const RootSystem& rs = system_for(opt);
  WeylElt w = weyl::parse_element(rs, opt.element);
  av::AVResult r;
  try {
    r = av::av_representative(rs, w);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  emit(opt, report::envelope(rs, "av", report::json::array({report::av_json(r)})),
       report::av_text(r));
  return 0;
}

int cmd_rs(const Options& opt) {
  std::vector<int> seq;
  const RootSystem* rsp = nullptr;
  if (!opt.seq.empty()) {
    std::string cleaned;
    for (char c : opt.seq) cleaned += (c == ',' ? ' ' : c);
    std::istringstream is(cleaned);
    int x;
    while (is >> x) seq.push_back(x);
  } else {
    rsp = &system_for(opt);
    if (rsp->type().family != 'A')
      throw CLI::ValidationError("tableau insertion runs on type A elements; use --seq otherwise");
    seq = weyl::one_line(weyl::parse_element(*rsp, opt.element));
  }
  auto [p, q] = tableaux::rs_insert(seq);
  report::json j = report::tableaux_json(p, q);
  if (opt.format == "json") {
    if (rsp)
      std::cout << report::envelope(*rsp, "rs", report::json::array({j})).dump(2) << "\n";
    else
      std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report::tableaux_text(p, q) << "\n";
  }
  return 0;
}

int cmd_oracle(const Options& opt) {
  const RootSystem& rs = system_for(opt);
  WeylElt w = weyl::parse_element(rs, opt.element);
  smoothness::PoincarePolynomial p;
  try {
    p = smoothness::poincare(rs, w, opt.oracle_cap);
  } catch (const weyl::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  emit(opt, report::envelope(rs, "oracle", report::json::array({report::poincare_json(w, p)})),
       report::poincare_text(w, p));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylcells: Weyl groups, Kazhdan-Lusztig right cells of the unique-word\n"
               "two-sided cell, Schubert smoothness tests, and associated-variety\n"
               "representatives"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_elt) {
    sub->add_option("--type,-t", opt.type, "Cartan family A..G")->required();
    sub->add_option("--rank,-r", opt.rank, "rank")->required();
    sub->add_option("--format,-f", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--extended", opt.extended, "enable E7/E8 subsystem enumeration");
    sub->add_option("--oracle-cap", opt.oracle_cap, "interval size budget for the oracle");
    if (needs_elt)
      sub->add_option("--element,-w", opt.element,
                      "word (\"3 2 3 4\") or one-line (\"(-2,-3,1)\")")
          ->required();
  };

  CLI::App* cells_cmd = app.add_subcommand("cells", "list a right cell C_i or w0*C_i");
  add_common(cells_cmd, false);
  cells_cmd->add_option("--node,-n", opt.node, "node index i")->each([&](const std::string&) {
    opt.node_set = true;
  });
  cells_cmd->add_option("--side", opt.side, "C (default) or w0")
      ->check(CLI::IsMember({"C", "w0"}));

  CLI::App* smooth_cmd = app.add_subcommand("smooth", "Schubert smoothness of one element");
  add_common(smooth_cmd, true);

  CLI::App* verify_cmd = app.add_subcommand("verify", "closed-form checks for one type");
  add_common(verify_cmd, false);

  CLI::App* av_cmd = app.add_subcommand("av", "associated-variety representative");
  add_common(av_cmd, true);

  CLI::App* rs_cmd = app.add_subcommand("rs", "Robinson-Schensted tableaux");
  add_common(rs_cmd, false);
  rs_cmd->add_option("--element,-w", opt.element, "type A element");
  rs_cmd->add_option("--seq", opt.seq, "raw integer sequence, e.g. \"3 1 4 2\"");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Poincare polynomial of a lower interval");
  add_common(oracle_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cells_cmd->parsed()) return cmd_cells(opt);
    if (smooth_cmd->parsed()) return cmd_smooth(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
    if (av_cmd->parsed()) return cmd_av(opt);
    if (rs_cmd->parsed()) return cmd_rs(opt);
    if (oracle_cmd->parsed()) return cmd_oracle(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
