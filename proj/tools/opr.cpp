// opr - ordinal proof rewriter command line
//
// subcommands:
//   ord {cmp,nsum,nprod,g,region} <terms...>
//   check <proof-file>
//   embed <skeleton-file> <goal-formula> [-o out]
//   reduce <proof-file> [--trace PATH] [--max-steps N] [--fuel N]
//
// exit codes: 0 ok/witness, 1 diagnostics, 2 parse error, 3 undecidable,
//             4 stuck, 5 step limit

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "calc/check.hpp"
#include "io/formio.hpp"
#include "io/ordio.hpp"
#include "io/proofio.hpp"
#include "json.hpp"
#include "ord/arith.hpp"
#include "ord/order.hpp"
#include "red/reduce.hpp"
#include "trans/embed.hpp"

using namespace opr;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_ord(const std::string& sub, const std::vector<std::string>& args) {
  using ord::Ord;
  try {
    if (sub == "cmp") {
      auto c = ord::compare(io::parse_ord(args.at(0)), io::parse_ord(args.at(1)));
      std::cout << (c == ord::Cmp::LT ? "LT" : c == ord::Cmp::EQ ? "EQ" : "GT") << "\n";
    } else if (sub == "nsum") {
      Ord acc = Ord::zero();
      for (const auto& a : args) acc = ord::nsum(acc, io::parse_ord(a));
      std::cout << io::print_ord(acc) << "\n";
    } else if (sub == "nprod") {
      Ord acc = Ord::nat(1);
      for (const auto& a : args) acc = ord::nprod(acc, io::parse_ord(a));
      std::cout << io::print_ord(acc) << "\n";
    } else if (sub == "g") {
      auto g = ord::gset(io::parse_ord(args.at(0)), io::parse_ord(args.at(1)));
      std::cout << "{";
      for (std::size_t i = 0; i < g.size(); ++i)
        std::cout << (i ? " " : "") << io::print_ord(g[i]);
      std::cout << "}\n";
    } else if (sub == "region") {
      ord::Region r = ord::region(io::parse_ord(args.at(0)));
      switch (r.tag) {
        case ord::Region::Tag::Finite: std::cout << "Finite(" << r.n << ")\n"; break;
        case ord::Region::Tag::Countable: std::cout << "Countable\n"; break;
        case ord::Region::Tag::EqW1: std::cout << "EqW1\n"; break;
        case ord::Region::Tag::Middle: std::cout << "Middle\n"; break;
        case ord::Region::Tag::EqR0: std::cout << "EqR0\n"; break;
        case ord::Region::Tag::Above: std::cout << "Above\n"; break;
      }
    } else {
      std::cerr << "unknown ord subcommand " << sub << "\n";
      return 2;
    }
  } catch (const ord::Undecidable& u) {
    std::cerr << "undecidable: " << u.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

void load_axioms(calc::CheckConfig& cfg, const std::string& path) {
  if (path.empty()) return;
  for (const auto& e : io::parse_all(slurp(path))) {
    if (!e.atom && e.len() >= 1 && e.at(0).is_sym("rdef")) {
      cfg.eval.rdefs[e.at(1).text] = {e.at(2).text, e.at(3).text,
                                      io::formula_of_sexpr(e.at(4))};
      continue;
    }
    cfg.axioms.push_back(io::formula_of_sexpr(e));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal proof rewriter"};
  app.require_subcommand(1);

  auto* ord_cmd = app.add_subcommand("ord", "ordinal term queries");
  std::string ord_sub;
  std::vector<std::string> ord_args;
  ord_cmd->add_option("sub", ord_sub)->required();
  ord_cmd->add_option("args", ord_args);

  std::string proof_path, axioms_path, trace_path, out_path, goal_text, pool_text;
  int max_steps = 10000;
  std::uint64_t fuel = 10000;
  bool strict = true;

  auto* check_cmd = app.add_subcommand("check", "validate a proof script");
  check_cmd->add_option("proof", proof_path)->required();
  check_cmd->add_option("--axioms", axioms_path);
  check_cmd->add_option("--fuel", fuel);
  check_cmd->add_flag("--strict,!--no-strict", strict);

  auto* embed_cmd = app.add_subcommand("embed", "build an initial proof from a skeleton");
  embed_cmd->add_option("skeleton", proof_path)->required();
  embed_cmd->add_option("goal", goal_text)->required();
  embed_cmd->add_option("-o,--out", out_path);

  auto* reduce_cmd = app.add_subcommand("reduce", "run the rewriting engine");
  reduce_cmd->add_option("proof", proof_path)->required();
  reduce_cmd->add_option("--axioms", axioms_path);
  reduce_cmd->add_option("--trace", trace_path);
  reduce_cmd->add_option("--max-steps", max_steps);
  reduce_cmd->add_option("--fuel", fuel);
  reduce_cmd->add_option("--pool", pool_text);
  reduce_cmd->add_flag("--strict,!--no-strict", strict);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ord_cmd->parsed()) return run_ord(ord_sub, ord_args);

    if (check_cmd->parsed()) {
      calc::Proof p = io::parse_proof(slurp(proof_path));
      calc::CheckConfig cfg;
      cfg.strict = strict;
      cfg.eval.fuel = fuel;
      load_axioms(cfg, axioms_path);
      calc::seed_pool_from_proof(p, cfg.eval);
      auto diags = calc::validate(p, cfg);
      for (const auto& d : diags)
        std::cout << "node " << d.node << " [" << d.clause << "] " << d.message << "\n";
      if (!diags.empty()) return 1;
      std::cout << "o(P) = " << io::print_ord(calc::assign(p).o_root) << "\n";
      return 0;
    }

    if (embed_cmd->parsed()) {
      trans::Skel skel = trans::parse_skeleton(slurp(proof_path));
      lang::Formula goal = io::parse_formula(goal_text);
      auto res = trans::embed(skel, goal);
      std::string text = io::print_proof(res.proof);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        out << text;
      }
      std::cout << "k = " << res.k << "\n";
      std::cout << "o(P) = " << io::print_ord(calc::assign(res.proof).o_root) << "\n";
      return 0;
    }

    if (reduce_cmd->parsed()) {
      calc::Proof p = io::parse_proof(slurp(proof_path));
      calc::CheckConfig cfg;
      cfg.strict = strict;
      cfg.eval.fuel = fuel;
      load_axioms(cfg, axioms_path);
      if (!pool_text.empty()) {
        std::stringstream ss(pool_text);
        std::string item;
        while (std::getline(ss, item, ','))
          cfg.eval.add_pool(io::parse_ord(item));
      }
      {
        calc::seed_pool_from_proof(p, cfg.eval);
        auto diags = calc::validate(p, cfg);
        if (!diags.empty()) {
          for (const auto& d : diags)
            std::cout << "node " << d.node << " [" << d.clause << "] " << d.message << "\n";
          return 1;
        }
      }
      red::RunLimits limits;
      limits.max_steps = max_steps;
      limits.eval_fuel = fuel;
      red::Outcome out = red::run(p, cfg, limits);
      if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        int i = 0;
        for (const auto& st : out.trace) {
          json j;
          j["v"] = 1;
          j["step"] = i++;
          j["case"] = red::case_name(st.case_id);
          j["o_before"] = io::print_ord(st.o_before);
          j["o_after"] = io::print_ord(st.o_after);
          json added = json::array();
          for (const auto& f : st.added) added.push_back(io::print_formula(f));
          j["added_formulas"] = added;
          json stocks = json::object();
          for (const auto& [node, s] : st.stocks)
            stocks[std::to_string(node)] = io::print_ord(s);
          j["stocks"] = stocks;
          tf << j.dump() << "\n";
        }
      }
      switch (out.tag) {
        case red::Outcome::Tag::Witness:
          std::cout << "WITNESS";
          if (out.witness_term) std::cout << " x=" << io::print_obj(*out.witness_term);
          if (out.witness_formula)
            std::cout << " formula=" << io::print_formula(*out.witness_formula);
          std::cout << " steps=" << out.steps << "\n";
          return 0;
        case red::Outcome::Tag::Stuck:
          std::cout << "STUCK " << out.diagnostic << "\n";
          return 4;
        case red::Outcome::Tag::StepLimit:
          std::cout << "STEP-LIMIT steps=" << out.steps << "\n";
          return 5;
      }
    }
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ord::Undecidable& e) {
    std::cerr << "undecidable: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
