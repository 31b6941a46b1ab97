#ifndef OPR_CALC_PROOF_HPP
#define OPR_CALC_PROOF_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lang/ast.hpp"
#include "ord/term.hpp"

namespace opr::calc {

using lang::Formula;
using lang::Obj;
using ord::Ord;

// A formula occurrence. Ids are stable across surgeries: the same id in a
// premise and its conclusion marks the same occurrence travelling through a
// rule, which is what ancestor/descendant tracking reads off.
struct Occ {
  std::uint64_t id = 0;
  Formula f;
};
using Sequent = std::vector<Occ>;

enum class Rule {
  Ax, Taut, PEx, PrEx,           // axioms
  Or, And, Ex, BEx, All, BAll,   // logical rules
  Ind, Cut, Rfl, PSig, PrSig,    // schema rules
  H, D0, D1                      // height and collapse rules
};

const char* rule_name(Rule r);

struct Payload {
  std::optional<std::uint64_t> main;       // principal occurrence in the conclusion
  std::optional<std::uint64_t> main2;      // Taut: the positive member
  int disj = 0;                            // Or: chosen disjunct
  std::optional<Obj> witness;              // Ex/BEx/PEx/PrEx: s
  std::string eigen;                       // All/BAll/Ind/Rfl
  std::optional<std::uint64_t> guard;      // BEx/Ind: conclusion guard; PSig/PrSig: not-P guard
  std::optional<std::uint64_t> guard2;     // PEx: s</w1 guard; PSig/PrSig: s<t guard
  std::optional<Formula> cut_formula;      // Cut: the E-side formula A
  std::vector<std::uint64_t> left_ids;     // Cut: conclusion occs routed to the left premise
  std::optional<Formula> phi;              // PSig/PrSig: Sigma1 template
  std::string kappa_var;                   // PSig: slot instantiated by w1 / t0
  std::string arg_var;                     // PSig/PrSig: slot instantiated by s
  std::optional<Obj> t0, t1;               // PSig: collapse pair; PrSig: t1 is the bound t
  std::optional<Obj> s_term;               // PEx/PrEx/BEx-witness shadow / Ind s / PSig s
  std::optional<Obj> ind_t;                // Ind: induction term; Rfl: the bound t
  std::optional<Formula> ind_formula;      // Ind: A(x); Rfl: A(x)
  std::string ind_var;                     // the x of A(x)
  std::vector<std::uint64_t> gamma_ids;    // D1: relativized conclusion occurrences
  std::optional<Ord> relativizer;          // D1/D0: the alpha annotation
  std::optional<Ord> stock;                // D0 and lowest D1 of each series
  std::size_t h_added = 0;                 // H: appended formula count
};

struct Node {
  int id = -1;
  Rule rule = Rule::Ax;
  Sequent concl;
  std::vector<int> prems;
  Payload pay;
};

struct Proof {
  std::map<int, Node> nodes;
  int root = -1;
  std::uint64_t next_occ = 1;
  int next_node = 0;

  Node& node(int id) { return nodes.at(id); }
  const Node& node(int id) const { return nodes.at(id); }
  std::uint64_t fresh_occ() { return next_occ++; }
  int add_node(Node n) {
    n.id = next_node++;
    int id = n.id;
    nodes.emplace(id, std::move(n));
    return id;
  }
  // parent of each node (root maps to -1)
  std::map<int, int> parents() const;
  // nodes of the subtree rooted at n (n included)
  std::vector<int> subtree(int n) const;
};

inline std::optional<std::size_t> find_occ(const Sequent& s, std::uint64_t id) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].id == id) return i;
  return std::nullopt;
}

// The premise sequents a node's conclusion and payload dictate. Fresh
// occurrences (minor formulas, cut formulas, eigeninstances) receive ids from
// the counter. D1 premises carry the conclusion formula at relativized
// positions; callers compare those via relativize.
std::vector<Sequent> derive_premises(const Node& n, std::uint64_t& fresh);

// One step toward the root: where does occurrence `id` in node `child` go?
struct DescStep {
  enum class K { At, VanishCut, VanishRule, Root } kind;
  int node = -1;           // parent node (At/Vanish*)
  std::uint64_t occ = 0;   // the descendant occurrence (At)
};
DescStep descend(const Proof& p, const std::map<int, int>& parent, int child,
                 std::uint64_t id);

// All ancestor occurrences of (node, occ), the occurrence itself included.
std::vector<std::pair<int, std::uint64_t>> ancestors(const Proof& p, int node,
                                                     std::uint64_t occ);

// Ordinal constants appearing in a node's sequent and payload, collapse
// bounds of quantifiers included.
void collect_consts(const Node& n, std::vector<Ord>& out);

// true when the occurrence's descendant chain reaches the end-sequent
bool is_explicit_occ(const Proof& p, const std::map<int, int>& parent, int node,
                     std::uint64_t id);

}  // namespace opr::calc

#endif
