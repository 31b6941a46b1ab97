#ifndef OPR_TRANS_EMBED_HPP
#define OPR_TRANS_EMBED_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "calc/proof.hpp"

namespace opr::trans {

using calc::Formula;
using calc::Obj;
using calc::Proof;
using calc::Sequent;

enum class LeafKind {
  AxiomClosure,   // (all)* over an (ax)
  PSigma1,        // the Sigma1-collapse axiom piece, ordinal 12
  Pexists,        // the w1-regularity piece, ordinal 2
  Prho0Sigma1,    // the rho0-collapse piece, ordinal 11
  Prho0exists,    // the rho0-unboundedness piece, ordinal 2
  TransInduction, // transfinite induction piece, ordinal d1*r0+d0+3
  Reflection,     // the Pi2-reflection piece, ordinal 24
  Taut            // a canonical tautology pair
};

struct LeafSpec {
  LeafKind kind = LeafKind::Taut;
  // AxiomClosure: formula = the open matrix, vars = closure variables.
  // PSigma1/Prho0Sigma1: formula = the Sigma1 template phi, kappa/arg slots.
  // TransInduction/Reflection: formula = A(x) with ind_var.
  std::optional<Formula> formula;
  std::vector<std::string> vars;
  std::string kappa_var, arg_var, ind_var;
};

// A proof outline: assembly rules over leaf pieces. cut carries the cut
// formula (the right child proves it); the logical kinds carry the main
// formula they develop in the target sequent.
struct Skel {
  enum class K { Cut, Or, And, Ex, All, BEx, BAll, Leaf };
  K k = K::Leaf;
  std::optional<Formula> formula;  // Cut: cut formula; logical: main formula
  int disj = 0;
  std::optional<Obj> witness;
  std::string eigen;
  LeafSpec leaf;
  std::vector<Skel> kids;
};

struct EmbedResult {
  Proof proof;
  int k = 0;                          // number of (h) wrappers per block
  std::vector<int> piece_roots;       // in left-to-right leaf order
  std::vector<ord::Ord> piece_ords;   // assigned ordinal of each piece root
};

// The canonical axiom formula a leaf piece concludes.
Formula leaf_axiom_formula(const LeafSpec& spec);

// Develop a skeleton against an explicit target sequent inside an existing
// proof arena. Returns the root node id; piece roots append to *pieces.
int build_skeleton(Proof& p, const Skel& s, const Sequent& target,
                   std::vector<int>* pieces = nullptr);

// Wrap a development in the initial-proof tail: k (h) rules, a (D1) with
// empty stock, k more (h) rules and the final (D0) with stock w^{b1}+1.
// Sets p.root.
void wrap_initial(Proof& p, int q1, const Sequent& root_seq, int k);

// Builds the initial proof with stock: the skeleton's development wrapped in
// k (h)'s, one (D1) with empty stock, k more (h)'s and a final (D0) with
// stock w^{b1}+1. The skeleton must conclude a Sigma2 sentence.
EmbedResult embed(const Skel& skel, const Formula& sigma2_goal);

// Skeleton file format: (skel <kind> ...) s-expressions, kids nested.
Skel parse_skeleton(const std::string& text);
std::string print_skeleton(const Skel& s);

}  // namespace opr::trans

#endif
