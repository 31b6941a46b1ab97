#ifndef OPR_CALC_CHECK_HPP
#define OPR_CALC_CHECK_HPP

#include <map>
#include <string>
#include <vector>

#include "calc/proof.hpp"
#include "lang/eval.hpp"

namespace opr::calc {

struct Diag {
  int node = -1;
  std::string clause;
  std::string message;
};

// Heights live in {0..K} and {w..w+K}: w is a flag plus a finite part.
struct Height {
  int inf = 0;  // 0 or 1
  int fin = 0;

  bool operator==(const Height& o) const { return inf == o.inf && fin == o.fin; }
  bool ge(const Height& o) const {
    return inf != o.inf ? inf > o.inf : fin >= o.fin;
  }
};

struct CheckConfig {
  std::vector<Formula> axioms;  // universal closures of Delta0 axioms
  lang::EvalCtx eval;
  bool strict = true;  // Undecided truth obligations become diagnostics
};

struct Annotation {
  std::map<int, Ord> o;
  std::map<int, Height> h;
  Ord o_root;
};

// Schema conformance of every node: premise shapes, eigenvariables, guard
// presence, cut formulas, axiom truth, D0/D1 sequent constraints.
std::vector<Diag> rule_check(const Proof& p, CheckConfig& cfg);

std::map<int, Height> heights(const Proof& p);

// Ordinal assignment o(Gamma) using the stocks stored on D0 and lowest-D1
// nodes. Throws ord::Undecidable when mu blocks the arithmetic.
Annotation assign(const Proof& p);

// Height regulation (h1)-(h7) and the stock conditions (p1), (p2), (p2.1),
// (p2.2) in their finite forms.
std::vector<Diag> stock_check(const Proof& p, const Annotation& ann, CheckConfig& cfg);

// rule_check + assign + stock_check in one pass.
std::vector<Diag> validate(const Proof& p, CheckConfig& cfg);

// Candidate pool for evaluation: 0, every constant in the proof, successors.
void seed_pool_from_proof(const Proof& p, lang::EvalCtx& ctx);

}  // namespace opr::calc

#endif
