#ifndef OPR_LANG_EVAL_HPP
#define OPR_LANG_EVAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lang/ast.hpp"
#include "ord/term.hpp"

namespace opr::lang {

enum class Tri { True, False, Undecided };

inline Tri tri_not(Tri t) {
  if (t == Tri::True) return Tri::False;
  if (t == Tri::False) return Tri::True;
  return Tri::Undecided;
}

// Recursion predicate definition: body is a bounded formula over (stage, arg)
// whose self-references appear as R-atoms with a stage below `stage_var`.
struct RDef {
  std::string stage_var;
  std::string arg_var;
  Formula body;
};

// Shared evaluation state: fuel, the witness candidate pool for transfinite
// bounds, recursion definitions and their memo table. One session per
// evaluation context; not shared across threads.
struct EvalCtx {
  std::uint64_t fuel = 10000;
  std::vector<ord::Ord> pool;
  std::map<std::string, RDef> rdefs;
  std::map<std::string, Tri> rmemo;
  std::set<std::string> rstack;

  bool tick() {
    if (fuel == 0) return false;
    --fuel;
    return true;
  }
  void add_pool(const ord::Ord& t);
};

// Value of a closed object term. + and * are the ordinary (left-absorbing)
// operations. Throws ord::Undecidable on unresolved mu material.
ord::Ord eval_term(const Obj& t);

// Truth of a closed literal under the syntactic collapse clauses:
// P(t0,t1) holds iff the values are D0(a), F(a) for one a; Pr0(t) holds iff
// the value is D1-shaped. R-atoms evaluate by stage recursion on finite
// stages only.
Tri eval_literal(const Formula& lit, EvalCtx& ctx);

// Sound three-valued evaluation of a closed Delta0 (or literal) sentence.
// Finite bounds are enumerated; transfinite bounds fall back to the pool.
Tri eval_delta0(const Formula& a, EvalCtx& ctx);

// rho0 for open terms, the value for closed ones.
ord::Ord mj(const Obj& t);

// Least numeral below an extractable finite bound satisfying A(y), or 0 when
// the bound certifies there is none. nullopt when no finite bound is visible.
std::optional<ord::Ord> resolve_mu(const Formula& a, const std::string& y, EvalCtx& ctx);

}  // namespace opr::lang

#endif
