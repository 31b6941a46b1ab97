#ifndef OPR_RED_REDUCE_HPP
#define OPR_RED_REDUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "calc/check.hpp"
#include "calc/proof.hpp"

namespace opr::red {

using calc::Proof;

// The rightmost climb from the end-sequent through cuts, (h), collapse and
// Sigma1 rules; the top decides the reduction case.
std::vector<int> main_branch(const Proof& p);
int top_of_main_branch(const Proof& p);

enum class Case {
  A1AxTaut,
  A2PrhoEx,
  A3PexGuard,
  A3PexMain,
  R11Forall,
  R121PSigma1,
  R122PrhoSigma1,
  R1OtherLogical,
  R2Rfl,
  R31IndGuard,
  R32IndUnfold,
  R41ImplicitDelta0,
  R42ImplicitCut
};

const char* case_name(Case c);

struct ReductionStep {
  Case case_id;
  ord::Ord o_before;
  ord::Ord o_after;
  std::vector<calc::Formula> added;               // new end-sequent members
  std::vector<std::pair<int, ord::Ord>> stocks;   // stock map after the step
};

struct Outcome {
  enum class Tag { Witness, StepLimit, Stuck } tag = Tag::StepLimit;
  std::optional<calc::Formula> witness_formula;
  std::optional<calc::Obj> witness_term;
  std::string diagnostic;
  std::vector<ReductionStep> trace;
  int steps = 0;
};

struct RunLimits {
  int max_steps = 10000;
  std::uint64_t eval_fuel = 10000;
  bool strict = true;
};

// One rewriting step. The proof must validate; throws std::logic_error on
// descent or revalidation failures (engine bugs, never ignored), and reports
// truth/undecidedness through the outcome-like return.
struct StepResult {
  enum class Tag { Stepped, Witness, Stuck } tag;
  std::optional<ReductionStep> step;
  std::optional<calc::Formula> witness_formula;
  std::optional<calc::Obj> witness_term;
  std::string diagnostic;
};
StepResult reduce_step(Proof& p, calc::CheckConfig& cfg);

Outcome run(Proof p, calc::CheckConfig cfg, const RunLimits& limits);

}  // namespace opr::red

#endif
