#ifndef OPR_TRANS_SURGERY_HPP
#define OPR_TRANS_SURGERY_HPP

#include "calc/proof.hpp"
#include "lang/eval.hpp"

namespace opr::trans {

using calc::Proof;

// Deep copy of the subtree rooted at n; node ids are fresh, occurrence ids
// are preserved. Returns the copy's root id.
int clone_subtree(Proof& p, int n);

// Substitute a closed term for a variable in every sequent and payload of the
// subtree.
void subst_subtree(Proof& p, int n, const std::string& x, const calc::Obj& t);

// Insert the formulas at the front of every sequent in the subtree (same
// fresh occurrence ids throughout). Returns the new ids.
std::vector<std::uint64_t> weaken_subtree(Proof& p, int n,
                                          const std::vector<calc::Formula>& fs);

// Same, with caller-chosen occurrences (ids must be fresh for the subtree).
void weaken_subtree_with(Proof& p, int n, const std::vector<calc::Occ>& occs);

// Remove a false closed literal occurrence together with all its ancestors.
// Guard payloads flip to the absent form, (taut) leaves losing one member
// become (ax), rules whose main vanished are spliced out.
void drop_false_literal(Proof& p, int n, std::uint64_t occ);

// Replace the child `old_child` of `parent` by `new_child` (parent -1 moves
// the root).
void replace_child(Proof& p, int parent, int old_child, int new_child);

// Drop nodes unreachable from the root.
void garbage_collect(Proof& p);

// Inversion: replace the universal/bounded-universal occurrence family by the
// instance at s, removing the introducing rules. For bounded universals the
// false guard instances are eliminated (requires s < bound to hold).
void invert_all(Proof& p, int n, std::uint64_t occ, const calc::Obj& s,
                lang::EvalCtx& ctx);

// Inversion of a conjunction occurrence family to its i-th component.
void invert_and(Proof& p, int n, std::uint64_t occ, int i);

// Split a disjunction occurrence family into its two disjuncts.
// Returns the two new occurrence ids.
std::pair<std::uint64_t, std::uint64_t> invert_or_split(Proof& p, int n, std::uint64_t occ);

}  // namespace opr::trans

#endif
