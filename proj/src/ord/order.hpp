#ifndef OPR_ORD_ORDER_HPP
#define OPR_ORD_ORDER_HPP

#include "ord/term.hpp"

namespace opr::ord {

enum class Cmp { LT, EQ, GT };

inline Cmp flip(Cmp c) {
  switch (c) {
    case Cmp::LT: return Cmp::GT;
    case Cmp::GT: return Cmp::LT;
    default: return Cmp::EQ;
  }
}

// Total syntactic order on normal forms. EQ iff structural equality.
// Throws Undecidable when a mu-term blocks the decision.
Cmp compare(const Ord& a, const Ord& b);

inline bool less(const Ord& a, const Ord& b) { return compare(a, b) == Cmp::LT; }
inline bool leq(const Ord& a, const Ord& b) { return compare(a, b) != Cmp::GT; }

// The finite set G_a(b) of critical D/F-arguments of b above the cutoff a.
// Result is sorted/deduplicated syntactically; elements are subterms of b.
std::vector<Ord> gset(const Ord& a, const Ord& b);

// true iff every x in gset(a, b) satisfies x < c.
bool gset_below(const Ord& a, const Ord& b, const Ord& c);

}  // namespace opr::ord

#endif
