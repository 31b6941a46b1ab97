#ifndef OPR_ORD_ARITH_HPP
#define OPR_ORD_ARITH_HPP

#include "ord/term.hpp"

namespace opr::ord {

// Hessenberg (natural) sum: merge principal summands and re-sort.
Ord nsum(const Ord& a, const Ord& b);
Ord nsum(const Ord& a, const Ord& b, const Ord& c);

// Hessenberg (natural) product: distribute over summands, natural-sum the
// exponents. Throws Undecidable when a mu summand hides its exponent.
Ord nprod(const Ord& a, const Ord& b);

// Ordinary (left-absorbing) ordinal sum and product on normal forms. These
// interpret the object-level + and * of the language; the notation-level
// # and x above are the natural operations.
Ord ord_add(const Ord& a, const Ord& b);
Ord ord_mul(const Ord& a, const Ord& b);

// Exponent e with part == w^e, reading epsilon atoms t as w^t.
Ord exponent_of(const Ord& principal);

}  // namespace opr::ord

#endif
