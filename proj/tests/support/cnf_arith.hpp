#ifndef OPR_TESTS_CNF_ARITH_HPP
#define OPR_TESTS_CNF_ARITH_HPP

#include "ord/cnf.hpp"

// Textbook Cantor-normal-form arithmetic, written directly against the Cnf
// structure. Deliberately independent of ord::compare / nsum / nprod: these
// are the reference the notation system is checked against.
namespace opr::oracle {

using ord::Cnf;

int cnf_cmp(const Cnf& a, const Cnf& b);
Cnf cnf_nat_add(const Cnf& a, const Cnf& b);
Cnf cnf_nat_mul(const Cnf& a, const Cnf& b);
Cnf cnf_ord_add(const Cnf& a, const Cnf& b);
Cnf cnf_ord_mul(const Cnf& a, const Cnf& b);

}  // namespace opr::oracle

#endif
