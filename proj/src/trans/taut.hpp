#ifndef OPR_TRANS_TAUT_HPP
#define OPR_TRANS_TAUT_HPP

#include "calc/proof.hpp"

namespace opr::trans {

using calc::Proof;
using calc::Sequent;

// Canonical proof of `seq` built by recursion on the pair seq[neg_id] = not-A,
// seq[pos_id] = A. The root's assigned ordinal equals dg(A) under any stock
// assignment. Returns the root node id.
int taut_proof(Proof& p, const Sequent& seq, std::uint64_t neg_id, std::uint64_t pos_id);

}  // namespace opr::trans

#endif
