#ifndef OPR_IO_PROOFIO_HPP
#define OPR_IO_PROOFIO_HPP

#include <string>

#include "calc/proof.hpp"
#include "io/sexpr.hpp"

namespace opr::io {

// Proof scripts: a (proof :root <id>) header followed by one
// (node <id> <tag> :concl (seq F ...) :prem (<id> ...) <payload keys>)
// per node. Occurrence references are positional indices into :concl;
// occurrence ids are reconstructed root-down on load.
std::string print_proof(const calc::Proof& p);
calc::Proof parse_proof(const std::string& text);

}  // namespace opr::io

#endif
