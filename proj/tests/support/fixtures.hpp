#ifndef OPR_TESTS_FIXTURES_HPP
#define OPR_TESTS_FIXTURES_HPP

#include "calc/check.hpp"
#include "calc/proof.hpp"
#include "trans/embed.hpp"

// Crafted proofs exercising each reduction case, plus shared builders for
// the acceptance suite.
namespace opr::fix {

using calc::Formula;
using calc::Obj;
using calc::Proof;
using calc::Sequent;

// ex x all y<bound (y < x); provable with witness `bound`
Formula sigma2_goal(std::uint64_t bound);

// the Ex / BAll / taut development of sigma2_goal
trans::Skel dev_skel(std::uint64_t bound);

// embed of the plain development
trans::EmbedResult embed_simple(std::uint64_t bound);

// a proof whose first reduction step fires the named case
Proof fix_a1();
Proof fix_a2();
Proof fix_a3_guard();
Proof fix_a3_main();
Proof fix_r11();
Proof fix_r121();
Proof fix_r122();
Proof fix_r1_other();
Proof fix_r2();
Proof fix_r31();
Proof fix_r32();
Proof fix_r41();
Proof fix_r42();

calc::CheckConfig default_cfg(const Proof& p);

}  // namespace opr::fix

#endif
