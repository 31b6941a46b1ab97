#ifndef OPR_ORD_CNF_HPP
#define OPR_ORD_CNF_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ord/term.hpp"

namespace opr::ord {

struct OutsideFragment : std::runtime_error {
  OutsideFragment() : std::runtime_error("term outside the epsilon_0 fragment") {}
};

// Cantor normal form over naturals: sum of w^exp * coeff with structurally
// distinct exponents in decreasing order. Plain data for the test oracles.
struct Cnf {
  std::vector<std::pair<Cnf, std::uint64_t>> monos;

  bool operator==(const Cnf& o) const { return monos == o.monos; }
  bool is_zero() const { return monos.empty(); }
};

// Structural translation of an epsilon_0-fragment term (no w1/r0/D/F/mu).
// Throws OutsideFragment otherwise.
Cnf to_cnf_small(const Ord& a);

}  // namespace opr::ord

#endif
