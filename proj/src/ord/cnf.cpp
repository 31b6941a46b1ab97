#include "ord/cnf.hpp"

namespace opr::ord {

Cnf to_cnf_small(const Ord& a) {
  using K = Ord::K;
  switch (a.kind()) {
    case K::Zero: return {};
    case K::WPow: {
      Cnf e = to_cnf_small(a.arg());
      return Cnf{{{e, 1}}};
    }
    case K::Sum: {
      Cnf out;
      for (const auto& p : a.parts()) {
        Cnf m = to_cnf_small(p);  // principal: exactly one monomial
        if (!out.monos.empty() && out.monos.back().first == m.monos[0].first)
          out.monos.back().second += m.monos[0].second;
        else
          out.monos.push_back(m.monos[0]);
      }
      return out;
    }
    default: throw OutsideFragment();
  }
}

}  // namespace opr::ord
