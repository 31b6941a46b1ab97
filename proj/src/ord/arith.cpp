#include "ord/arith.hpp"

#include "ord/order.hpp"

namespace opr::ord {

namespace {
using K = Ord::K;

std::vector<Ord> summands(const Ord& a) {
  if (a.is_zero()) return {};
  if (a.kind() == K::Sum) return a.parts();
  return {a};
}
}  // namespace

Ord nsum(const Ord& a, const Ord& b) {
  std::vector<Ord> ps = summands(a);
  std::vector<Ord> qs = summands(b);
  ps.insert(ps.end(), qs.begin(), qs.end());
  return Ord::sum(std::move(ps));
}

Ord nsum(const Ord& a, const Ord& b, const Ord& c) { return nsum(nsum(a, b), c); }

Ord exponent_of(const Ord& p) {
  switch (p.kind()) {
    case K::WPow: return p.arg();
    case K::W1:
    case K::R0:
    case K::D:
    case K::F: return p;  // epsilon atoms: t = w^t
    case K::Mu: throw Undecidable("exponent of mu-term");
    default: throw std::invalid_argument("exponent_of: not a principal term");
  }
}

Ord nprod(const Ord& a, const Ord& b) {
  if (a.is_zero() || b.is_zero()) return Ord::zero();
  std::vector<Ord> out;
  for (const auto& p : summands(a))
    for (const auto& q : summands(b))
      out.push_back(Ord::wpow(nsum(exponent_of(p), exponent_of(q))));
  return Ord::sum(std::move(out));
}

Ord ord_add(const Ord& a, const Ord& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  std::vector<Ord> ps = summands(a);
  std::vector<Ord> qs = summands(b);
  std::vector<Ord> out;
  for (const auto& p : ps) {
    if (compare(p, qs.front()) == Cmp::LT) break;  // absorbed by the lead of b
    out.push_back(p);
  }
  out.insert(out.end(), qs.begin(), qs.end());
  return Ord::sum(std::move(out));
}

Ord ord_mul(const Ord& a, const Ord& b) {
  if (a.is_zero() || b.is_zero()) return Ord::zero();
  Ord lead_exp = exponent_of(summands(a).front());
  Ord acc = Ord::zero();
  for (const auto& q : summands(b)) {
    Ord e = exponent_of(q);
    Ord piece = e.is_zero() ? a : Ord::wpow(ord_add(lead_exp, e));
    acc = ord_add(acc, piece);
  }
  return acc;
}

}  // namespace opr::ord
