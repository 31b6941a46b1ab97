#include "ord/order.hpp"

#include <algorithm>

namespace opr::ord {

namespace {

using K = Ord::K;

// Treat a normal term as its list of principal summands.
std::vector<Ord> summands(const Ord& a) {
  if (a.is_zero()) return {};
  if (a.kind() == K::Sum) return a.parts();
  return {a};
}

bool is_collapse(const Ord& t) { return t.kind() == K::D || t.kind() == K::F; }

// Comparison of two collapse terms x = H(a), y = H'(b) living in the same
// region. The hull-membership surrogate decides:
//   H(a) < H'(b)  iff  a < b and G_{H'(b)}(a) < b
// with D0(a) < F(a) on equal arguments. Argument pairs failing the G-side
// condition are ordered with the smaller argument on top.
Cmp compare_collapse(const Ord& x, const Ord& y) {
  const Ord& a = x.arg();
  const Ord& b = y.arg();
  Cmp ca = compare(a, b);
  if (ca == Cmp::EQ) {
    if (x.kind() == y.kind()) return Cmp::EQ;  // same level ensured by region
    return x.kind() == K::D ? Cmp::LT : Cmp::GT;  // D0(a) < F(a)
  }
  if (ca == Cmp::LT) return gset_below(y, a, b) ? Cmp::LT : Cmp::GT;
  return gset_below(x, b, a) ? Cmp::GT : Cmp::LT;
}

Cmp compare_sums(const std::vector<Ord>& xs, const std::vector<Ord>& ys) {
  std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = compare(xs[i], ys[i]);
    if (c != Cmp::EQ) return c;
  }
  if (xs.size() == ys.size()) return Cmp::EQ;
  return xs.size() < ys.size() ? Cmp::LT : Cmp::GT;
}

}  // namespace

Cmp compare(const Ord& a, const Ord& b) {
  if (a == b) return Cmp::EQ;
  if (a.kind() == K::Mu || b.kind() == K::Mu)
    throw Undecidable("compare: unresolved mu-term");

  Region ra = region(a);
  Region rb = region(b);
  if (ra == rb) {
    // Same region; atoms and numerals of equal value were caught by ==.
    if (a.kind() == K::Sum || b.kind() == K::Sum)
      return compare_sums(summands(a), summands(b));
    if (a.kind() == K::WPow)
      return b.kind() == K::WPow ? compare(a.arg(), b.arg()) : compare(a.arg(), b);
    if (b.kind() == K::WPow)
      return flip(compare(b.arg(), a));
    if (is_collapse(a) && is_collapse(b)) return compare_collapse(a, b);
    throw std::logic_error("compare: unreachable same-region case");
  }
  return ra < rb ? Cmp::LT : Cmp::GT;
}

std::vector<Ord> gset(const Ord& a, const Ord& b) {
  std::vector<Ord> out;
  auto add = [&out](const Ord& t) {
    for (const auto& u : out)
      if (u == t) return;
    out.push_back(t);
  };
  auto walk = [&](auto&& self, const Ord& t) -> void {
    switch (t.kind()) {
      case K::Zero:
      case K::W1:
      case K::R0: return;
      default: break;
    }
    if (compare(t, a) == Cmp::LT) return;
    switch (t.kind()) {
      case K::Sum:
      case K::Mu:
        for (const auto& p : t.parts()) self(self, p);
        return;
      case K::WPow: self(self, t.arg()); return;
      case K::D:
      case K::F:
        add(t.arg());
        self(self, t.arg());
        return;
      default: return;
    }
  };
  walk(walk, b);
  std::sort(out.begin(), out.end(),
            [](const Ord& x, const Ord& y) { return Ord::syntactic_cmp(x, y) < 0; });
  return out;
}

bool gset_below(const Ord& a, const Ord& b, const Ord& c) {
  for (const auto& x : gset(a, b))
    if (compare(x, c) != Cmp::LT) return false;
  return true;
}

}  // namespace opr::ord
