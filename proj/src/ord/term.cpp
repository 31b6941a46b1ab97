#include "ord/term.hpp"

#include <algorithm>

#include "ord/order.hpp"

namespace opr::ord {

namespace detail {
// Sorting must be total even for order-opaque mu parts; fall back to the
// syntactic order there so normal forms stay canonical.
int cmp_for_sort(const Ord& a, const Ord& b) {
  try {
    switch (compare(a, b)) {
      case Cmp::LT: return -1;
      case Cmp::EQ: return 0;
      case Cmp::GT: return 1;
    }
  } catch (const Undecidable&) {
  }
  return Ord::syntactic_cmp(a, b);
}
}  // namespace detail

Ord Ord::make(Rep r) { return Ord(std::make_shared<const Rep>(std::move(r))); }

Ord Ord::zero() {
  static const Ord z = make({K::Zero});
  return z;
}
Ord Ord::w1() {
  static const Ord t = make({K::W1});
  return t;
}
Ord Ord::r0() {
  static const Ord t = make({K::R0});
  return t;
}

Ord Ord::nat(std::uint64_t n) {
  if (n == 0) return zero();
  std::vector<Ord> ones(n, wpow(zero()));
  return sum(std::move(ones));
}

Ord Ord::wpow(const Ord& e) {
  switch (e.kind()) {
    case K::W1:
    case K::R0:
    case K::D:
    case K::F:
      return e;  // epsilon atoms absorb w^
    default:
      return make({K::WPow, 0, {}, {e}});
  }
}

Ord Ord::sum(std::vector<Ord> parts) {
  std::vector<Ord> flat;
  for (auto& p : parts) {
    if (p.is_zero()) continue;
    if (p.kind() == K::Sum) flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    else flat.push_back(p);
  }
  if (flat.empty()) return zero();
  if (flat.size() == 1) return flat[0];
  std::stable_sort(flat.begin(), flat.end(), [](const Ord& a, const Ord& b) {
    return detail::cmp_for_sort(a, b) > 0;  // non-increasing
  });
  return make({K::Sum, 0, {}, std::move(flat)});
}

Ord Ord::d(int level, const Ord& a) {
  if (level != 0 && level != 1) throw std::invalid_argument("D level must be 0 or 1");
  return make({K::D, level, {}, {a}});
}

Ord Ord::f(const Ord& a) { return make({K::F, 0, {}, {a}}); }

Ord Ord::mu(std::string id, std::vector<Ord> args) {
  return make({K::Mu, 0, std::move(id), std::move(args)});
}

bool Ord::is_nat() const {
  switch (kind()) {
    case K::Zero: return true;
    case K::WPow: return arg().is_zero();
    case K::Sum:
      for (const auto& p : parts())
        if (p.kind() != K::WPow || !p.arg().is_zero()) return false;
      return true;
    default: return false;
  }
}

std::uint64_t Ord::nat_value() const {
  switch (kind()) {
    case K::Zero: return 0;
    case K::WPow: return 1;
    default: return parts().size();
  }
}

bool Ord::contains_mu() const {
  if (kind() == K::Mu) return true;
  for (const auto& k : rep_->kids)
    if (k.contains_mu()) return true;
  return false;
}

std::size_t Ord::size() const {
  std::size_t s = 1;
  for (const auto& k : rep_->kids) s += k.size();
  return s;
}

bool Ord::equal(const Ord& a, const Ord& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case K::Zero:
    case K::W1:
    case K::R0: return true;
    case K::D:
      if (a.dlevel() != b.dlevel()) return false;
      [[fallthrough]];
    case K::WPow:
    case K::F: return equal(a.arg(), b.arg());
    case K::Mu:
      if (a.mu_id() != b.mu_id()) return false;
      [[fallthrough]];
    case K::Sum: {
      const auto& x = a.rep_->kids;
      const auto& y = b.rep_->kids;
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!equal(x[i], y[i])) return false;
      return true;
    }
  }
  return false;
}

int Ord::syntactic_cmp(const Ord& a, const Ord& b) {
  auto rank = [](const Ord& t) { return static_cast<int>(t.kind()); };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (a.kind() == K::D && a.dlevel() != b.dlevel()) return a.dlevel() < b.dlevel() ? -1 : 1;
  if (a.kind() == K::Mu && a.mu_id() != b.mu_id()) return a.mu_id() < b.mu_id() ? -1 : 1;
  const auto& x = a.rep_->kids;
  const auto& y = b.rep_->kids;
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (int c = syntactic_cmp(x[i], y[i]); c != 0) return c;
  return 0;
}

Region region(const Ord& a) {
  using K = Ord::K;
  switch (a.kind()) {
    case K::Zero: return Region::finite(0);
    case K::W1: return Region::eq_w1();
    case K::R0: return Region::eq_r0();
    case K::D: return a.dlevel() == 0 ? Region::countable() : Region::middle();
    case K::F: return Region::countable();
    case K::Mu: throw Undecidable("region of mu-term");
    case K::WPow: {
      Region re = region(a.arg());
      switch (re.tag) {
        case Region::Tag::Finite:
          return re.n == 0 ? Region::finite(1) : Region::countable();
        case Region::Tag::Countable: return Region::countable();
        case Region::Tag::Middle: return Region::middle();
        default: return Region::above();  // exponent >= r0 (EqW1/EqR0 atoms never appear here)
      }
    }
    case K::Sum: {
      // Mu anywhere in the sum makes placement unreliable.
      if (a.contains_mu()) throw Undecidable("region of sum with mu part");
      Region lead = region(a.parts()[0]);
      switch (lead.tag) {
        case Region::Tag::Finite: return Region::finite(a.parts().size());
        case Region::Tag::Countable: return Region::countable();
        case Region::Tag::EqW1: return Region::middle();   // w1 # (something > 0)
        case Region::Tag::Middle: return Region::middle();
        default: return Region::above();                   // r0 # (something > 0)
      }
    }
  }
  throw std::logic_error("region: unreachable");
}

Ord renormalize(const Ord& a) {
  using K = Ord::K;
  switch (a.kind()) {
    case K::Zero: return Ord::zero();
    case K::W1: return Ord::w1();
    case K::R0: return Ord::r0();
    case K::WPow: return Ord::wpow(renormalize(a.arg()));
    case K::D: return Ord::d(a.dlevel(), renormalize(a.arg()));
    case K::F: return Ord::f(renormalize(a.arg()));
    case K::Mu: {
      std::vector<Ord> as;
      as.reserve(a.args().size());
      for (const auto& x : a.args()) as.push_back(renormalize(x));
      return Ord::mu(a.mu_id(), std::move(as));
    }
    case K::Sum: {
      std::vector<Ord> ps;
      ps.reserve(a.parts().size());
      for (const auto& x : a.parts()) ps.push_back(renormalize(x));
      return Ord::sum(std::move(ps));
    }
  }
  throw std::logic_error("renormalize: unreachable");
}

}  // namespace opr::ord
