#include "lang/ast.hpp"

#include <stdexcept>

namespace opr::lang {

// ---- Obj ----

Obj Obj::var(std::string name) { return make({K::Var, std::move(name), {}, {}}); }

Obj Obj::constant(const ord::Ord& v) {
  try {
    if (!(ord::region(v) < ord::Region::eq_r0()))
      throw std::invalid_argument("constant names require value < r0");
  } catch (const ord::Undecidable&) {
    // mu-valued constants are allowed; they stay evaluation-opaque
  }
  return make({K::Const, {}, v, {}});
}

Obj Obj::plus(const Obj& l, const Obj& r) { return make({K::Plus, {}, {}, {l, r}}); }
Obj Obj::times(const Obj& l, const Obj& r) { return make({K::Times, {}, {}, {l, r}}); }
Obj Obj::wexp(const Obj& e) { return make({K::WExp, {}, {}, {e}}); }

bool Obj::closed() const {
  switch (kind()) {
    case K::Var: return false;
    case K::Const: return true;
    default:
      for (const auto& k : rep_->kids)
        if (!k.closed()) return false;
      return true;
  }
}

void Obj::free_vars(std::set<std::string>& out) const {
  if (kind() == K::Var) out.insert(name());
  for (const auto& k : rep_->kids) k.free_vars(out);
}

Obj Obj::subst(const std::string& x, const Obj& t) const {
  switch (kind()) {
    case K::Var: return name() == x ? t : *this;
    case K::Const: return *this;
    case K::Plus: return plus(left().subst(x, t), right().subst(x, t));
    case K::Times: return times(left().subst(x, t), right().subst(x, t));
    case K::WExp: return wexp(expo().subst(x, t));
  }
  throw std::logic_error("Obj::subst unreachable");
}

bool Obj::operator==(const Obj& o) const {
  if (rep_ == o.rep_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case K::Var: return name() == o.name();
    case K::Const: return value() == o.value();
    default:
      for (std::size_t i = 0; i < rep_->kids.size(); ++i)
        if (!(rep_->kids[i] == o.rep_->kids[i])) return false;
      return true;
  }
}

// ---- Formula ----

Formula Formula::less(const Obj& s, const Obj& t, bool neg) {
  return make({K::Less, neg, {}, {s, t}, {}});
}
Formula Formula::rapp(std::string id, const Obj& s, const Obj& t, bool neg) {
  return make({K::RApp, neg, std::move(id), {s, t}, {}});
}
Formula Formula::p_atom(const Obj& t0, const Obj& t1, bool neg) {
  return make({K::PAtom, neg, {}, {t0, t1}, {}});
}
Formula Formula::prho_atom(const Obj& t, bool neg) {
  return make({K::PRhoAtom, neg, {}, {t}, {}});
}
Formula Formula::or_(const Formula& l, const Formula& r) {
  return make({K::Or, false, {}, {}, {l, r}});
}
Formula Formula::and_(const Formula& l, const Formula& r) {
  return make({K::And, false, {}, {}, {l, r}});
}
Formula Formula::ex(std::string v, const Formula& b) {
  return make({K::Ex, false, std::move(v), {}, {b}});
}
Formula Formula::all(std::string v, const Formula& b) {
  return make({K::All, false, std::move(v), {}, {b}});
}
Formula Formula::exb(std::string v, const Obj& t, const Formula& b) {
  return make({K::ExB, false, std::move(v), {t}, {b}});
}
Formula Formula::allb(std::string v, const Obj& t, const Formula& b) {
  return make({K::AllB, false, std::move(v), {t}, {b}});
}

bool Formula::is_atom() const {
  switch (kind()) {
    case K::Less:
    case K::RApp:
    case K::PAtom:
    case K::PRhoAtom: return true;
    default: return false;
  }
}

void Formula::free_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case K::Less:
    case K::RApp:
    case K::PAtom:
    case K::PRhoAtom:
      for (const auto& t : rep_->terms) t.free_vars(out);
      return;
    case K::Or:
    case K::And:
      child(0).free_vars(out);
      child(1).free_vars(out);
      return;
    case K::Ex:
    case K::All:
    case K::ExB:
    case K::AllB: {
      if (kind() == K::ExB || kind() == K::AllB) bound().free_vars(out);
      std::set<std::string> inner;
      body().free_vars(inner);
      inner.erase(var());
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

std::set<std::string> Formula::free_vars() const {
  std::set<std::string> out;
  free_vars(out);
  return out;
}

bool Formula::closed() const { return free_vars().empty(); }

bool Formula::operator==(const Formula& o) const {
  if (rep_ == o.rep_) return true;
  if (kind() != o.kind() || negated() != o.negated() || rep_->name != o.rep_->name)
    return false;
  if (rep_->terms.size() != o.rep_->terms.size()) return false;
  for (std::size_t i = 0; i < rep_->terms.size(); ++i)
    if (!(rep_->terms[i] == o.rep_->terms[i])) return false;
  if (rep_->kids.size() != o.rep_->kids.size()) return false;
  for (std::size_t i = 0; i < rep_->kids.size(); ++i)
    if (!(rep_->kids[i] == o.rep_->kids[i])) return false;
  return true;
}

// ---- operations ----

Formula negate(const Formula& a) {
  using K = Formula::K;
  switch (a.kind()) {
    case K::Less: return Formula::less(a.term(0), a.term(1), !a.negated());
    case K::RApp: return Formula::rapp(a.rid(), a.term(0), a.term(1), !a.negated());
    case K::PAtom: return Formula::p_atom(a.term(0), a.term(1), !a.negated());
    case K::PRhoAtom: return Formula::prho_atom(a.term(0), !a.negated());
    case K::Or: return Formula::and_(negate(a.child(0)), negate(a.child(1)));
    case K::And: return Formula::or_(negate(a.child(0)), negate(a.child(1)));
    case K::Ex: return Formula::all(a.var(), negate(a.body()));
    case K::All: return Formula::ex(a.var(), negate(a.body()));
    case K::ExB: return Formula::allb(a.var(), a.bound(), negate(a.body()));
    case K::AllB: return Formula::exb(a.var(), a.bound(), negate(a.body()));
  }
  throw std::logic_error("negate unreachable");
}

bool is_delta0(const Formula& a) {
  using K = Formula::K;
  switch (a.kind()) {
    case K::PAtom:
    case K::PRhoAtom: return false;
    case K::Less:
    case K::RApp: return true;
    case K::Or:
    case K::And: return is_delta0(a.child(0)) && is_delta0(a.child(1));
    case K::Ex:
    case K::All: return false;
    case K::ExB:
    case K::AllB: return is_delta0(a.body());
  }
  return false;
}

unsigned dg(const Formula& a) {
  using K = Formula::K;
  if (a.is_atom() || is_delta0(a)) return 1;
  switch (a.kind()) {
    case K::Or:
    case K::And: return dg(a.child(0)) + dg(a.child(1)) + 2;
    case K::Ex:
    case K::All:
    case K::ExB:
    case K::AllB: return dg(a.body()) + 2;
    default: throw std::logic_error("dg unreachable");
  }
}

namespace {
bool sigma_shape(const Formula& a, Formula::K q) {
  if (a.kind() == q) return sigma_shape(a.body(), q);
  return is_delta0(a);
}
}  // namespace

FClass classify(const Formula& a) {
  using K = Formula::K;
  if (a.is_atom()) return FClass::Literal;
  if (is_delta0(a)) return FClass::Delta0;
  if (a.kind() == K::Ex && sigma_shape(a, K::Ex)) return FClass::Sigma1;
  if (a.kind() == K::All && sigma_shape(a, K::All)) return FClass::Pi1;
  if (a.kind() == K::Or || a.kind() == K::Ex) return FClass::EForm;
  return FClass::Other;
}

bool is_cuttable(const Formula& a) {
  using K = Formula::K;
  if (a.is_atom() || is_delta0(a)) return true;
  return a.kind() == K::Or || a.kind() == K::Ex || a.kind() == K::ExB;
}

std::string fresh_var(const std::set<std::string>& avoid, const std::string& hint) {
  if (!avoid.count(hint)) return hint;
  for (int i = 0;; ++i) {
    std::string c = hint + "'" + (i ? std::to_string(i) : "");
    if (!avoid.count(c)) return c;
  }
}

Formula subst(const Formula& a, const std::string& x, const Obj& t) {
  using K = Formula::K;
  switch (a.kind()) {
    case K::Less: return Formula::less(a.term(0).subst(x, t), a.term(1).subst(x, t), a.negated());
    case K::RApp:
      return Formula::rapp(a.rid(), a.term(0).subst(x, t), a.term(1).subst(x, t), a.negated());
    case K::PAtom:
      return Formula::p_atom(a.term(0).subst(x, t), a.term(1).subst(x, t), a.negated());
    case K::PRhoAtom: return Formula::prho_atom(a.term(0).subst(x, t), a.negated());
    case K::Or: return Formula::or_(subst(a.child(0), x, t), subst(a.child(1), x, t));
    case K::And: return Formula::and_(subst(a.child(0), x, t), subst(a.child(1), x, t));
    case K::Ex:
    case K::All:
    case K::ExB:
    case K::AllB: {
      bool bounded = a.kind() == K::ExB || a.kind() == K::AllB;
      Obj nb = bounded ? a.bound().subst(x, t) : Obj::num(0);
      if (a.var() == x) {  // shadowed: only the bound is open to x
        if (a.kind() == K::Ex) return a;
        if (a.kind() == K::All) return a;
        if (a.kind() == K::ExB) return Formula::exb(a.var(), nb, a.body());
        return Formula::allb(a.var(), nb, a.body());
      }
      std::set<std::string> tv;
      t.free_vars(tv);
      Formula b = a.body();
      std::string v = a.var();
      if (tv.count(v)) {  // capture: rename the bound variable first
        std::set<std::string> avoid = tv;
        b.free_vars(avoid);
        avoid.insert(x);
        std::string nv = fresh_var(avoid, v);
        b = subst(b, v, Obj::var(nv));
        v = nv;
      }
      b = subst(b, x, t);
      if (a.kind() == K::Ex) return Formula::ex(v, b);
      if (a.kind() == K::All) return Formula::all(v, b);
      if (a.kind() == K::ExB) return Formula::exb(v, nb, b);
      return Formula::allb(v, nb, b);
    }
  }
  throw std::logic_error("subst unreachable");
}

Formula relativize(const Formula& a, const Obj& y) {
  using K = Formula::K;
  switch (a.kind()) {
    case K::Less:
    case K::RApp:
    case K::PAtom:
    case K::PRhoAtom: return a;
    case K::Or: return Formula::or_(relativize(a.child(0), y), relativize(a.child(1), y));
    case K::And: return Formula::and_(relativize(a.child(0), y), relativize(a.child(1), y));
    case K::Ex: return Formula::exb(a.var(), y, relativize(a.body(), y));
    case K::All: return Formula::allb(a.var(), y, relativize(a.body(), y));
    case K::ExB: return Formula::exb(a.var(), a.bound(), relativize(a.body(), y));
    case K::AllB: return Formula::allb(a.var(), a.bound(), relativize(a.body(), y));
  }
  throw std::logic_error("relativize unreachable");
}

}  // namespace opr::lang
