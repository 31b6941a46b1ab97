#include "lang/eval.hpp"

#include "io/ordio.hpp"
#include "ord/arith.hpp"
#include "ord/order.hpp"

namespace opr::lang {

using ord::Cmp;
using ord::Ord;

void EvalCtx::add_pool(const Ord& t) {
  for (const auto& u : pool)
    if (u == t) return;
  pool.push_back(t);
}

Ord eval_term(const Obj& t) {
  switch (t.kind()) {
    case Obj::K::Var: throw std::invalid_argument("eval_term: open term");
    case Obj::K::Const: return t.value();
    case Obj::K::Plus: return ord::ord_add(eval_term(t.left()), eval_term(t.right()));
    case Obj::K::Times: return ord::ord_mul(eval_term(t.left()), eval_term(t.right()));
    case Obj::K::WExp: return Ord::wpow(eval_term(t.expo()));
  }
  throw std::logic_error("eval_term unreachable");
}

Ord mj(const Obj& t) { return t.closed() ? eval_term(t) : Ord::r0(); }

namespace {

Tri eval_rapp(const std::string& id, const Ord& stage, const Ord& arg, EvalCtx& ctx);

Tri eval_pos_atom(const Formula& a, EvalCtx& ctx) {
  using K = Formula::K;
  try {
    switch (a.kind()) {
      case K::Less: {
        Cmp c = ord::compare(eval_term(a.term(0)), eval_term(a.term(1)));
        return c == Cmp::LT ? Tri::True : Tri::False;
      }
      case K::PAtom: {
        Ord v0 = eval_term(a.term(0));
        Ord v1 = eval_term(a.term(1));
        bool ok = v0.kind() == Ord::K::D && v0.dlevel() == 0 && v1.kind() == Ord::K::F &&
                  v0.arg() == v1.arg();
        return ok ? Tri::True : Tri::False;
      }
      case K::PRhoAtom: {
        Ord v = eval_term(a.term(0));
        return v.kind() == Ord::K::D && v.dlevel() == 1 ? Tri::True : Tri::False;
      }
      case K::RApp:
        return eval_rapp(a.rid(), eval_term(a.term(0)), eval_term(a.term(1)), ctx);
      default: throw std::invalid_argument("eval_literal: not a literal");
    }
  } catch (const ord::Undecidable&) {
    return Tri::Undecided;
  }
}

Tri eval_rapp(const std::string& id, const Ord& stage, const Ord& arg, EvalCtx& ctx) {
  auto def = ctx.rdefs.find(id);
  if (def == ctx.rdefs.end()) return Tri::Undecided;
  try {
    if (!(ord::region(stage) < ord::Region::countable())) return Tri::Undecided;
  } catch (const ord::Undecidable&) {
    return Tri::Undecided;
  }
  std::string key = id + "@" + io::print_ord(stage) + "|" + io::print_ord(arg);
  if (auto it = ctx.rmemo.find(key); it != ctx.rmemo.end()) return it->second;
  if (ctx.rstack.count(key)) return Tri::Undecided;  // non-wellfounded definition
  ctx.rstack.insert(key);
  Formula inst = subst(subst(def->second.body, def->second.stage_var, Obj::constant(stage)),
                       def->second.arg_var, Obj::constant(arg));
  Tri r = eval_delta0(inst, ctx);
  ctx.rstack.erase(key);
  ctx.rmemo[key] = r;
  return r;
}

}  // namespace

Tri eval_literal(const Formula& lit, EvalCtx& ctx) {
  Tri pos = eval_pos_atom(lit, ctx);
  return lit.negated() ? tri_not(pos) : pos;
}

Tri eval_delta0(const Formula& a, EvalCtx& ctx) {
  using K = Formula::K;
  if (!ctx.tick()) return Tri::Undecided;
  if (a.is_atom()) return eval_literal(a, ctx);
  switch (a.kind()) {
    case K::Or: {
      Tri l = eval_delta0(a.child(0), ctx);
      if (l == Tri::True) return Tri::True;
      Tri r = eval_delta0(a.child(1), ctx);
      if (r == Tri::True) return Tri::True;
      return (l == Tri::False && r == Tri::False) ? Tri::False : Tri::Undecided;
    }
    case K::And: {
      Tri l = eval_delta0(a.child(0), ctx);
      if (l == Tri::False) return Tri::False;
      Tri r = eval_delta0(a.child(1), ctx);
      if (r == Tri::False) return Tri::False;
      return (l == Tri::True && r == Tri::True) ? Tri::True : Tri::Undecided;
    }
    case K::ExB:
    case K::AllB: {
      bool existential = a.kind() == K::ExB;
      Ord vb;
      try {
        vb = eval_term(a.bound());
      } catch (const ord::Undecidable&) {
        return Tri::Undecided;
      }
      ord::Region r;
      try {
        r = ord::region(vb);
      } catch (const ord::Undecidable&) {
        return Tri::Undecided;
      }
      if (r.tag == ord::Region::Tag::Finite) {
        bool any_undecided = false;
        for (std::uint64_t i = 0; i < r.n; ++i) {
          Tri v = eval_delta0(subst(a.body(), a.var(), Obj::num(i)), ctx);
          if (existential && v == Tri::True) return Tri::True;
          if (!existential && v == Tri::False) return Tri::False;
          if (v == Tri::Undecided) any_undecided = true;
        }
        if (any_undecided) return Tri::Undecided;
        return existential ? Tri::False : Tri::True;
      }
      // transfinite bound: certify through the candidate pool only
      for (const auto& c : ctx.pool) {
        try {
          if (ord::compare(c, vb) != Cmp::LT) continue;
        } catch (const ord::Undecidable&) {
          continue;
        }
        Tri v = eval_delta0(subst(a.body(), a.var(), Obj::constant(c)), ctx);
        if (existential && v == Tri::True) return Tri::True;
        if (!existential && v == Tri::False) return Tri::False;
      }
      return Tri::Undecided;
    }
    default: throw std::invalid_argument("eval_delta0: sentence not Delta0");
  }
}

std::optional<Ord> resolve_mu(const Formula& a, const std::string& y, EvalCtx& ctx) {
  // a finite search bound is visible when A(y) has the shape  y < n  (up to a
  // leading conjunction)
  const Formula* guard = &a;
  while (guard->kind() == Formula::K::And) guard = &guard->child(0);
  if (guard->kind() != Formula::K::Less || guard->negated()) return std::nullopt;
  if (guard->term(0).kind() != Obj::K::Var || guard->term(0).name() != y) return std::nullopt;
  if (!guard->term(1).closed()) return std::nullopt;
  Ord vb;
  try {
    vb = eval_term(guard->term(1));
    if (ord::region(vb).tag != ord::Region::Tag::Finite) return std::nullopt;
  } catch (const ord::Undecidable&) {
    return std::nullopt;
  }
  for (std::uint64_t i = 0; i < vb.nat_value(); ++i) {
    Tri v = eval_delta0(subst(a, y, Obj::num(i)), ctx);
    if (v == Tri::True) return Ord::nat(i);
    if (v == Tri::Undecided) return std::nullopt;
  }
  return Ord::zero();  // bound certifies there is no witness
}

}  // namespace opr::lang
