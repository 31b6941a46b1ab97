#include "io/formio.hpp"

#include <cctype>

#include "io/ordio.hpp"

namespace opr::io {

using lang::Formula;
using lang::Obj;

namespace {
bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace

Obj obj_of_sexpr(const Sexpr& e) {
  if (e.atom) {
    if (e.text == "0" || e.text == "w1" || all_digits(e.text))
      return Obj::constant(ord_of_sexpr(e));
    if (e.text == "r0") throw ParseError("r0 is not a legal constant name");
    return Obj::var(e.text);
  }
  const std::string& h = e.head();
  if (h == "+") {
    if (e.len() != 3) throw ParseError("(+ s t) is binary in object terms");
    return Obj::plus(obj_of_sexpr(e.at(1)), obj_of_sexpr(e.at(2)));
  }
  if (h == "*") {
    if (e.len() != 3) throw ParseError("(* s t) is binary");
    return Obj::times(obj_of_sexpr(e.at(1)), obj_of_sexpr(e.at(2)));
  }
  if (h == "w^") {
    if (e.len() != 2) throw ParseError("(w^ s) needs one argument");
    return Obj::wexp(obj_of_sexpr(e.at(1)));
  }
  if (h == "D0" || h == "D1" || h == "F" || h == "mu") return Obj::constant(ord_of_sexpr(e));
  if (h == "c") {
    if (e.len() != 2) throw ParseError("(c <ord>) needs one argument");
    return Obj::constant(ord_of_sexpr(e.at(1)));
  }
  throw ParseError("unknown object-term constructor '" + h + "'");
}

Sexpr obj_to_sexpr(const Obj& t) {
  switch (t.kind()) {
    case Obj::K::Var: return Sexpr::sym(t.name());
    case Obj::K::Const: {
      const ord::Ord& v = t.value();
      using OK = ord::Ord::K;
      // heads that cannot be mistaken for object operators print bare
      if (v.is_nat() || v.kind() == OK::W1 || v.kind() == OK::D || v.kind() == OK::F ||
          v.kind() == OK::Mu)
        return ord_to_sexpr(v);
      return Sexpr::list({Sexpr::sym("c"), ord_to_sexpr(v)});
    }
    case Obj::K::Plus:
      return Sexpr::list({Sexpr::sym("+"), obj_to_sexpr(t.left()), obj_to_sexpr(t.right())});
    case Obj::K::Times:
      return Sexpr::list({Sexpr::sym("*"), obj_to_sexpr(t.left()), obj_to_sexpr(t.right())});
    case Obj::K::WExp: return Sexpr::list({Sexpr::sym("w^"), obj_to_sexpr(t.expo())});
  }
  throw std::logic_error("obj_to_sexpr unreachable");
}

Formula formula_of_sexpr(const Sexpr& e) {
  if (e.atom) throw ParseError("formula expected, got atom '" + e.text + "'");
  const std::string& h = e.head();
  if (h == "<") {
    if (e.len() != 3) throw ParseError("(< s t)");
    return Formula::less(obj_of_sexpr(e.at(1)), obj_of_sexpr(e.at(2)));
  }
  if (h == "R") {
    if (e.len() != 4 || !e.at(1).atom) throw ParseError("(R <id> s t)");
    return Formula::rapp(e.at(1).text, obj_of_sexpr(e.at(2)), obj_of_sexpr(e.at(3)));
  }
  if (h == "P") {
    if (e.len() != 3) throw ParseError("(P s t)");
    return Formula::p_atom(obj_of_sexpr(e.at(1)), obj_of_sexpr(e.at(2)));
  }
  if (h == "Pr0") {
    if (e.len() != 2) throw ParseError("(Pr0 t)");
    return Formula::prho_atom(obj_of_sexpr(e.at(1)));
  }
  if (h == "not") {
    if (e.len() != 2) throw ParseError("(not <atom>)");
    Formula a = formula_of_sexpr(e.at(1));
    if (!a.is_atom()) throw ParseError("(not ...) applies to atoms only (formulas are NNF)");
    return lang::negate(a);
  }
  if (h == "or" || h == "and") {
    if (e.len() != 3) throw ParseError("(" + h + " A B)");
    Formula l = formula_of_sexpr(e.at(1));
    Formula r = formula_of_sexpr(e.at(2));
    return h == "or" ? Formula::or_(l, r) : Formula::and_(l, r);
  }
  if (h == "ex" || h == "all") {
    if (e.len() != 3 || !e.at(1).atom) throw ParseError("(" + h + " x A)");
    Formula b = formula_of_sexpr(e.at(2));
    return h == "ex" ? Formula::ex(e.at(1).text, b) : Formula::all(e.at(1).text, b);
  }
  if (h == "exb" || h == "allb") {
    if (e.len() != 4 || !e.at(1).atom) throw ParseError("(" + h + " x t A)");
    Obj t = obj_of_sexpr(e.at(2));
    Formula b = formula_of_sexpr(e.at(3));
    return h == "exb" ? Formula::exb(e.at(1).text, t, b) : Formula::allb(e.at(1).text, t, b);
  }
  throw ParseError("unknown formula constructor '" + h + "'");
}

Sexpr formula_to_sexpr(const Formula& a) {
  using K = Formula::K;
  auto wrap_neg = [&a](Sexpr atom) {
    return a.negated() ? Sexpr::list({Sexpr::sym("not"), std::move(atom)}) : atom;
  };
  switch (a.kind()) {
    case K::Less:
      return wrap_neg(
          Sexpr::list({Sexpr::sym("<"), obj_to_sexpr(a.term(0)), obj_to_sexpr(a.term(1))}));
    case K::RApp:
      return wrap_neg(Sexpr::list({Sexpr::sym("R"), Sexpr::sym(a.rid()),
                                   obj_to_sexpr(a.term(0)), obj_to_sexpr(a.term(1))}));
    case K::PAtom:
      return wrap_neg(
          Sexpr::list({Sexpr::sym("P"), obj_to_sexpr(a.term(0)), obj_to_sexpr(a.term(1))}));
    case K::PRhoAtom:
      return wrap_neg(Sexpr::list({Sexpr::sym("Pr0"), obj_to_sexpr(a.term(0))}));
    case K::Or:
      return Sexpr::list(
          {Sexpr::sym("or"), formula_to_sexpr(a.child(0)), formula_to_sexpr(a.child(1))});
    case K::And:
      return Sexpr::list(
          {Sexpr::sym("and"), formula_to_sexpr(a.child(0)), formula_to_sexpr(a.child(1))});
    case K::Ex:
      return Sexpr::list({Sexpr::sym("ex"), Sexpr::sym(a.var()), formula_to_sexpr(a.body())});
    case K::All:
      return Sexpr::list({Sexpr::sym("all"), Sexpr::sym(a.var()), formula_to_sexpr(a.body())});
    case K::ExB:
      return Sexpr::list({Sexpr::sym("exb"), Sexpr::sym(a.var()), obj_to_sexpr(a.bound()),
                          formula_to_sexpr(a.body())});
    case K::AllB:
      return Sexpr::list({Sexpr::sym("allb"), Sexpr::sym(a.var()), obj_to_sexpr(a.bound()),
                          formula_to_sexpr(a.body())});
  }
  throw std::logic_error("formula_to_sexpr unreachable");
}

Obj parse_obj(const std::string& text) { return obj_of_sexpr(parse_sexpr(text)); }
std::string print_obj(const Obj& t) { return obj_to_sexpr(t).print(); }
Formula parse_formula(const std::string& text) { return formula_of_sexpr(parse_sexpr(text)); }
std::string print_formula(const Formula& a) { return formula_to_sexpr(a).print(); }

}  // namespace opr::io
