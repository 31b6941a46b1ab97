#include "io/ordio.hpp"

#include <cctype>

namespace opr::io {

using ord::Ord;

namespace {
bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace

Ord ord_of_sexpr(const Sexpr& e) {
  if (e.atom) {
    if (e.text == "0") return Ord::zero();
    if (e.text == "w1") return Ord::w1();
    if (e.text == "r0") return Ord::r0();
    if (all_digits(e.text)) return Ord::nat(std::stoull(e.text));
    throw ParseError("unknown ordinal atom '" + e.text + "'");
  }
  const std::string& h = e.head();
  if (h == "+") {
    if (e.len() < 2) throw ParseError("(+ ...) needs arguments");
    std::vector<Ord> parts;
    for (std::size_t i = 1; i < e.len(); ++i) parts.push_back(ord_of_sexpr(e.at(i)));
    return Ord::sum(std::move(parts));
  }
  if (h == "w^") {
    if (e.len() != 2) throw ParseError("(w^ a) needs one argument");
    return Ord::wpow(ord_of_sexpr(e.at(1)));
  }
  if (h == "D0" || h == "D1") {
    if (e.len() != 2) throw ParseError("(" + h + " a) needs one argument");
    return Ord::d(h == "D0" ? 0 : 1, ord_of_sexpr(e.at(1)));
  }
  if (h == "F") {
    if (e.len() != 2) throw ParseError("(F a) needs one argument");
    return Ord::f(ord_of_sexpr(e.at(1)));
  }
  if (h == "mu") {
    if (e.len() < 2 || !e.at(1).atom) throw ParseError("(mu <id> ...) needs an id");
    std::vector<Ord> args;
    for (std::size_t i = 2; i < e.len(); ++i) args.push_back(ord_of_sexpr(e.at(i)));
    return Ord::mu(e.at(1).text, std::move(args));
  }
  throw ParseError("unknown ordinal constructor '" + h + "'");
}

Ord parse_ord(const std::string& text) { return ord_of_sexpr(parse_sexpr(text)); }

Sexpr ord_to_sexpr(const Ord& a) {
  using K = Ord::K;
  if (a.is_nat()) return Sexpr::sym(std::to_string(a.nat_value()));
  switch (a.kind()) {
    case K::W1: return Sexpr::sym("w1");
    case K::R0: return Sexpr::sym("r0");
    case K::Sum: {
      std::vector<Sexpr> xs{Sexpr::sym("+")};
      for (const auto& p : a.parts()) xs.push_back(ord_to_sexpr(p));
      return Sexpr::list(std::move(xs));
    }
    case K::WPow: return Sexpr::list({Sexpr::sym("w^"), ord_to_sexpr(a.arg())});
    case K::D:
      return Sexpr::list({Sexpr::sym(a.dlevel() == 0 ? "D0" : "D1"), ord_to_sexpr(a.arg())});
    case K::F: return Sexpr::list({Sexpr::sym("F"), ord_to_sexpr(a.arg())});
    case K::Mu: {
      std::vector<Sexpr> xs{Sexpr::sym("mu"), Sexpr::sym(a.mu_id())};
      for (const auto& x : a.args()) xs.push_back(ord_to_sexpr(x));
      return Sexpr::list(std::move(xs));
    }
    default: throw std::logic_error("ord_to_sexpr: unreachable");
  }
}

std::string print_ord(const Ord& a) { return ord_to_sexpr(a).print(); }

}  // namespace opr::io
