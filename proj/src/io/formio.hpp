#ifndef OPR_IO_FORMIO_HPP
#define OPR_IO_FORMIO_HPP

#include <string>

#include "io/sexpr.hpp"
#include "lang/ast.hpp"

namespace opr::io {

// Object terms: bare symbols are variables, except 0, w1 and decimals which
// name constants; (+ s t), (* s t), (w^ s) are the object operations;
// (D0 a), (D1 a), (F a), (mu ...) and (c <ord>) are ordinal constants.
lang::Obj obj_of_sexpr(const Sexpr& e);
Sexpr obj_to_sexpr(const lang::Obj& t);
lang::Obj parse_obj(const std::string& text);
std::string print_obj(const lang::Obj& t);

// Formulas: (< s t), (R <id> s t), (P s t), (Pr0 t), (not <atom>),
// (or A B), (and A B), (ex x A), (all x A), (exb x t A), (allb x t A).
lang::Formula formula_of_sexpr(const Sexpr& e);
Sexpr formula_to_sexpr(const lang::Formula& a);
lang::Formula parse_formula(const std::string& text);
std::string print_formula(const lang::Formula& a);

}  // namespace opr::io

#endif
