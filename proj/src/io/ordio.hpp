#ifndef OPR_IO_ORDIO_HPP
#define OPR_IO_ORDIO_HPP

#include <string>

#include "io/sexpr.hpp"
#include "ord/term.hpp"

namespace opr::io {

// Grammar: 0 | w1 | r0 | <decimal> | (+ a b ...) | (w^ a) | (D0 a) | (D1 a)
//          | (F a) | (mu <id> a ...)
// Parsing normalizes; printing is the inverse on normal forms.
ord::Ord ord_of_sexpr(const Sexpr& e);
ord::Ord parse_ord(const std::string& text);
Sexpr ord_to_sexpr(const ord::Ord& a);
std::string print_ord(const ord::Ord& a);

}  // namespace opr::io

#endif
