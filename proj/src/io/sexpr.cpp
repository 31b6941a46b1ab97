#include "io/sexpr.hpp"

#include <cctype>

namespace opr::io {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
      if (s[i] == ';') {  // comment to end of line
        while (i < s.size() && s[i] != '\n') ++i;
        continue;
      }
      break;
    }
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

bool atom_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ';';
}

Sexpr read_one(Cursor& c) {
  c.skip_ws();
  if (c.i >= c.s.size()) throw ParseError("unexpected end of input");
  if (c.s[c.i] == '(') {
    ++c.i;
    std::vector<Sexpr> items;
    while (true) {
      c.skip_ws();
      if (c.i >= c.s.size()) throw ParseError("unclosed '('");
      if (c.s[c.i] == ')') { ++c.i; break; }
      items.push_back(read_one(c));
    }
    return Sexpr::list(std::move(items));
  }
  if (c.s[c.i] == ')') throw ParseError("unexpected ')'");
  std::size_t start = c.i;
  while (c.i < c.s.size() && atom_char(c.s[c.i])) ++c.i;
  return Sexpr::sym(c.s.substr(start, c.i - start));
}

}  // namespace

Sexpr parse_sexpr(const std::string& text) {
  Cursor c{text};
  Sexpr e = read_one(c);
  if (!c.done()) throw ParseError("trailing input after expression");
  return e;
}

std::vector<Sexpr> parse_all(const std::string& text) {
  Cursor c{text};
  std::vector<Sexpr> out;
  while (!c.done()) out.push_back(read_one(c));
  return out;
}

std::string Sexpr::print() const {
  if (atom) return text;
  std::string out = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].print();
  }
  out += ')';
  return out;
}

}  // namespace opr::io
