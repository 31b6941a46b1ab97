#ifndef OPR_IO_SEXPR_HPP
#define OPR_IO_SEXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace opr::io {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Atom or list. Atoms keep their literal spelling.
struct Sexpr {
  bool atom = true;
  std::string text;
  std::vector<Sexpr> items;

  static Sexpr sym(std::string s) { return Sexpr{true, std::move(s), {}}; }
  static Sexpr list(std::vector<Sexpr> xs) { return Sexpr{false, {}, std::move(xs)}; }

  bool is_sym(const std::string& s) const { return atom && text == s; }
  const Sexpr& at(std::size_t i) const {
    if (atom || i >= items.size()) throw ParseError("malformed expression near '" + text + "'");
    return items[i];
  }
  std::size_t len() const { return atom ? 0 : items.size(); }
  const std::string& head() const {
    if (atom || items.empty() || !items[0].atom) throw ParseError("expected list head symbol");
    return items[0].text;
  }
  std::string print() const;
};

Sexpr parse_sexpr(const std::string& text);
std::vector<Sexpr> parse_all(const std::string& text);

}  // namespace opr::io

#endif
