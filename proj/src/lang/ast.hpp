#ifndef OPR_LANG_AST_HPP
#define OPR_LANG_AST_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ord/term.hpp"

namespace opr::lang {

// Object-level terms of the language: variables, ordinal constants, ordinary
// + and *, and w^.
class Obj {
 public:
  enum class K { Var, Const, Plus, Times, WExp };

  static Obj var(std::string name);
  static Obj constant(const ord::Ord& value);
  static Obj plus(const Obj& l, const Obj& r);
  static Obj times(const Obj& l, const Obj& r);
  static Obj wexp(const Obj& e);
  static Obj num(std::uint64_t n) { return constant(ord::Ord::nat(n)); }

  K kind() const { return rep_->k; }
  const std::string& name() const { return rep_->name; }
  const ord::Ord& value() const { return rep_->value; }
  const Obj& left() const { return rep_->kids[0]; }
  const Obj& right() const { return rep_->kids[1]; }
  const Obj& expo() const { return rep_->kids[0]; }

  bool closed() const;
  void free_vars(std::set<std::string>& out) const;
  Obj subst(const std::string& x, const Obj& t) const;

  bool operator==(const Obj& o) const;
  bool operator!=(const Obj& o) const { return !(*this == o); }

 private:
  struct Rep {
    K k;
    std::string name;
    ord::Ord value;
    std::vector<Obj> kids;
  };
  std::shared_ptr<const Rep> rep_;
  explicit Obj(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
  static Obj make(Rep r) { return Obj(std::make_shared<const Rep>(std::move(r))); }
};

// Negation-normal formulas. Negation lives as a polarity bit on atoms.
class Formula {
 public:
  enum class K { Less, RApp, PAtom, PRhoAtom, Or, And, Ex, All, ExB, AllB };

  Formula() : Formula(less(Obj::num(0), Obj::num(0))) {}

  static Formula less(const Obj& s, const Obj& t, bool neg = false);
  static Formula rapp(std::string id, const Obj& s, const Obj& t, bool neg = false);
  static Formula p_atom(const Obj& t0, const Obj& t1, bool neg = false);
  static Formula prho_atom(const Obj& t, bool neg = false);
  static Formula or_(const Formula& l, const Formula& r);
  static Formula and_(const Formula& l, const Formula& r);
  static Formula ex(std::string var, const Formula& body);
  static Formula all(std::string var, const Formula& body);
  static Formula exb(std::string var, const Obj& bound, const Formula& body);
  static Formula allb(std::string var, const Obj& bound, const Formula& body);

  K kind() const { return rep_->k; }
  bool negated() const { return rep_->neg; }  // atoms only
  const std::string& var() const { return rep_->name; }
  const std::string& rid() const { return rep_->name; }
  const Obj& term(std::size_t i) const { return rep_->terms[i]; }
  std::size_t nterms() const { return rep_->terms.size(); }
  const Obj& bound() const { return rep_->terms[0]; }  // ExB/AllB
  const Formula& child(std::size_t i) const { return rep_->kids[i]; }
  const Formula& body() const { return rep_->kids[0]; }

  bool is_atom() const;
  bool closed() const;
  void free_vars(std::set<std::string>& out) const;
  std::set<std::string> free_vars() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  struct Rep {
    K k;
    bool neg = false;
    std::string name;  // quantifier variable / R-definition id
    std::vector<Obj> terms;
    std::vector<Formula> kids;
  };
  std::shared_ptr<const Rep> rep_;
  explicit Formula(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
  static Formula make(Rep r) { return Formula(std::make_shared<const Rep>(std::move(r))); }
};

enum class FClass { Literal, Delta0, Sigma1, Pi1, EForm, Other };

// NNF dual; involution on all formulas.
Formula negate(const Formula& a);

// Degree dg: 1 for literals and Delta0 formulas, then +2 per connective or
// quantifier above non-Delta0 material.
unsigned dg(const Formula& a);

FClass classify(const Formula& a);
bool is_delta0(const Formula& a);
// Admissible cut formulas: literals, Delta0 formulas, disjunctions and
// (bounded) existentials.
bool is_cuttable(const Formula& a);

// Capture-avoiding substitution; bound variables are renamed on clashes.
Formula subst(const Formula& a, const std::string& x, const Obj& t);

// Bound every unbounded quantifier by y.
Formula relativize(const Formula& a, const Obj& y);

std::string fresh_var(const std::set<std::string>& avoid, const std::string& hint);

}  // namespace opr::lang

#endif
