#include "calc/check.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "io/formio.hpp"
#include "ord/arith.hpp"
#include "ord/order.hpp"

namespace opr::calc {

using lang::FClass;
using lang::Tri;
using ord::Cmp;

namespace {

// ---- shape helpers ----

// exists x exists w [Pr0(x') /\ B] with Delta0 B, quantifiers bounded or not
bool is_rfl_matrix(const Formula& f) {
  using K = Formula::K;
  if (f.kind() != K::Ex && f.kind() != K::ExB) return false;
  const Formula& inner = f.body();
  if (inner.kind() != K::Ex && inner.kind() != K::ExB) return false;
  const Formula& m = inner.body();
  if (m.kind() != K::And) return false;
  return m.child(0).kind() == K::PRhoAtom && !m.child(0).negated() &&
         lang::is_delta0(m.child(1));
}

// exists w [Pr0(s1) /\ B], the third D1 shape
bool is_prho_witness_shape(const Formula& f) {
  using K = Formula::K;
  if (f.kind() != K::Ex && f.kind() != K::ExB) return false;
  const Formula& m = f.body();
  if (m.kind() != K::And) return false;
  return m.child(0).kind() == K::PRhoAtom && !m.child(0).negated() &&
         lang::is_delta0(m.child(1));
}

bool d1_gamma_shape(const Formula& f) {
  using K = Formula::K;
  if (!f.closed()) return false;
  if (f.kind() == K::AllB) return is_rfl_matrix(f.body());
  return is_rfl_matrix(f) || is_prho_witness_shape(f);
}

bool bounded_sentence(const Formula& f) {
  using K = Formula::K;
  if (!f.closed()) return false;
  std::function<bool(const Formula&)> bounded = [&](const Formula& g) -> bool {
    switch (g.kind()) {
      case K::Ex:
      case K::All: return false;
      case K::Or:
      case K::And: return bounded(g.child(0)) && bounded(g.child(1));
      case K::ExB:
      case K::AllB: return bounded(g.body());
      default: return true;
    }
  };
  return bounded(f);
}

// closed subformula of a Sigma2 sentence: exists x [forall y] B with the
// universal part bounded or absent or unbounded over Delta0 matrix
bool sigma2_subformula(const Formula& f) {
  using K = Formula::K;
  if (!f.closed() || lang::is_delta0(f)) return false;
  const Formula* g = &f;
  if (g->kind() == K::Ex) g = &g->body();
  if (g->kind() == K::All || g->kind() == K::AllB) g = &g->body();
  return lang::is_delta0(*g);
}

// first-order matching of an axiom matrix against a formula
bool match_formula(const Formula& pat, const Formula& f,
                   std::map<std::string, Obj>& bind);

bool match_obj(const Obj& pat, const Obj& t, std::map<std::string, Obj>& bind) {
  switch (pat.kind()) {
    case Obj::K::Var: {
      auto it = bind.find(pat.name());
      if (it == bind.end()) {
        bind.emplace(pat.name(), t);
        return true;
      }
      return it->second == t;
    }
    case Obj::K::Const: return t.kind() == Obj::K::Const && t.value() == pat.value();
    case Obj::K::Plus:
    case Obj::K::Times:
      return t.kind() == pat.kind() && match_obj(pat.left(), t.left(), bind) &&
             match_obj(pat.right(), t.right(), bind);
    case Obj::K::WExp:
      return t.kind() == Obj::K::WExp && match_obj(pat.expo(), t.expo(), bind);
  }
  return false;
}

bool match_formula(const Formula& pat, const Formula& f,
                   std::map<std::string, Obj>& bind) {
  using K = Formula::K;
  if (pat.kind() != f.kind() || pat.negated() != f.negated()) return false;
  switch (pat.kind()) {
    case K::Less:
    case K::PAtom:
    case K::RApp:
    case K::PRhoAtom: {
      if (pat.kind() == K::RApp && pat.rid() != f.rid()) return false;
      for (std::size_t i = 0; i < pat.nterms(); ++i)
        if (!match_obj(pat.term(i), f.term(i), bind)) return false;
      return true;
    }
    case K::Or:
    case K::And:
      return match_formula(pat.child(0), f.child(0), bind) &&
             match_formula(pat.child(1), f.child(1), bind);
    case K::Ex:
    case K::All:
    case K::ExB:
    case K::AllB: {
      if ((pat.kind() == K::ExB || pat.kind() == K::AllB) &&
          !match_obj(pat.bound(), f.bound(), bind))
        return false;
      // align bound variables, then match bodies with the variable pinned
      if (pat.var() != f.var()) {
        Formula renamed = lang::subst(pat.body(), pat.var(), Obj::var(f.var()));
        std::map<std::string, Obj> b2 = bind;
        b2.emplace(f.var(), Obj::var(f.var()));
        if (!match_formula(renamed, f.body(), b2)) return false;
        bind = b2;
        return true;
      }
      std::map<std::string, Obj> b2 = bind;
      b2.emplace(pat.var(), Obj::var(pat.var()));
      if (!match_formula(pat.body(), f.body(), b2)) return false;
      bind = b2;
      return true;
    }
  }
  return false;
}

bool matches_axiom(const Formula& f, const std::vector<Formula>& axioms) {
  for (const auto& ax : axioms) {
    const Formula* m = &ax;
    while (m->kind() == Formula::K::All) m = &m->body();
    std::map<std::string, Obj> bind;
    if (match_formula(*m, f, bind)) return true;
  }
  return false;
}

// true closed literal or true closed Delta0 sentence (three-valued)
Tri closed_truth(const Formula& f, lang::EvalCtx& ctx) {
  if (!f.closed()) return Tri::Undecided;
  if (!f.is_atom() && !lang::is_delta0(f)) return Tri::Undecided;
  return lang::eval_delta0(f, ctx);
}

struct Checker {
  const Proof& p;
  CheckConfig& cfg;
  std::vector<Diag> out;
  std::map<int, int> parent;

  void diag(int node, const std::string& clause, const std::string& msg) {
    out.push_back({node, clause, msg});
  }

  void require_true_literal(int node, const std::string& clause, const Formula& lit) {
    Tri v = lang::eval_literal(lit, cfg.eval);
    if (v == Tri::True) return;
    if (v == Tri::False || cfg.strict)
      diag(node, clause, "literal " + io::print_formula(lit) +
                             (v == Tri::False ? " is false" : " is undecided"));
  }

  // Premise conformance: every expected occurrence must be present in the
  // child conclusion, inherited ones by id, rule-created ones by formula.
  // Further occurrences are vacuous weakening and are tolerated.
  void check_premise_shapes(const Node& n) {
    std::uint64_t fresh = 1ull << 60;
    auto shapes = derive_premises(n, fresh);
    if (shapes.size() != n.prems.size()) {
      diag(n.id, "arity", "expected " + std::to_string(shapes.size()) + " premises");
      return;
    }
    for (std::size_t k = 0; k < shapes.size(); ++k) {
      const Sequent& want = shapes[k];
      const Sequent& got = p.node(n.prems[k]).concl;
      std::vector<bool> used(got.size(), false);
      for (std::size_t i = 0; i < want.size(); ++i) {
        bool inherited = want[i].id < (1ull << 60);
        if (inherited) {
          auto j = find_occ(got, want[i].id);
          bool essential = (n.pay.main && *n.pay.main == want[i].id &&
                            (n.rule == Rule::PSig || n.rule == Rule::PrSig)) ||
                           (n.rule == Rule::D1 &&
                            std::find(n.pay.gamma_ids.begin(), n.pay.gamma_ids.end(),
                                      want[i].id) != n.pay.gamma_ids.end());
          if (!j) {
            // a premise proving less than the context is a strengthening,
            // except where the rule consumes the occurrence itself
            if (essential)
              diag(n.id, "premise-shape", "premise " + std::to_string(k) +
                                              " lost a rule-essential occurrence");
            continue;
          }
          used[*j] = true;
          bool rel_pos = n.rule == Rule::D1 &&
                         std::find(n.pay.gamma_ids.begin(), n.pay.gamma_ids.end(),
                                   want[i].id) != n.pay.gamma_ids.end();
          if (rel_pos) {
            if (!n.pay.relativizer) {
              diag(n.id, "D1", "missing relativizer");
              continue;
            }
            Formula expect = lang::relativize(got[*j].f, Obj::constant(*n.pay.relativizer));
            if (!(expect == want[i].f))
              diag(n.id, "D1", "conclusion is not the relativized premise at a Gamma position");
          } else if (!(got[*j].f == want[i].f)) {
            diag(n.id, "premise-shape",
                 "premise formula mismatch: expected " + io::print_formula(want[i].f) +
                     ", found " + io::print_formula(got[*j].f));
          }
        } else {
          bool found = false;
          for (std::size_t j = 0; j < got.size(); ++j) {
            if (used[j] || find_occ(n.concl, got[j].id)) continue;
            if (got[j].f == want[i].f) {
              used[j] = true;
              found = true;
              break;
            }
          }
          if (!found)
            diag(n.id, "premise-shape", "premise " + std::to_string(k) +
                                            " is missing " + io::print_formula(want[i].f));
        }
      }
    }
  }

  void check_eigen(const Node& n, const std::vector<Obj>& other_terms) {
    if (n.pay.eigen.empty()) {
      diag(n.id, "eigenvariable", "missing eigenvariable");
      return;
    }
    std::set<std::string> fv;
    for (const auto& o : n.concl) o.f.free_vars(fv);
    for (const auto& t : other_terms) t.free_vars(fv);
    if (n.pay.ind_formula) {
      std::set<std::string> afv = n.pay.ind_formula->free_vars();
      afv.erase(n.pay.ind_var);
      fv.insert(afv.begin(), afv.end());
    }
    if (fv.count(n.pay.eigen))
      diag(n.id, "eigenvariable", "eigenvariable " + n.pay.eigen + " not fresh");
  }

  const Formula* main_formula(const Node& n) {
    if (!n.pay.main) {
      diag(n.id, "payload", "missing main formula");
      return nullptr;
    }
    auto i = find_occ(n.concl, *n.pay.main);
    if (!i) {
      diag(n.id, "payload", "main occurrence not in the conclusion");
      return nullptr;
    }
    return &n.concl[*i].f;
  }

  void check_node(const Node& n) {
    using K = Formula::K;
    // per-sequent occurrence ids must be unique
    for (std::size_t i = 0; i < n.concl.size(); ++i)
      for (std::size_t j = i + 1; j < n.concl.size(); ++j)
        if (n.concl[i].id == n.concl[j].id)
          diag(n.id, "occurrences", "duplicate occurrence id in sequent");

    switch (n.rule) {
      case Rule::Ax: {
        const Formula* a = main_formula(n);
        if (!a) break;
        if (matches_axiom(*a, cfg.axioms)) break;
        Tri v = closed_truth(*a, cfg.eval);
        if (v == Tri::True) break;
        if (!a->closed())
          diag(n.id, "(ax)", "open formula matches no configured axiom");
        else if (v == Tri::False)
          diag(n.id, "(ax)", "axiom formula is false: " + io::print_formula(*a));
        else if (cfg.strict)
          diag(n.id, "(ax)", "axiom formula is undecided: " + io::print_formula(*a));
        break;
      }
      case Rule::Taut: {
        const Formula* negside = main_formula(n);
        if (!negside) break;
        if (!n.pay.main2) {
          diag(n.id, "(taut)", "missing positive member");
          break;
        }
        auto j = find_occ(n.concl, *n.pay.main2);
        if (!j) {
          diag(n.id, "(taut)", "positive member not in the conclusion");
          break;
        }
        const Formula& pos = n.concl[*j].f;
        if (!(lang::negate(pos) == *negside))
          diag(n.id, "(taut)", "members are not dual");
        if (!(pos.is_atom() || lang::is_delta0(pos)))
          diag(n.id, "(taut)", "taut pair must be a literal or Delta0");
        break;
      }
      case Rule::PEx: {
        const Formula* a = main_formula(n);
        if (!a || !n.pay.s_term) {
          if (!n.pay.s_term) diag(n.id, "(Pex)", "missing witness term s");
          break;
        }
        const Obj& s = *n.pay.s_term;
        Obj w1c = Obj::constant(Ord::w1());
        bool ok = false;
        if (a->kind() == K::ExB && a->body().kind() == K::ExB) {
          const std::string& x = a->var();
          const std::string& y = a->body().var();
          Formula want = Formula::exb(
              x, w1c,
              Formula::exb(y, w1c,
                           Formula::and_(Formula::less(s, Obj::var(x)),
                                         Formula::p_atom(Obj::var(x), Obj::var(y)))));
          ok = *a == want;
        }
        if (!ok) diag(n.id, "(Pex)", "main formula is not Ex x,y<w1 [s<x and P(x,y)]");
        if (n.pay.guard2) {
          auto g = find_occ(n.concl, *n.pay.guard2);
          if (!g || !(n.concl[*g].f == Formula::less(s, w1c, true)))
            diag(n.id, "(Pex)", "guard occurrence is not (not (< s w1))");
        } else {
          require_true_literal(n.id, "(Pex)", Formula::less(s, w1c));
        }
        break;
      }
      case Rule::PrEx: {
        const Formula* a = main_formula(n);
        if (!a || !n.pay.s_term) {
          if (!n.pay.s_term) diag(n.id, "(Prho0ex)", "missing witness term s");
          break;
        }
        const Obj& s = *n.pay.s_term;
        bool ok = a->kind() == K::Ex && a->body().kind() == K::And &&
                  a->body().child(0) == Formula::less(s, Obj::var(a->var())) &&
                  a->body().child(1) == Formula::prho_atom(Obj::var(a->var()));
        if (!ok) diag(n.id, "(Prho0ex)", "main formula is not Ex x [s<x and Pr0(x)]");
        break;
      }
      case Rule::Or: {
        const Formula* a = main_formula(n);
        if (a && a->kind() != K::Or) diag(n.id, "(or)", "main formula is not a disjunction");
        if (n.pay.disj != 0 && n.pay.disj != 1) diag(n.id, "(or)", "bad disjunct index");
        break;
      }
      case Rule::And: {
        const Formula* a = main_formula(n);
        if (a && a->kind() != K::And) diag(n.id, "(and)", "main formula is not a conjunction");
        break;
      }
      case Rule::Ex: {
        const Formula* a = main_formula(n);
        if (a && a->kind() != K::Ex) diag(n.id, "(ex)", "main formula is not unbounded Ex");
        if (!n.pay.witness) diag(n.id, "(ex)", "missing witness");
        break;
      }
      case Rule::BEx: {
        const Formula* a = main_formula(n);
        if (!a) break;
        if (a->kind() != K::ExB) {
          diag(n.id, "(bex)", "main formula is not bounded Ex");
          break;
        }
        if (!n.pay.witness) {
          diag(n.id, "(bex)", "missing witness");
          break;
        }
        if (n.pay.guard) {
          auto g = find_occ(n.concl, *n.pay.guard);
          if (!g || !(n.concl[*g].f == Formula::less(*n.pay.witness, a->bound(), true)))
            diag(n.id, "(bex)", "guard occurrence is not (not (< s t))");
        } else {
          require_true_literal(n.id, "(bex)", Formula::less(*n.pay.witness, a->bound()));
        }
        break;
      }
      case Rule::All: {
        const Formula* a = main_formula(n);
        if (a && a->kind() != K::All) diag(n.id, "(all)", "main formula is not unbounded All");
        check_eigen(n, {});
        break;
      }
      case Rule::BAll: {
        const Formula* a = main_formula(n);
        if (a && a->kind() != K::AllB) diag(n.id, "(ball)", "main formula is not bounded All");
        check_eigen(n, {});
        break;
      }
      case Rule::Ind: {
        if (!n.pay.ind_formula || !n.pay.s_term || !n.pay.ind_t) {
          diag(n.id, "(ind)", "missing induction payload");
          break;
        }
        check_eigen(n, {*n.pay.s_term, *n.pay.ind_t});
        if (n.pay.guard) {
          auto g = find_occ(n.concl, *n.pay.guard);
          if (!g || !(n.concl[*g].f == Formula::less(*n.pay.s_term, *n.pay.ind_t, true)))
            diag(n.id, "(ind)", "guard occurrence is not (not (< s t))");
        } else {
          require_true_literal(n.id, "(ind)", Formula::less(*n.pay.s_term, *n.pay.ind_t));
        }
        break;
      }
      case Rule::Cut: {
        if (!n.pay.cut_formula) {
          diag(n.id, "(cut)", "missing cut formula");
          break;
        }
        if (!lang::is_cuttable(*n.pay.cut_formula))
          diag(n.id, "(cut)", "cut formula not an E-formula");
        for (auto id : n.pay.left_ids)
          if (!find_occ(n.concl, id))
            diag(n.id, "(cut)", "left split references a missing occurrence");
        break;
      }
      case Rule::Rfl: {
        if (!n.pay.ind_formula || !n.pay.ind_t) {
          diag(n.id, "(Rfl)", "missing payload");
          break;
        }
        if (!is_rfl_matrix(*n.pay.ind_formula) ||
            n.pay.ind_formula->kind() != K::Ex ||
            n.pay.ind_formula->body().kind() != K::Ex)
          diag(n.id, "(Rfl)", "side formula is not Ex z Ex w [Pr0(z) and B]");
        check_eigen(n, {*n.pay.ind_t});
        break;
      }
      case Rule::PSig:
      case Rule::PrSig: {
        bool psig = n.rule == Rule::PSig;
        const char* cl = psig ? "(PSigma1)" : "(Prho0Sigma1)";
        if (!n.pay.phi || !n.pay.s_term || !n.pay.t1 || (psig && !n.pay.t0)) {
          diag(n.id, cl, "missing payload");
          break;
        }
        const Formula& phi = *n.pay.phi;
        FClass fc = lang::classify(phi);
        if (fc != FClass::Sigma1 && fc != FClass::Delta0 && fc != FClass::Literal)
          diag(n.id, cl, "phi is not Sigma1");
        const Formula* a = main_formula(n);
        if (!a) break;
        Formula expect =
            psig ? lang::subst(lang::subst(lang::relativize(phi, *n.pay.t1), n.pay.kappa_var,
                                           *n.pay.t0),
                               n.pay.arg_var, *n.pay.s_term)
                 : lang::subst(lang::relativize(phi, *n.pay.t1), n.pay.arg_var, *n.pay.s_term);
        if (!(*a == expect))
          diag(n.id, cl, "main formula is not the relativized instance of phi");
        // guard occurrences or truth of the positive literals
        Formula pg = psig ? Formula::p_atom(*n.pay.t0, *n.pay.t1)
                          : Formula::prho_atom(*n.pay.t1);
        Formula sg = Formula::less(*n.pay.s_term, psig ? *n.pay.t0 : *n.pay.t1);
        if (n.pay.guard) {
          auto g = find_occ(n.concl, *n.pay.guard);
          if (!g || !(n.concl[*g].f == lang::negate(pg)))
            diag(n.id, cl, "P-guard occurrence mismatch");
        } else {
          require_true_literal(n.id, cl, pg);
        }
        if (n.pay.guard2) {
          auto g = find_occ(n.concl, *n.pay.guard2);
          if (!g || !(n.concl[*g].f == lang::negate(sg)))
            diag(n.id, cl, "s-guard occurrence mismatch");
        } else {
          require_true_literal(n.id, cl, sg);
        }
        break;
      }
      case Rule::H: break;
      case Rule::D0: {
        for (const auto& o : n.concl) {
          if (sigma2_subformula(o.f)) continue;
          Tri v = closed_truth(o.f, cfg.eval);
          if (o.f.closed() && (o.f.is_atom() || lang::is_delta0(o.f))) {
            if (v == Tri::False) continue;
            diag(n.id, "(D0)",
                 v == Tri::True ? "end formula is a true Delta0 sentence"
                                : "end formula truth undecided: " + io::print_formula(o.f));
          } else {
            diag(n.id, "(D0)",
                 "end formula is neither false Delta0 nor a Sigma2 subformula: " +
                     io::print_formula(o.f));
          }
        }
        if (!n.pay.relativizer) diag(n.id, "(D0)", "missing alpha annotation");
        if (!n.pay.stock) diag(n.id, "(D0)", "missing stock");
        break;
      }
      case Rule::D1: {
        for (auto id : n.pay.gamma_ids)
          if (!find_occ(n.concl, id))
            diag(n.id, "(D1)", "Gamma position missing from the conclusion");
        // Gamma shapes are checked on the premise side
        const Node& up = p.node(n.prems.at(0));
        for (auto id : n.pay.gamma_ids) {
          auto i = find_occ(up.concl, id);
          if (!i) continue;
          if (!d1_gamma_shape(up.concl[*i].f))
            diag(n.id, "(D1)", "Gamma formula has an inadmissible shape: " +
                                   io::print_formula(up.concl[*i].f));
        }
        // implicit Lambda formulas must be bounded sentences
        for (const auto& o : up.concl) {
          bool in_gamma = std::find(n.pay.gamma_ids.begin(), n.pay.gamma_ids.end(), o.id) !=
                          n.pay.gamma_ids.end();
          if (in_gamma) continue;
          if (!is_explicit_occ(p, parent, n.prems[0], o.id) && !bounded_sentence(o.f))
            diag(n.id, "(D1)", "implicit Lambda formula is not a bounded sentence: " +
                                   io::print_formula(o.f));
        }
        if (!n.pay.relativizer) diag(n.id, "(D1)", "missing alpha annotation");
        break;
      }
      default: break;
    }

    if (!n.pay.main && (n.rule == Rule::Or || n.rule == Rule::And || n.rule == Rule::Ex ||
                        n.rule == Rule::BEx || n.rule == Rule::All || n.rule == Rule::BAll))
      diag(n.id, "payload", "logical rule without main formula");

    check_premise_shapes(n);
  }
};

}  // namespace

std::vector<Diag> rule_check(const Proof& p, CheckConfig& cfg) {
  Checker ck{p, cfg, {}, p.parents()};
  for (const auto& [id, n] : p.nodes) ck.check_node(n);
  return std::move(ck.out);
}

std::map<int, Height> heights(const Proof& p) {
  std::map<int, Height> out;
  std::vector<int> todo{p.root};
  out[p.root] = {0, 0};
  while (!todo.empty()) {
    int id = todo.back();
    todo.pop_back();
    const Node& n = p.node(id);
    Height h = out.at(id);
    Height up = h;
    if (n.rule == Rule::H) up = {h.inf, h.fin + 1};
    if (n.rule == Rule::D1) up = {1, 0};
    if (n.rule == Rule::D0) up = {0, 0};
    for (int c : n.prems) {
      out[c] = up;
      todo.push_back(c);
    }
  }
  return out;
}

Annotation assign(const Proof& p) {
  Annotation ann;
  ann.h = heights(p);
  std::function<Ord(int)> go = [&](int id) -> Ord {
    const Node& n = p.node(id);
    std::vector<Ord> prem;
    prem.reserve(n.prems.size());
    for (int c : n.prems) prem.push_back(go(c));
    Ord o = Ord::zero();
    switch (n.rule) {
      case Rule::Ax:
      case Rule::Taut:
      case Rule::PEx:
      case Rule::PrEx: o = Ord::nat(1); break;
      case Rule::PSig:
      case Rule::PrSig: o = prem[0]; break;
      case Rule::Or:
      case Rule::Ex:
      case Rule::BEx:
      case Rule::All:
      case Rule::BAll: o = ord::nsum(prem[0], Ord::nat(1)); break;
      case Rule::And:
      case Rule::Cut:
      case Rule::Rfl: o = ord::nsum(prem[0], prem[1]); break;
      case Rule::H: o = Ord::wpow(prem[0]); break;
      case Rule::Ind: {
        Ord base = ord::nsum(prem[0], prem[1], Ord::nat(2));
        o = ord::nprod(base, lang::mj(n.pay.ind_t.value()));
        break;
      }
      case Rule::D1: {
        if (ann.h.at(id).inf == 1) o = prem[0];  // upper member of a series
        else {
          Ord c = n.pay.stock.value_or(Ord::zero());
          o = Ord::d(1, ord::nsum(c, Ord::wpow(prem[0])));
        }
        break;
      }
      case Rule::D0: {
        Ord c = n.pay.stock.value_or(Ord::zero());
        o = Ord::d(0, ord::nsum(c, prem[0]));
        break;
      }
    }
    ann.o[id] = o;
    return o;
  };
  ann.o_root = go(p.root);
  return ann;
}

namespace {

// stock of a D-rule: own payload for D0 and series-bottom D1; otherwise the
// stock of the series bottom below
Ord stock_of(const Proof& p, const std::map<int, int>& parent, int id) {
  int n = id;
  while (true) {
    const Node& nd = p.node(n);
    if (nd.pay.stock) return *nd.pay.stock;
    int par = parent.at(n);
    if (par < 0 || p.node(par).rule != Rule::D1) return Ord::zero();
    n = par;
  }
}

}  // namespace

std::vector<Diag> stock_check(const Proof& p, const Annotation& ann, CheckConfig& cfg) {
  std::vector<Diag> out;
  auto diag = [&out](int node, const std::string& clause, const std::string& msg) {
    out.push_back({node, clause, msg});
  };
  auto parent = p.parents();

  // (h7): the proof ends with a D0
  if (p.node(p.root).rule != Rule::D0)
    diag(p.root, "(h7)", "proof does not end with a (D0)");

  for (const auto& [id, n] : p.nodes) {
    Height h = ann.h.at(id);
    // (h1): no free variables below height w
    if (h.inf == 0)
      for (const auto& o : n.concl)
        if (!o.f.closed())
          diag(id, "(h1)", "free variable at finite height: " + io::print_formula(o.f));

    switch (n.rule) {
      case Rule::Cut: {
        // (h3): dg(C) <= h0
        unsigned d = lang::dg(*n.pay.cut_formula);
        if (static_cast<int>(d) > h.fin)
          diag(id, "(h3)", "cut degree " + std::to_string(d) + " exceeds h0 " +
                               std::to_string(h.fin));
        break;
      }
      case Rule::Ind: {
        // (h4): w + dg(forall x<s A) <= h, and no nested (ind)
        Formula closure = Formula::allb(n.pay.ind_var, *n.pay.s_term, *n.pay.ind_formula);
        unsigned d = lang::dg(closure);
        if (h.inf == 0 || h.fin < static_cast<int>(d))
          diag(id, "(h4)", "induction below height w + dg");
        for (int m : p.subtree(id))
          if (m != id && p.node(m).rule == Rule::Ind)
            diag(id, "(h4)", "nested (ind) rules");
        // (p1): a1 = dg(A(y)) exactly, a0 finite
        const Ord& a0 = ann.o.at(n.prems[0]);
        const Ord& a1 = ann.o.at(n.prems[1]);
        if (!(a1 == Ord::nat(lang::dg(*n.pay.ind_formula))))
          diag(id, "(p1)", "right premise ordinal differs from dg(A)");
        if (!a0.is_nat()) diag(id, "(p1)", "left premise ordinal is not finite");
        break;
      }
      case Rule::Rfl: {
        // (h5): a D1 below, with enough finite height at the lowest one
        int m = id;
        int lowest_d1 = -1;
        while (parent.at(m) >= 0) {
          m = parent.at(m);
          if (p.node(m).rule == Rule::D1) lowest_d1 = m;
        }
        if (lowest_d1 < 0) {
          diag(id, "(h5)", "no (D1) below a (Rfl)");
          break;
        }
        Formula side = Formula::exb(
            n.pay.ind_var, *n.pay.ind_t,
            lang::negate(lang::relativize(*n.pay.ind_formula, Obj::var(n.pay.eigen))));
        unsigned d = lang::dg(side);
        Height hd = ann.h.at(lowest_d1);
        if (hd.inf != 0 || hd.fin < static_cast<int>(d))
          diag(id, "(h5)", "lowest (D1) below the (Rfl) is too low: need h >= " +
                               std::to_string(d));
        break;
      }
      case Rule::D1: {
        if (h.inf == 0 && !n.pay.stock)
          diag(id, "stock", "series-bottom (D1) without a stock");
        // (h6): only D1s between two D1s
        int m = parent.at(id);
        while (m >= 0) {
          if (p.node(m).rule == Rule::D1) {
            // every rule between id and m must be D1
            int k = parent.at(id);
            while (k != m) {
              if (p.node(k).rule != Rule::D1)
                diag(id, "(h6)", "non-(D1) rule inside a (D1) series");
              k = parent.at(k);
            }
            break;
          }
          m = parent.at(m);
        }
        break;
      }
      case Rule::PrEx: {
        // (h2): cuts on descendants of the existential happen at height >= w
        std::uint64_t o = *n.pay.main;
        int cur = id;
        while (true) {
          DescStep s = descend(p, parent, cur, o);
          if (s.kind == DescStep::K::At) {
            cur = s.node;
            o = s.occ;
            continue;
          }
          if (s.kind == DescStep::K::VanishCut) {
            const Node& cut = p.node(s.node);
            // strict reading: only cuts whose cut formula keeps the
            // existential shape count
            const auto& cf = cut.pay.cut_formula;
            bool shape = cf && cf->kind() == Formula::K::Ex &&
                         cf->body().kind() == Formula::K::And &&
                         cf->body().child(1).kind() == Formula::K::PRhoAtom;
            if (shape && ann.h.at(s.node).inf == 0)
              diag(s.node, "(h2)", "cut on a (Prho0ex) descendant below height w");
          }
          break;
        }
        break;
      }
      default: break;
    }

    // (p2) family for collapse rules
    if (n.rule == Rule::D0 || n.rule == Rule::D1) {
      int level = n.rule == Rule::D0 ? 0 : 1;
      Ord c = stock_of(p, parent, id);
      Ord dc = Ord::d(level, c);
      try {
        if (!ord::gset_below(dc, c, c))
          diag(id, "(p2)", "G_{D(c)}(c) not below c");
        // alpha >= D_i(c + w^o(upper)) (D1) / D_i(c + o(upper)) (D0)
        if (n.pay.relativizer) {
          const Ord& alpha = *n.pay.relativizer;
          Ord up = ann.o.at(n.prems[0]);
          Ord need = level == 1 ? Ord::d(1, ord::nsum(c, Ord::wpow(up)))
                                : Ord::d(0, ord::nsum(c, up));
          bool alpha_shape = alpha.kind() == Ord::K::D && alpha.dlevel() == level;
          if (!alpha_shape)
            diag(id, "(p2)", "alpha is not a D-term of the right level");
          else if (ord::compare(alpha, need) == Cmp::LT)
            diag(id, "(p2)", "alpha below the assigned collapse");
        }
        // (p2.1): closed constants above the rule stay inside the hull
        for (int m : p.subtree(n.prems.at(0))) {
          std::vector<Ord> consts;
          collect_consts(p.node(m), consts);
          for (const auto& a : consts)
            if (!ord::gset_below(dc, a, c)) {
              diag(id, "(p2.1)", "constant escapes the stock hull: " + std::to_string(m));
              break;
            }
        }
        // (p2.2): for the D0, every D1 above is bounded by the stock
        if (level == 0) {
          for (int m : p.subtree(id))
            if (m != id && p.node(m).rule == Rule::D1) {
              const Node& d1 = p.node(m);
              Ord c1 = stock_of(p, parent, m);
              if (!ord::gset_below(dc, c1, c))
                diag(id, "(p2.2)", "inner (D1) stock escapes the (D0) hull");
              if (d1.pay.relativizer && d1.pay.relativizer->kind() == Ord::K::D) {
                Ord beta0 = d1.pay.relativizer->arg();
                if (ord::compare(beta0, c) != Cmp::LT)
                  diag(id, "(p2.2)", "inner (D1) argument not below the (D0) stock");
              }
            }
        }
      } catch (const ord::Undecidable&) {
        diag(id, "(p2)", "stock comparison undecided (mu)");
      }
    }
  }
  return out;
}

std::vector<Diag> validate(const Proof& p, CheckConfig& cfg) {
  std::vector<Diag> out = rule_check(p, cfg);
  try {
    Annotation ann = assign(p);
    auto sc = stock_check(p, ann, cfg);
    out.insert(out.end(), sc.begin(), sc.end());
  } catch (const ord::Undecidable& u) {
    out.push_back({p.root, "assign", std::string("ordinal assignment undecided: ") + u.what()});
  }
  return out;
}

void seed_pool_from_proof(const Proof& p, lang::EvalCtx& ctx) {
  ctx.add_pool(Ord::zero());
  std::vector<Ord> cs;
  for (const auto& [id, n] : p.nodes) collect_consts(n, cs);
  for (const auto& c : cs) {
    ctx.add_pool(c);
    try {
      ctx.add_pool(ord::nsum(c, Ord::nat(1)));
    } catch (const ord::Undecidable&) {
    }
  }
}

}  // namespace opr::calc
