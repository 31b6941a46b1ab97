#include "calc/proof.hpp"

#include <algorithm>
#include <stdexcept>

namespace opr::calc {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::Taut: return "taut";
    case Rule::PEx: return "Pex";
    case Rule::PrEx: return "Prho0ex";
    case Rule::Or: return "or";
    case Rule::And: return "and";
    case Rule::Ex: return "ex";
    case Rule::BEx: return "bex";
    case Rule::All: return "all";
    case Rule::BAll: return "ball";
    case Rule::Ind: return "ind";
    case Rule::Cut: return "cut";
    case Rule::Rfl: return "Rfl";
    case Rule::PSig: return "PSigma1";
    case Rule::PrSig: return "Prho0Sigma1";
    case Rule::H: return "h";
    case Rule::D0: return "D0";
    case Rule::D1: return "D1";
  }
  return "?";
}

std::map<int, int> Proof::parents() const {
  std::map<int, int> out;
  out[root] = -1;
  for (const auto& [id, n] : nodes)
    for (int c : n.prems) out[c] = id;
  return out;
}

std::vector<int> Proof::subtree(int n) const {
  std::vector<int> out{n};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int c : node(out[i]).prems) out.push_back(c);
  return out;
}

namespace {

Sequent without(const Sequent& s, std::optional<std::uint64_t> id) {
  if (!id) return s;
  Sequent out;
  for (const auto& o : s)
    if (o.id != *id) out.push_back(o);
  return out;
}

Formula neg_less(const Obj& s, const Obj& t) { return Formula::less(s, t, true); }

}  // namespace

std::vector<Sequent> derive_premises(const Node& n, std::uint64_t& fresh) {
  auto occ = [&fresh](const Formula& f) { return Occ{fresh++, f}; };
  const Sequent& c = n.concl;
  auto main_f = [&]() -> const Formula& {
    auto i = find_occ(c, n.pay.main.value());
    if (!i) throw std::logic_error("payload main not in conclusion");
    return c[*i].f;
  };

  switch (n.rule) {
    case Rule::Ax:
    case Rule::Taut:
    case Rule::PEx:
    case Rule::PrEx: return {};

    case Rule::Or: {
      Sequent p = c;
      p.push_back(occ(main_f().child(n.pay.disj)));
      return {p};
    }
    case Rule::And: {
      Sequent p0 = c, p1 = c;
      p0.push_back(occ(main_f().child(0)));
      p1.push_back(occ(main_f().child(1)));
      return {p0, p1};
    }
    case Rule::Ex: {
      Sequent p = c;
      p.push_back(occ(lang::subst(main_f().body(), main_f().var(), n.pay.witness.value())));
      return {p};
    }
    case Rule::BEx: {
      Sequent p = without(c, n.pay.guard);
      p.push_back(occ(lang::subst(main_f().body(), main_f().var(), n.pay.witness.value())));
      return {p};
    }
    case Rule::All: {
      Sequent p = c;
      p.push_back(occ(lang::subst(main_f().body(), main_f().var(), Obj::var(n.pay.eigen))));
      return {p};
    }
    case Rule::BAll: {
      Sequent p = c;
      Obj z = Obj::var(n.pay.eigen);
      p.push_back(occ(neg_less(z, main_f().bound())));
      p.push_back(occ(lang::subst(main_f().body(), main_f().var(), z)));
      return {p};
    }
    case Rule::Ind: {
      Sequent base = without(c, n.pay.guard);
      const Formula& A = n.pay.ind_formula.value();
      const std::string& x = n.pay.ind_var;
      Obj y = Obj::var(n.pay.eigen);
      Sequent p0 = base, p1 = base;
      p0.push_back(occ(Formula::exb(x, y, lang::negate(A))));
      p0.push_back(occ(lang::subst(A, x, y)));
      p1.push_back(occ(lang::negate(lang::subst(A, x, n.pay.s_term.value()))));
      return {p0, p1};
    }
    case Rule::Cut: {
      // the whole context flows into both premises; premises may prove less
      const Formula& A = n.pay.cut_formula.value();
      Sequent left = c, right = c;
      left.push_back(occ(lang::negate(A)));
      right.push_back(occ(A));
      return {left, right};
    }
    case Rule::Rfl: {
      const Formula& A = n.pay.ind_formula.value();
      const std::string& x = n.pay.ind_var;
      const Obj& t = n.pay.ind_t.value();
      Obj y = Obj::var(n.pay.eigen);
      Sequent p0 = c;
      p0.push_back(occ(Formula::allb(x, t, A)));
      Sequent p1;
      p1.push_back(occ(neg_less(t, y)));
      p1.push_back(occ(Formula::exb(x, t, lang::negate(lang::relativize(A, y)))));
      for (const auto& o : c) p1.push_back(o);
      return {p0, p1};
    }
    case Rule::PSig: {
      Sequent p = c;
      auto i = find_occ(p, n.pay.main.value());
      if (!i) throw std::logic_error("PSig main not in conclusion");
      Formula inst = lang::subst(
          lang::subst(n.pay.phi.value(), n.pay.kappa_var, Obj::constant(Ord::w1())),
          n.pay.arg_var, n.pay.s_term.value());
      p[*i].f = inst;
      return {p};
    }
    case Rule::PrSig: {
      Sequent p = c;
      auto i = find_occ(p, n.pay.main.value());
      if (!i) throw std::logic_error("PrSig main not in conclusion");
      p[*i].f = lang::subst(n.pay.phi.value(), n.pay.arg_var, n.pay.s_term.value());
      return {p};
    }
    case Rule::H: {
      if (n.pay.h_added > c.size()) throw std::logic_error("(h) adds more than it keeps");
      return {Sequent(c.begin(), c.end() - n.pay.h_added)};
    }
    case Rule::D0: return {c};
    case Rule::D1: return {c};  // gamma positions compared via relativize by the checker
  }
  throw std::logic_error("derive_premises unreachable");
}

DescStep descend(const Proof& p, const std::map<int, int>& parent, int child,
                 std::uint64_t id) {
  int par = parent.at(child);
  if (par < 0) return {DescStep::K::Root, -1, 0};
  const Node& pn = p.node(par);
  if (find_occ(pn.concl, id)) return {DescStep::K::At, par, id};
  // the occurrence is rule-created at `par`: a minor maps to the main
  // formula; cut and Rfl material vanishes
  switch (pn.rule) {
    case Rule::Or:
    case Rule::And:
    case Rule::Ex:
    case Rule::BEx:
    case Rule::All:
    case Rule::BAll: return {DescStep::K::At, par, pn.pay.main.value()};
    case Rule::Cut: return {DescStep::K::VanishCut, par, 0};
    default: return {DescStep::K::VanishRule, par, 0};
  }
}

std::vector<std::pair<int, std::uint64_t>> ancestors(const Proof& p, int node,
                                                     std::uint64_t occ) {
  std::vector<std::pair<int, std::uint64_t>> out;
  std::vector<std::pair<int, std::uint64_t>> todo{{node, occ}};
  auto seen = [&out](int n, std::uint64_t o) {
    for (auto& [a, b] : out)
      if (a == n && b == o) return true;
    return false;
  };
  const std::uint64_t scratch = 1ull << 60;
  while (!todo.empty()) {
    auto [n, o] = todo.back();
    todo.pop_back();
    if (seen(n, o)) continue;
    out.push_back({n, o});
    const Node& nd = p.node(n);
    std::uint64_t fresh = scratch;
    auto prem_shapes = derive_premises(nd, fresh);
    for (std::size_t k = 0; k < nd.prems.size(); ++k) {
      const Node& ch = p.node(nd.prems[k]);
      const Sequent& shape = prem_shapes[k];
      for (std::size_t i = 0; i < shape.size() && i < ch.concl.size(); ++i) {
        bool inherited = shape[i].id < scratch;
        if (inherited && shape[i].id == o) todo.push_back({nd.prems[k], ch.concl[i].id});
        if (!inherited && nd.pay.main && *nd.pay.main == o) {
          switch (nd.rule) {
            case Rule::Or:
            case Rule::And:
            case Rule::Ex:
            case Rule::BEx:
            case Rule::All:
            case Rule::BAll: todo.push_back({nd.prems[k], ch.concl[i].id}); break;
            default: break;
          }
        }
      }
    }
  }
  return out;
}

namespace {
void collect_obj_consts(const Obj& t, std::vector<Ord>& out) {
  switch (t.kind()) {
    case Obj::K::Const: out.push_back(t.value()); return;
    case Obj::K::Var: return;
    case Obj::K::WExp: collect_obj_consts(t.expo(), out); return;
    default:
      collect_obj_consts(t.left(), out);
      collect_obj_consts(t.right(), out);
  }
}

void collect_formula_consts(const Formula& f, std::vector<Ord>& out) {
  using K = Formula::K;
  switch (f.kind()) {
    case K::Less:
    case K::RApp:
    case K::PAtom:
    case K::PRhoAtom:
      for (std::size_t i = 0; i < f.nterms(); ++i) collect_obj_consts(f.term(i), out);
      return;
    case K::Or:
    case K::And:
      collect_formula_consts(f.child(0), out);
      collect_formula_consts(f.child(1), out);
      return;
    case K::ExB:
    case K::AllB: collect_obj_consts(f.bound(), out); [[fallthrough]];
    case K::Ex:
    case K::All: collect_formula_consts(f.body(), out); return;
  }
}
}  // namespace

void collect_consts(const Node& n, std::vector<Ord>& out) {
  for (const auto& o : n.concl) collect_formula_consts(o.f, out);
  const Payload& p = n.pay;
  for (const auto& t : {p.witness, p.t0, p.t1, p.s_term, p.ind_t})
    if (t) collect_obj_consts(*t, out);
  for (const auto& f : {p.cut_formula, p.phi, p.ind_formula})
    if (f) collect_formula_consts(*f, out);
  if (p.relativizer) out.push_back(*p.relativizer);
}

bool is_explicit_occ(const Proof& p, const std::map<int, int>& parent, int node,
                     std::uint64_t id) {
  int n = node;
  std::uint64_t o = id;
  while (true) {
    DescStep s = descend(p, parent, n, o);
    switch (s.kind) {
      case DescStep::K::Root: return true;
      case DescStep::K::VanishCut:
      case DescStep::K::VanishRule: return false;
      case DescStep::K::At:
        n = s.node;
        o = s.occ;
        break;
    }
  }
}

}  // namespace opr::calc
