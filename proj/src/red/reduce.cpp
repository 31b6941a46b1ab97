#include "red/reduce.hpp"

#include <algorithm>
#include <functional>

#include "io/formio.hpp"
#include "ord/arith.hpp"
#include "ord/order.hpp"
#include "trans/surgery.hpp"
#include "trans/taut.hpp"

namespace opr::red {

using calc::Annotation;
using calc::CheckConfig;
using calc::DescStep;
using calc::Formula;
using calc::Node;
using calc::Obj;
using calc::Occ;
using calc::Rule;
using calc::Sequent;
using calc::find_occ;
using lang::Tri;
using ord::Cmp;
using ord::Ord;

const char* case_name(Case c) {
  switch (c) {
    case Case::A1AxTaut: return "A1-ax-taut";
    case Case::A2PrhoEx: return "A2-prho0ex";
    case Case::A3PexGuard: return "A3-pex-guard";
    case Case::A3PexMain: return "A3-pex-main";
    case Case::R11Forall: return "R1.1-forall";
    case Case::R121PSigma1: return "R1.2.1-psigma1";
    case Case::R122PrhoSigma1: return "R1.2.2-prho0sigma1";
    case Case::R1OtherLogical: return "R1-other-logical";
    case Case::R2Rfl: return "R2-rfl";
    case Case::R31IndGuard: return "R3.1-ind-guard";
    case Case::R32IndUnfold: return "R3.2-ind-unfold";
    case Case::R41ImplicitDelta0: return "R4.1-implicit-delta0";
    case Case::R42ImplicitCut: return "R4.2-implicit-cut";
  }
  return "?";
}

std::vector<int> main_branch(const Proof& p) {
  std::vector<int> out{p.root};
  int cur = p.root;
  while (true) {
    const Node& n = p.node(cur);
    int next = -1;
    switch (n.rule) {
      case Rule::Cut: next = n.prems.at(1); break;
      case Rule::H:
      case Rule::PSig:
      case Rule::PrSig:
      case Rule::D0:
      case Rule::D1: next = n.prems.at(0); break;
      default: return out;
    }
    out.push_back(next);
    cur = next;
  }
}

int top_of_main_branch(const Proof& p) { return main_branch(p).back(); }

namespace {

struct Stuck {
  std::string why;
};

// ---- helpers -------------------------------------------------------------

Tri eval_closed(const Formula& f, lang::EvalCtx& ctx) {
  if (!f.closed()) return Tri::Undecided;
  if (f.is_atom() || lang::is_delta0(f)) return lang::eval_delta0(f, ctx);
  return Tri::Undecided;
}

// the path from `from` (exclusive) down to the root
std::vector<int> path_below(const Proof& p, const std::map<int, int>& parent, int from) {
  std::vector<int> out;
  int cur = parent.at(from);
  while (cur >= 0) {
    out.push_back(cur);
    cur = parent.at(cur);
  }
  return out;
}

// insert an occurrence into every sequent on the path (front position keeps
// (h) suffixes intact)
void add_down(Proof& p, const std::vector<int>& path, const Occ& o) {
  for (int id : path) p.node(id).concl.insert(p.node(id).concl.begin(), o);
}

// Follow the descendant chain of (node, occ); returns the vanishing cut and
// the side (0 = left premise, 1 = right premise) or nothing when the chain
// reaches the end-sequent.
struct VanishInfo {
  int cut = -1;
  int side = 0;
  Formula at_cut;  // the chain formula at the vanishing occurrence
};
std::optional<VanishInfo> chain_to_cut(const Proof& p, const std::map<int, int>& parent,
                                       int node, std::uint64_t occ) {
  int cur = node;
  std::uint64_t o = occ;
  while (true) {
    DescStep s = calc::descend(p, parent, cur, o);
    switch (s.kind) {
      case DescStep::K::Root: return std::nullopt;
      case DescStep::K::VanishRule:
        throw std::logic_error("descendant chain vanished outside a cut");
      case DescStep::K::VanishCut: {
        const Node& cut = p.node(s.node);
        int side = cut.prems.at(0) == cur ? 0 : 1;
        Formula f = [&]() {
          auto i = find_occ(p.node(cur).concl, o);
          return p.node(cur).concl[*i].f;
        }();
        return VanishInfo{s.node, side, f};
      }
      case DescStep::K::At:
        cur = s.node;
        o = s.occ;
        break;
    }
  }
}

// The collapse of a cut: keep one premise subtree, drop the other; the
// vanishing occurrence on the kept side is handled by the caller beforehand
// (dropped as a false literal or propagated to the end-sequent).
void collapse_cut(Proof& p, int cut, int keep_side) {
  auto parent = p.parents();
  int keep = p.node(cut).prems.at(keep_side);
  trans::replace_child(p, parent.at(cut), cut, keep);
  if (p.root == cut) p.root = keep;
  trans::garbage_collect(p);
}

// the cut-formula occurrence of a premise: the one not in the conclusion
std::uint64_t cut_occ_of(const Proof& p, const Node& J, int side) {
  const Node& prem = p.node(J.prems.at(side));
  for (const auto& o : prem.concl)
    if (!find_occ(J.concl, o.id)) return o.id;
  throw std::logic_error("cut premise lost its cut formula");
}

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

// series-bottom D1 carrying the stock for node `d1`
int stock_carrier(const Proof& p, const std::map<int, int>& parent, int d1) {
  int n = d1;
  while (true) {
    if (p.node(n).pay.stock) return n;
    int par = parent.at(n);
    if (par < 0 || p.node(par).rule != Rule::D1) return n;
    n = par;
  }
}

// ordinal of a node computed in isolation (no collapse rules inside)
Ord assign_at(const Proof& p, int node) {
  Proof scratch = p;
  scratch.root = node;
  return calc::assign(scratch).o.at(node);
}

// Replay the spine segment between `top_node` (exclusive) and `bottom_node`
// (exclusive): the nodes strictly between, copied with `extra` occurrences
// carried through; non-spine premises are cloned untouched. `spine_child`
// supplies the replay's top attachment. Returns the bottom copy (attachable
// where bottom_node's premise pointed).
int replay_between(Proof& p, const std::vector<int>& spine, int top_node, int bottom_node,
                   int spine_child, const std::vector<Occ>& extra) {
  // spine lists root..top; find the strict segment
  std::vector<int> seg;
  bool in = false;
  for (int id : spine) {
    if (id == bottom_node) {
      in = true;
      continue;
    }
    if (id == top_node) break;
    if (in) seg.push_back(id);
  }
  // seg runs bottom-up; build top-down
  int child = spine_child;
  for (auto it = seg.rbegin(); it != seg.rend(); ++it) {
    Node copy = p.node(*it);
    copy.concl.insert(copy.concl.begin(), extra.begin(), extra.end());
    std::vector<int> kids;
    for (std::size_t k = 0; k < copy.prems.size(); ++k) {
      bool on_spine = std::find(spine.begin(), spine.end(), copy.prems[k]) != spine.end();
      // the spine continues through the rightmost premise for cuts
      bool is_spine_slot = copy.rule == Rule::Cut ? (k == 1) : (k == 0);
      if (on_spine && is_spine_slot) kids.push_back(child);
      else kids.push_back(trans::clone_subtree(p, copy.prems[k]));
    }
    copy.prems = kids;
    child = p.add_node(std::move(copy));
  }
  return child;
}

struct Engine {
  Proof& p;
  CheckConfig& cfg;
  Annotation ann;
  std::map<int, int> parent;
  std::vector<int> spine;

  explicit Engine(Proof& pr, CheckConfig& c) : p(pr), cfg(c) {
    ann = calc::assign(p);
    parent = p.parents();
    spine = main_branch(p);
  }

  Tri truth(const Formula& f) { return eval_closed(f, cfg.eval); }

  void require_false(const Formula& f, const char* who) {
    Tri v = truth(f);
    if (v == Tri::True) throw std::logic_error(std::string(who) + ": expected false formula");
    if (v == Tri::Undecided) throw Stuck{std::string(who) + ": cannot certify falsity of " +
                                         io::print_formula(f)};
  }

  // ---- case surgeries ----

  StepResult case_a1(int top) {
    const Node& t = p.node(top);
    // locate the true member
    std::optional<std::uint64_t> true_occ;
    if (t.rule == Rule::Taut) {
      for (auto cand : {t.pay.main2, t.pay.main}) {
        auto i = find_occ(t.concl, *cand);
        if (truth(t.concl[*i].f) == Tri::True) {
          true_occ = *cand;
          break;
        }
      }
    } else {
      auto i = find_occ(t.concl, *t.pay.main);
      if (truth(t.concl[*i].f) == Tri::True) true_occ = *t.pay.main;
    }
    if (!true_occ) throw Stuck{"axiom top without a certifiably true member"};

    auto v = chain_to_cut(p, parent, top, *true_occ);
    if (!v) {
      // the true member survives to the end-sequent
      auto i = find_occ(t.concl, *true_occ);
      return {StepResult::Tag::Witness, std::nullopt, t.concl[*i].f, std::nullopt, {}};
    }
    if (v->side != 1) throw std::logic_error("A1: true member vanished on the left");
    Node& J = p.node(v->cut);
    std::uint64_t neg_occ = cut_occ_of(p, J, 0);
    Formula negC = lang::negate(v->at_cut);
    int left = J.prems[0];
    if (lang::is_delta0(negC) || (negC.is_atom() && negC.kind() != Formula::K::PAtom &&
                                  negC.kind() != Formula::K::PRhoAtom)) {
      // the false dual rides down to the end-sequent
      require_false(negC, "A1");
      Occ down{neg_occ, negC};
      auto below = path_below(p, parent, v->cut);
      collapse_cut(p, v->cut, 0);
      add_down(p, below, down);
      return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
    }
    // P-shaped literal: eliminate inside the kept subproof
    require_false(negC, "A1");
    trans::drop_false_literal(p, left, neg_occ);
    collapse_cut(p, v->cut, 0);
    return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
  }

  // guard-style collapse: the true literal `occ` at `node` vanishes at a cut;
  // the other side holds the false dual, which is eliminated
  void collapse_on_true_literal(int node, std::uint64_t occ) {
    auto v = chain_to_cut(p, parent, node, occ);
    if (!v) throw std::logic_error("true literal reached the end-sequent");
    Node& J = p.node(v->cut);
    int keep = 1 - v->side;
    std::uint64_t dual_occ = cut_occ_of(p, J, keep);
    require_false(lang::negate(v->at_cut), "guard-collapse");
    trans::drop_false_literal(p, J.prems[keep], dual_occ);
    collapse_cut(p, v->cut, keep);
  }

  StepResult case_a2(int top) {
    const Node& t = p.node(top);
    Formula C = t.concl[*find_occ(t.concl, *t.pay.main)].f;
    auto v = chain_to_cut(p, parent, top, *t.pay.main);
    if (!v) throw std::logic_error("A2: existential reached the end-sequent");
    if (v->side != 1) throw std::logic_error("A2: existential vanished on the left");
    (void)C;
    // the D1 series below the cut
    int d1 = -1;
    for (int id = parent.at(v->cut); id >= 0; id = parent.at(id))
      if (p.node(id).rule == Rule::D1) {
        d1 = id;
        break;
      }
    if (d1 < 0) throw std::logic_error("A2: no (D1) below the cut");
    int carrier = stock_carrier(p, parent, d1);
    Ord c1 = stock_of(p, parent, d1);
    Ord ell = Ord::d(1, c1);
    Obj ell_c = Obj::constant(ell);

    Node& J = p.node(v->cut);
    int left = J.prems[0];
    std::uint64_t neg_occ = cut_occ_of(p, J, 0);
    // invert  all x (not(s<x) or not Pr0(x))  at ell, split, eliminate
    trans::invert_all(p, left, neg_occ, ell_c, cfg.eval);
    auto [f0, f1] = trans::invert_or_split(p, left, neg_occ);
    {
      const Node& L = p.node(left);
      require_false(L.concl[*find_occ(L.concl, f0)].f, "A2");
      require_false(L.concl[*find_occ(L.concl, f1)].f, "A2");
    }
    trans::drop_false_literal(p, left, f0);
    trans::drop_false_literal(p, left, f1);
    collapse_cut(p, v->cut, 0);
    p.node(carrier).pay.stock = ord::nsum(c1, Ord::nat(1));
    return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
  }

  StepResult case_a3(int top) {
    const Node& t = p.node(top);
    // guard subcase first
    if (t.pay.guard2) {
      auto gi = find_occ(t.concl, *t.pay.guard2);
      if (truth(t.concl[*gi].f) == Tri::True) {
        collapse_on_true_literal(top, *t.pay.guard2);
        return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
      }
    }
    auto v = chain_to_cut(p, parent, top, *t.pay.main);
    if (!v) throw std::logic_error("A3: existential reached the end-sequent");
    if (v->side != 1) throw std::logic_error("A3: existential vanished on the left");
    const Node& root = p.node(p.root);
    if (root.rule != Rule::D0) throw std::logic_error("A3: no (D0) at the root");
    Ord c0 = root.pay.stock.value();
    Ord ell = Ord::d(0, c0);
    Ord f_ell = Ord::f(c0);
    Node& J = p.node(v->cut);
    int left = J.prems[0];
    std::uint64_t neg_occ = cut_occ_of(p, J, 0);
    trans::invert_all(p, left, neg_occ, Obj::constant(ell), cfg.eval);
    trans::invert_all(p, left, neg_occ, Obj::constant(f_ell), cfg.eval);
    auto [f0, f1] = trans::invert_or_split(p, left, neg_occ);
    {
      const Node& L = p.node(left);
      require_false(L.concl[*find_occ(L.concl, f0)].f, "A3");
      require_false(L.concl[*find_occ(L.concl, f1)].f, "A3");
    }
    trans::drop_false_literal(p, left, f0);
    trans::drop_false_literal(p, left, f1);
    collapse_cut(p, v->cut, 0);
    p.node(p.root).pay.stock = ord::nsum(c0, Ord::nat(1));
    return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
  }

  // erase a unary logical rule at the top; its minors ride to the end-sequent
  StepResult erase_top_rule(int top, const std::vector<Obj>& eigen_subst,
                            std::optional<Obj> witness_term,
                            std::optional<Formula> witness_formula) {
    Node& t = p.node(top);
    int child = t.prems.at(0);
    std::uint64_t scratch = 1ull << 60;
    auto shape = calc::derive_premises(t, scratch).at(0);
    std::vector<Occ> minors;
    const Node& ch = p.node(child);
    for (const auto& o : ch.concl)
      if (!find_occ(t.concl, o.id)) minors.push_back(o);
    if (!t.pay.eigen.empty()) {
      if (eigen_subst.size() != 1) throw std::logic_error("eigen substitution missing");
      trans::subst_subtree(p, child, t.pay.eigen, eigen_subst[0]);
    }
    // conclusion occurrences the premise dropped (guards) must keep flowing
    std::vector<Occ> lost;
    for (const auto& o : t.concl)
      if (!find_occ(p.node(child).concl, o.id)) lost.push_back(o);
    if (!lost.empty()) trans::weaken_subtree_with(p, child, lost);
    // re-read minors after substitution
    minors.clear();
    for (const auto& o : p.node(child).concl)
      if (!find_occ(t.concl, o.id)) minors.push_back(o);
    for (const auto& m : minors) require_false(m.f, "minor descent");
    auto below = path_below(p, parent, top);
    trans::replace_child(p, parent.at(top), top, child);
    if (p.root == top) p.root = child;
    for (const auto& m : minors) add_down(p, below, m);
    trans::garbage_collect(p);
    (void)witness_term;
    (void)witness_formula;
    return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
  }

  StepResult case_r11(int top) {
    Node& t = p.node(top);
    const Formula& main = t.concl[*find_occ(t.concl, *t.pay.main)].f;
    Formula A = lang::negate(main.body());
    auto mu = lang::resolve_mu(A, main.var(), cfg.eval);
    std::optional<Obj> s;
    if (mu) s = Obj::constant(*mu);
    if (!s) throw Stuck{"R1.1: no resolvable witness bound for " + io::print_formula(main)};
    Formula inst = lang::subst(main.body(), main.var(), *s);
    Tri v = truth(inst);
    if (v == Tri::True)
      return {StepResult::Tag::Witness, std::nullopt, main, *s, {}};
    if (v == Tri::Undecided) throw Stuck{"R1.1: instance undecided"};
    return erase_top_rule(top, {*s}, std::nullopt, std::nullopt);
  }

  StepResult case_r1_other(int top) {
    Node& t = p.node(top);
    const Formula main = t.concl[*find_occ(t.concl, *t.pay.main)].f;
    switch (t.rule) {
      case Rule::Ex:
      case Rule::BEx: {
        Formula inst = lang::subst(main.body(), main.var(), *t.pay.witness);
        Tri v = truth(inst);
        bool in_range = true;
        if (t.rule == Rule::BEx)
          in_range = truth(Formula::less(*t.pay.witness, main.bound())) == Tri::True;
        if (v == Tri::True && in_range)
          return {StepResult::Tag::Witness, std::nullopt, main, *t.pay.witness, {}};
        if (v == Tri::Undecided) throw Stuck{"explicit existential: instance undecided"};
        return erase_top_rule(top, {}, std::nullopt, std::nullopt);
      }
      case Rule::BAll: {
        // least counterexample below the bound
        Formula A = lang::negate(main.body());
        Formula bounded = Formula::and_(Formula::less(Obj::var(main.var()), main.bound()), A);
        auto mu = lang::resolve_mu(bounded, main.var(), cfg.eval);
        if (!mu) throw Stuck{"bounded universal: bound not finitely searchable"};
        Formula inst = lang::subst(main.body(), main.var(), Obj::constant(*mu));
        Tri whole = truth(main);
        if (whole == Tri::True)
          return {StepResult::Tag::Witness, std::nullopt, main, std::nullopt, {}};
        Tri v = truth(inst);
        if (v != Tri::False) throw Stuck{"bounded universal: counterexample not certified"};
        return erase_top_rule(top, {Obj::constant(*mu)}, std::nullopt, std::nullopt);
      }
      case Rule::Or: {
        Formula minor = main.child(t.pay.disj);
        Tri v = truth(minor);
        if (v == Tri::True)
          return {StepResult::Tag::Witness, std::nullopt, main, std::nullopt, {}};
        if (v == Tri::Undecided) throw Stuck{"disjunct undecided"};
        return erase_top_rule(top, {}, std::nullopt, std::nullopt);
      }
      case Rule::And: {
        Tri v0 = truth(main.child(0));
        Tri v1 = truth(main.child(1));
        if (v0 == Tri::True && v1 == Tri::True)
          return {StepResult::Tag::Witness, std::nullopt, main, std::nullopt, {}};
        int pick = v0 == Tri::False ? 0 : v1 == Tri::False ? 1 : -1;
        if (pick < 0) throw Stuck{"conjunction sides undecided"};
        // keep the false side's premise
        Node& nd = p.node(top);
        int keep = nd.prems.at(pick);
        const Node& ch = p.node(keep);
        std::vector<Occ> minors;
        for (const auto& o : ch.concl)
          if (!find_occ(nd.concl, o.id)) minors.push_back(o);
        for (const auto& m : minors) require_false(m.f, "minor descent");
        auto below = path_below(p, parent, top);
        trans::replace_child(p, parent.at(top), top, keep);
        if (p.root == top) p.root = keep;
        for (const auto& m : minors) add_down(p, below, m);
        trans::garbage_collect(p);
        return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
      }
      default: throw std::logic_error("R1-other: unexpected top rule");
    }
  }

  // the PSig/PrSig node affecting the top's main-formula descendants, if any
  std::optional<int> affecting_collapse(int top, std::uint64_t occ) {
    int cur = top;
    std::uint64_t o = occ;
    while (true) {
      DescStep s = calc::descend(p, parent, cur, o);
      if (s.kind != DescStep::K::At) return std::nullopt;
      const Node& nd = p.node(s.node);
      if ((nd.rule == Rule::PSig || nd.rule == Rule::PrSig) && nd.pay.main == s.occ)
        return s.node;
      cur = s.node;
      o = s.occ;
    }
  }

  StepResult case_r12_collapse(int top, int sig) {
    const Node& sn = p.node(sig);
    bool psig = sn.rule == Rule::PSig;
    Formula pos_guard = psig ? Formula::p_atom(*sn.pay.t0, *sn.pay.t1)
                             : Formula::prho_atom(*sn.pay.t1);
    Formula pos_guard2 = Formula::less(*sn.pay.s_term, psig ? *sn.pay.t0 : *sn.pay.t1);
    // a false collapse literal sends the reduction through the guard route
    for (auto [g, lit] : {std::pair{sn.pay.guard, pos_guard},
                          std::pair{sn.pay.guard2, pos_guard2}}) {
      if (!g) continue;
      if (truth(lit) == Tri::False) {
        collapse_on_true_literal(sig, *g);
        return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
      }
    }
    if (truth(pos_guard) != Tri::True || truth(pos_guard2) != Tri::True)
      throw Stuck{"collapse rule guards undecided"};
    // both true: the false instance of the existential's minor descends
    return case_r1_other(top);
  }

  StepResult case_r2(int top) {
    Node& rfl = p.node(top);
    // the D1 series below, single series expected on the spine
    int low = -1, high = -1;
    for (int id = parent.at(top); id >= 0; id = parent.at(id))
      if (p.node(id).rule == Rule::D1) {
        if (high < 0) high = id;
        low = id;
      }
    if (low < 0) throw std::logic_error("R2: no (D1) below a (Rfl)");
    if (low != high) throw std::logic_error("R2: multi-member (D1) series not supported");
    int J = low;
    Ord c1 = stock_of(p, parent, J);
    const Formula A = *rfl.pay.ind_formula;
    const std::string& x = rfl.pay.ind_var;
    const Obj t = *rfl.pay.ind_t;
    const std::string y = rfl.pay.eigen;

    // left branch: the Rfl's left premise rides the replayed segment and a
    // fresh (D1) relativizing the universal
    int lsub = rfl.prems.at(0);
    std::uint64_t all_occ = [&]() {
      for (const auto& o : p.node(lsub).concl)
        if (!find_occ(rfl.concl, o.id)) return o.id;
      throw std::logic_error("R2: left premise lost its universal");
    }();
    Occ all_o = p.node(lsub).concl[*find_occ(p.node(lsub).concl, all_occ)];
    int lreplay = replay_between(p, spine, top, J, lsub, {all_o});
    Ord a_ell = assign_at(p, lreplay);
    Ord ell = Ord::d(1, ord::nsum(c1, Ord::wpow(a_ell)));
    Obj ell_c = Obj::constant(ell);

    Node d1l;
    d1l.rule = Rule::D1;
    d1l.concl = p.node(J).concl;
    d1l.concl.insert(d1l.concl.begin(), {all_o.id, lang::relativize(all_o.f, ell_c)});
    d1l.prems = {lreplay};
    d1l.pay.gamma_ids = p.node(J).pay.gamma_ids;
    d1l.pay.gamma_ids.push_back(all_o.id);
    d1l.pay.stock = c1;
    d1l.pay.relativizer = ell;
    int left_branch = p.add_node(std::move(d1l));

    // right branch: the instantiated right premise through the copied (D1)
    // with the enlarged stock
    int rsub = rfl.prems.at(1);
    trans::subst_subtree(p, rsub, y, ell_c);
    const Node& rn = p.node(rsub);
    std::uint64_t q0 = rn.concl[0].id;
    std::uint64_t q1 = rn.concl[1].id;
    require_false(rn.concl[0].f, "R2");
    trans::drop_false_literal(p, rsub, q0);
    Occ ex_o = p.node(rsub).concl[*find_occ(p.node(rsub).concl, q1)];
    int rreplay = replay_between(p, spine, top, J, rsub, {ex_o});
    Ord a_r = assign_at(p, rreplay);
    Ord c2 = ord::nsum(c1, Ord::wpow(a_ell), Ord::nat(1));
    Node d1r = p.node(J);
    d1r.id = -1;
    d1r.concl.insert(d1r.concl.begin(), ex_o);
    d1r.prems = {rreplay};
    d1r.pay.stock = c2;
    int right_branch = p.add_node(std::move(d1r));
    (void)a_r;

    Node cut;
    cut.rule = Rule::Cut;
    cut.concl = p.node(J).concl;
    cut.pay.cut_formula = ex_o.f;
    cut.prems = {left_branch, right_branch};
    int cut_id = p.add_node(std::move(cut));
    trans::replace_child(p, parent.at(J), J, cut_id);
    if (p.root == J) p.root = cut_id;
    trans::garbage_collect(p);
    return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
  }

  StepResult case_r31(int top) {
    Node& t = p.node(top);
    Node ax;
    ax.rule = Rule::Ax;
    ax.concl = t.concl;
    ax.pay.main = *t.pay.guard;
    int id = p.add_node(std::move(ax));
    trans::replace_child(p, parent.at(top), top, id);
    if (p.root == top) p.root = id;
    trans::garbage_collect(p);
    return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
  }

  StepResult case_r32(int top) {
    Node ind = p.node(top);  // copy of the payload and premises
    const Formula A = *ind.pay.ind_formula;
    const std::string& x = ind.pay.ind_var;
    const Obj s = *ind.pay.s_term;
    const Obj t = *ind.pay.ind_t;
    if (!s.closed() || !t.closed()) throw Stuck{"R3.2 needs closed induction terms"};

    // outer cut on  ex x<s not-A  at the (ind)'s position
    Node outer;
    outer.rule = Rule::Cut;
    outer.concl = ind.concl;
    Formula C2 = Formula::exb(x, s, lang::negate(A));
    outer.pay.cut_formula = C2;
    for (const auto& o : outer.concl) outer.pay.left_ids.push_back(o.id);
    std::uint64_t counter = p.next_occ;
    auto oprems = calc::derive_premises(outer, counter);
    p.next_occ = counter;

    // left: (ball) over a fresh (ind) with induction term s
    Sequent lseq = oprems[0];
    std::uint64_t notC2 = lseq.back().id;
    Node ball;
    ball.rule = Rule::BAll;
    ball.concl = lseq;
    ball.pay.main = notC2;
    ball.pay.eigen = "z`" + std::to_string(p.next_occ++);
    counter = p.next_occ;
    auto bprems = calc::derive_premises(ball, counter);
    p.next_occ = counter;
    Sequent ind2_concl = bprems[0];
    std::uint64_t guard_occ = ind2_concl[ind2_concl.size() - 2].id;
    std::uint64_t az_occ = ind2_concl.back().id;

    Node ind2;
    ind2.rule = Rule::Ind;
    ind2.concl = ind2_concl;
    ind2.pay.ind_formula = A;
    ind2.pay.ind_var = x;
    ind2.pay.s_term = Obj::var(ball.pay.eigen);
    ind2.pay.ind_t = s;
    ind2.pay.guard = guard_occ;
    ind2.pay.eigen = ind.pay.eigen;  // still fresh: the new context adds no free use
    counter = p.next_occ;
    auto iprems = calc::derive_premises(ind2, counter);
    p.next_occ = counter;

    // premise 0: the old subproof, weakened by the new context
    int p0 = trans::clone_subtree(p, ind.prems.at(0));
    {
      const Node& old0 = p.node(ind.prems.at(0));
      std::vector<std::uint64_t> old_minors;
      for (const auto& o : old0.concl)
        if (!find_occ(ind.concl, o.id)) old_minors.push_back(o.id);
      // rename the two rule-created occurrences onto the expected ones
      const Sequent& want = iprems[0];
      std::uint64_t want_c1 = want[want.size() - 2].id;
      std::uint64_t want_c2 = want.back().id;
      for (int m : p.subtree(p0)) {
        Node& mn = p.node(m);
        for (auto& oc : mn.concl) {
          if (oc.id == old_minors.at(0)) oc.id = want_c1;
          else if (old_minors.size() > 1 && oc.id == old_minors.at(1)) oc.id = want_c2;
        }
        auto ren = [&](std::optional<std::uint64_t>& vv) {
          if (!vv) return;
          if (*vv == old_minors.at(0)) vv = want_c1;
          else if (old_minors.size() > 1 && *vv == old_minors.at(1)) vv = want_c2;
        };
        ren(mn.pay.main);
        ren(mn.pay.main2);
        ren(mn.pay.guard);
        ren(mn.pay.guard2);
      }
      // supply the occurrences the new context adds
      std::vector<Occ> extra;
      extra.push_back({notC2, Formula::allb(x, s, A)});
      extra.push_back({guard_occ, Formula::less(Obj::var(ball.pay.eigen), s, true)});
      extra.push_back({az_occ, lang::subst(A, x, Obj::var(ball.pay.eigen))});
      for (int m : p.subtree(p0))
        p.node(m).concl.insert(p.node(m).concl.begin(), extra.begin(), extra.end());
    }
    // premise 1: the canonical tautology
    int p1 = trans::taut_proof(p, iprems[1], iprems[1].back().id, az_occ);
    ind2.prems = {p0, p1};
    int ind2_id = p.add_node(std::move(ind2));
    ball.prems = {ind2_id};
    int ball_id = p.add_node(std::move(ball));

    // right: inner cut on A(s)
    Sequent rseq = oprems[1];  // [C2]
    std::uint64_t c2_occ = rseq.back().id;
    Node inner;
    inner.rule = Rule::Cut;
    inner.concl = rseq;
    Formula As = lang::subst(A, x, s);
    Formula notAs = lang::negate(As);
    bool e_side_neg = lang::is_cuttable(notAs);
    inner.pay.cut_formula = e_side_neg ? notAs : As;
    if (e_side_neg) inner.pay.left_ids.push_back(c2_occ);
    counter = p.next_occ;
    auto inprems = calc::derive_premises(inner, counter);
    p.next_occ = counter;

    // the [y:=s] instance of the old first premise proves C2 with A(s)
    int q0 = trans::clone_subtree(p, ind.prems.at(0));
    {
      const Node& old0 = p.node(ind.prems.at(0));
      std::vector<std::uint64_t> old_minors;
      for (const auto& o : old0.concl)
        if (!find_occ(ind.concl, o.id)) old_minors.push_back(o.id);
      trans::subst_subtree(p, q0, ind.pay.eigen, s);
      // C2-occurrence and A(s)-occurrence line up with the inner premise
      const Sequent& want = e_side_neg ? inprems[0] : inprems[1];
      std::uint64_t want_cf = want.back().id;  // A(s) side
      std::uint64_t my_c2 = e_side_neg ? c2_occ : want.back().id;
      for (int m : p.subtree(q0)) {
        Node& mn = p.node(m);
        for (auto& oc : mn.concl) {
          if (oc.id == old_minors.at(0)) oc.id = my_c2;
          else if (old_minors.size() > 1 && oc.id == old_minors.at(1))
            oc.id = e_side_neg ? want_cf : c2_occ;
        }
        auto ren = [&](std::optional<std::uint64_t>& vv) {
          if (!vv) return;
          if (*vv == old_minors.at(0)) vv = my_c2;
          else if (old_minors.size() > 1 && *vv == old_minors.at(1))
            vv = e_side_neg ? want_cf : c2_occ;
        };
        ren(mn.pay.main);
        ren(mn.pay.main2);
        ren(mn.pay.guard);
        ren(mn.pay.guard2);
      }
    }
    // the old second premise proves not-A(s)
    int q1 = trans::clone_subtree(p, ind.prems.at(1));
    {
      const Node& old1 = p.node(ind.prems.at(1));
      std::uint64_t old_minor = 0;
      for (const auto& o : old1.concl)
        if (!find_occ(ind.concl, o.id)) old_minor = o.id;
      const Sequent& want = e_side_neg ? inprems[1] : inprems[0];
      std::uint64_t want_occ = want.back().id;
      for (int m : p.subtree(q1)) {
        Node& mn = p.node(m);
        for (auto& oc : mn.concl)
          if (oc.id == old_minor) oc.id = want_occ;
        auto ren = [&](std::optional<std::uint64_t>& vv) {
          if (vv && *vv == old_minor) vv = want_occ;
        };
        ren(mn.pay.main);
        ren(mn.pay.main2);
        ren(mn.pay.guard);
        ren(mn.pay.guard2);
      }
    }
    inner.prems = e_side_neg ? std::vector<int>{q0, q1} : std::vector<int>{q1, q0};
    int inner_id = p.add_node(std::move(inner));

    outer.prems = {ball_id, inner_id};
    int outer_id = p.add_node(std::move(outer));
    trans::replace_child(p, parent.at(top), top, outer_id);
    if (p.root == top) p.root = outer_id;
    trans::garbage_collect(p);
    return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
  }

  StepResult case_r4(int top) {
    Node& t = p.node(top);
    auto v = chain_to_cut(p, parent, top, *t.pay.main);
    if (!v) throw std::logic_error("R4: implicit formula reached the end-sequent");
    Node& J = p.node(v->cut);
    const Formula C = v->at_cut;
    if (lang::is_delta0(C)) {
      // Case 4.1: one of C, not-C is false and rides down
      Tri vC = truth(C);
      if (vC == Tri::Undecided) throw Stuck{"implicit Delta0 descendant undecided"};
      int keep = vC == Tri::False ? v->side : 1 - v->side;
      std::uint64_t occ = cut_occ_of(p, J, keep);
      Formula down_f = keep == v->side ? C : lang::negate(C);
      require_false(down_f, "R4.1");
      Occ down{occ, down_f};
      auto below = path_below(p, parent, v->cut);
      collapse_cut(p, v->cut, keep);
      add_down(p, below, down);
      return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
    }
    return case_r42(top, v->cut, v->at_cut);
  }

  StepResult case_r42(int top, int cut, const Formula& C) {
    // the uppermost (h) below the vanishing cut
    int jh = -1;
    for (int id = parent.at(cut); id >= 0; id = parent.at(id))
      if (p.node(id).rule == Rule::H) {
        jh = id;
        break;
      }
    if (jh < 0) throw std::logic_error("R4.2: no (h) below the vanishing cut");

    Node& J = p.node(cut);
    Node& t = p.node(top);
    const Formula main = [&]() {
      if (t.rule == Rule::Or) return t.concl[*find_occ(t.concl, *t.pay.main)].f;
      return t.concl[*find_occ(t.concl, *t.pay.main)].f;
    }();
    Formula As = lang::subst(main.body(), main.var(), *t.pay.witness);

    // left part: the old cut with the existential rule erased above the right
    // premise; the minor occurrence rides down to the (h)-level
    int child = t.prems.at(0);
    std::vector<Occ> minors;
    for (const auto& o : p.node(child).concl)
      if (!find_occ(t.concl, o.id)) minors.push_back(o);
    trans::replace_child(p, parent.at(top), top, child);
    std::vector<int> seg_path;
    for (int id = parent.at(top); id != jh; id = parent.at(id)) seg_path.push_back(id);
    for (const auto& m : minors)
      for (int id : seg_path) p.node(id).concl.insert(p.node(id).concl.begin(), m);

    // right part: the inverted left subproof of the old cut
    int lsub = J.prems.at(0);
    std::uint64_t negC_occ = cut_occ_of(p, J, 0);
    trans::invert_all(p, lsub, negC_occ, *t.pay.witness, cfg.eval);
    // after inversion the occurrence holds not-A'(s)
    Occ notAs_occ = [&]() {
      const Node& L = p.node(lsub);
      return L.concl[*find_occ(L.concl, negC_occ)];
    }();

    // detach the old cut: its conclusion stays with the left part only
    auto parent2 = p.parents();
    int jpar = parent2.at(cut);
    trans::replace_child(p, jpar, cut, J.prems.at(1));
    // the old right premise keeps the C occurrence; it rides down to jh
    std::uint64_t c_occ = cut_occ_of(p, J, 1);
    Occ c_down = [&]() {
      const Node& R = p.node(p.node(cut).prems.at(1));
      return R.concl[*find_occ(R.concl, c_occ)];
    }();
    for (int id = jpar; id != jh; id = parent2.at(id))
      p.node(id).concl.insert(p.node(id).concl.begin(), c_down);
    (void)c_down;

    // new cut at the (h) position
    Node& H = p.node(jh);
    Node ncut;
    ncut.rule = Rule::Cut;
    ncut.concl = H.concl;
    bool e_neg = lang::is_cuttable(lang::negate(As));
    ncut.pay.cut_formula = e_neg ? lang::negate(As) : As;
    // wrap both branches in (h)
    Node hl;
    hl.rule = Rule::H;
    hl.concl = ncut.concl;  // adjusted below
    Node hr;
    hr.rule = Rule::H;
    // left branch root: the old chain from jh's premise upward
    int old_chain = H.prems.at(0);
    hl.prems = {old_chain};
    hr.prems = {lsub};
    // conclusions: the premise occurrences plus nothing; the cut supplies them
    std::uint64_t counter = p.next_occ;
    auto nprems = calc::derive_premises(ncut, counter);
    p.next_occ = counter;
    hl.concl = e_neg ? nprems[0] : nprems[1];
    hr.concl = e_neg ? nprems[1] : nprems[0];
    int hl_id = p.add_node(std::move(hl));
    int hr_id = p.add_node(std::move(hr));
    ncut.prems = e_neg ? std::vector<int>{hl_id, hr_id} : std::vector<int>{hr_id, hl_id};
    int ncut_id = p.add_node(std::move(ncut));
    trans::replace_child(p, parent.at(jh), jh, ncut_id);
    if (p.root == jh) p.root = ncut_id;
    (void)notAs_occ;
    trans::garbage_collect(p);
    return {StepResult::Tag::Stepped, std::nullopt, std::nullopt, std::nullopt, {}};
  }

  StepResult dispatch() {
    int top = spine.back();
    const Node& t = p.node(top);
    {
      std::set<std::string> fv;
      for (const auto& o : t.concl) o.f.free_vars(fv);
      if (!fv.empty()) throw std::logic_error("main-branch top has free variables");
    }
    Case c;
    StepResult r{StepResult::Tag::Stuck, std::nullopt, std::nullopt, std::nullopt, {}};
    switch (t.rule) {
      case Rule::Ax:
      case Rule::Taut:
        c = Case::A1AxTaut;
        r = case_a1(top);
        break;
      case Rule::PrEx:
        c = Case::A2PrhoEx;
        r = case_a2(top);
        break;
      case Rule::PEx: {
        bool guard_route =
            t.pay.guard2 &&
            truth(p.node(top).concl[*find_occ(t.concl, *t.pay.guard2)].f) == Tri::True;
        c = guard_route ? Case::A3PexGuard : Case::A3PexMain;
        r = case_a3(top);
        break;
      }
      case Rule::All:
        c = Case::R11Forall;
        r = case_r11(top);
        break;
      case Rule::Ind: {
        bool guard_true =
            t.pay.guard &&
            truth(t.concl[*find_occ(t.concl, *t.pay.guard)].f) == Tri::True;
        if (guard_true) {
          c = Case::R31IndGuard;
          r = case_r31(top);
        } else {
          c = Case::R32IndUnfold;
          r = case_r32(top);
        }
        break;
      }
      case Rule::Rfl:
        c = Case::R2Rfl;
        r = case_r2(top);
        break;
      case Rule::Ex:
      case Rule::BEx:
      case Rule::Or:
      case Rule::And:
      case Rule::BAll: {
        bool expl = calc::is_explicit_occ(p, parent, top, *t.pay.main);
        if (expl) {
          if (auto sig = affecting_collapse(top, *t.pay.main)) {
            c = p.node(*sig).rule == Rule::PSig ? Case::R121PSigma1 : Case::R122PrhoSigma1;
            r = case_r12_collapse(top, *sig);
          } else {
            c = t.rule == Rule::All ? Case::R11Forall : Case::R1OtherLogical;
            r = case_r1_other(top);
          }
        } else {
          auto v = chain_to_cut(p, parent, top, *t.pay.main);
          if (!v) throw std::logic_error("implicit top without a vanishing cut");
          c = lang::is_delta0(v->at_cut) ? Case::R41ImplicitDelta0 : Case::R42ImplicitCut;
          r = case_r4(top);
        }
        break;
      }
      default: throw std::logic_error("no reduction case applies to this top");
    }
    if (r.tag == StepResult::Tag::Stepped) {
      ReductionStep step;
      step.case_id = c;
      r.step = step;
    }
    return r;
  }
};

}  // namespace

StepResult reduce_step(Proof& p, CheckConfig& cfg) {
  Engine eng(p, cfg);
  Ord before = eng.ann.o_root;
  StepResult r = [&]() {
    try {
      return eng.dispatch();
    } catch (const Stuck& s) {
      return StepResult{StepResult::Tag::Stuck, std::nullopt, std::nullopt, std::nullopt,
                        s.why};
    }
  }();
  if (r.tag != StepResult::Tag::Stepped) return r;
  Annotation after = calc::assign(p);
  if (ord::compare(after.o_root, before) != Cmp::LT)
    throw std::logic_error("reduction step failed to descend");
  r.step->o_before = before;
  r.step->o_after = after.o_root;
  for (const auto& [id, n] : p.nodes)
    if (n.pay.stock) r.step->stocks.push_back({id, *n.pay.stock});
  return r;
}

Outcome run(Proof p, CheckConfig cfg, const RunLimits& limits) {
  Outcome out;
  cfg.eval.fuel = limits.eval_fuel;
  for (int step = 0;; ++step) {
    calc::seed_pool_from_proof(p, cfg.eval);
    // a certifiably true member of the end-sequent stops the run
    for (const auto& o : p.node(p.root).concl) {
      cfg.eval.fuel = limits.eval_fuel;
      if (eval_closed(o.f, cfg.eval) == Tri::True) {
        out.tag = Outcome::Tag::Witness;
        out.witness_formula = o.f;
        out.steps = step;
        return out;
      }
    }
    if (step >= limits.max_steps) {
      out.tag = Outcome::Tag::StepLimit;
      out.steps = step;
      return out;
    }
    auto diags = calc::validate(p, cfg);
    if (!diags.empty()) {
      out.tag = Outcome::Tag::Stuck;
      out.diagnostic = "proof failed revalidation: [" + diags[0].clause + "] " +
                       diags[0].message;
      out.steps = step;
      return out;
    }
    cfg.eval.fuel = limits.eval_fuel;
    std::vector<std::pair<std::uint64_t, Formula>> before_end;
    for (const auto& o : p.node(p.root).concl) before_end.push_back({o.id, o.f});
    StepResult r = reduce_step(p, cfg);
    if (r.tag == StepResult::Tag::Stepped) {
      for (const auto& o : p.node(p.root).concl) {
        bool had = false;
        for (const auto& [id, f] : before_end) had = had || id == o.id;
        if (!had) r.step->added.push_back(o.f);
      }
    }
    switch (r.tag) {
      case StepResult::Tag::Witness:
        out.tag = Outcome::Tag::Witness;
        out.witness_formula = r.witness_formula;
        out.witness_term = r.witness_term;
        out.steps = step;
        return out;
      case StepResult::Tag::Stuck:
        out.tag = Outcome::Tag::Stuck;
        out.diagnostic = r.diagnostic;
        out.steps = step;
        return out;
      case StepResult::Tag::Stepped:
        out.trace.push_back(*r.step);
        break;
    }
  }
}

}  // namespace opr::red
