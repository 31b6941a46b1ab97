#include "trans/embed.hpp"

#include <functional>

#include "calc/check.hpp"
#include "io/formio.hpp"
#include "io/ordio.hpp"
#include "lang/eval.hpp"
#include "ord/arith.hpp"
#include "trans/taut.hpp"

namespace opr::trans {

using calc::Node;
using calc::Occ;
using calc::Rule;
using calc::find_occ;
using io::Sexpr;
using lang::negate;
using ord::Ord;

namespace {

std::string fresh_in(const Sequent& seq, const std::string& hint) {
  std::set<std::string> fv;
  for (const auto& o : seq) o.f.free_vars(fv);
  return lang::fresh_var(fv, hint);
}

// Linear chains of unary rules, built bottom-up. Nodes are linked once the
// top is known; ids() lists them bottom to top afterwards.
struct Chain {
  Proof& p;
  std::vector<Node> nodes;
  Sequent cur;
  std::vector<int> linked;

  Chain(Proof& pr, Sequent target) : p(pr), cur(std::move(target)) {}

  // append a rule whose conclusion is the current sequent; returns the new
  // top sequent (the rule's premise)
  Sequent& push(Node n) {
    n.concl = cur;
    std::uint64_t counter = p.next_occ;
    auto prems = calc::derive_premises(n, counter);
    if (prems.size() != 1) throw std::logic_error("Chain::push expects a unary rule");
    p.next_occ = counter;
    cur = std::move(prems[0]);
    nodes.push_back(std::move(n));
    return cur;
  }

  int finish(int top) {
    int child = top;
    std::vector<int> ids;
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
      it->prems = {child};
      child = p.add_node(std::move(*it));
      ids.push_back(child);
    }
    std::reverse(ids.begin(), ids.end());
    linked = std::move(ids);  // bottom to top
    return child;
  }
};

Node mk(Rule r) {
  Node n;
  n.rule = r;
  return n;
}

Node mk_or(std::uint64_t main, int disj) {
  Node n = mk(Rule::Or);
  n.pay.main = main;
  n.pay.disj = disj;
  return n;
}

Node mk_all(std::uint64_t main, std::string eigen) {
  Node n = mk(Rule::All);
  n.pay.main = main;
  n.pay.eigen = std::move(eigen);
  return n;
}

Node mk_ex(std::uint64_t main, Obj witness) {
  Node n = mk(Rule::Ex);
  n.pay.main = main;
  n.pay.witness = std::move(witness);
  return n;
}

struct Builder {
  Proof& p;
  std::vector<int> piece_roots;

  std::vector<Sequent> binary_premises(Node& n) {
    std::uint64_t counter = p.next_occ;
    auto prems = calc::derive_premises(n, counter);
    p.next_occ = counter;
    return prems;
  }

  std::pair<std::uint64_t, std::uint64_t> find_pair(const Sequent& seq) {
    for (std::size_t j = seq.size(); j-- > 0;)
      for (std::size_t i = seq.size(); i-- > 0;) {
        if (i == j) continue;
        if (negate(seq[j].f) == seq[i].f) return {seq[i].id, seq[j].id};
      }
    throw std::invalid_argument("taut leaf: no dual pair in the target sequent");
  }

  int build_leaf(const LeafSpec& spec, const Sequent& target);
  int build_skel(const Skel& s, const Sequent& target);

  int piece_psigma(const LeafSpec& spec, const Sequent& target, bool psig);
  int piece_induction(const LeafSpec& spec, const Sequent& target);
  int piece_reflection(const LeafSpec& spec, const Sequent& target);
};

int Builder::piece_psigma(const LeafSpec& spec, const Sequent& target, bool psig) {
  const Formula& phi = spec.formula.value();
  Chain ch(p, target);
  // open the universal closure
  std::uint64_t main = target.back().id;
  std::vector<std::string> eig;
  int quants = psig ? 3 : 2;
  for (int i = 0; i < quants; ++i) {
    std::string v = fresh_in(ch.cur, i == 0 ? "x" : (i == 1 && psig) ? "y" : "a");
    eig.push_back(v);
    ch.push(mk_all(main, v));
    main = ch.cur.back().id;
  }
  // six disjunct absorptions: ((G1 v G2) v G3) v G4
  std::uint64_t d3 = main;
  ch.push(mk_or(d3, 0));
  std::uint64_t d2 = ch.cur.back().id;
  ch.push(mk_or(d3, 1));
  std::uint64_t g4 = ch.cur.back().id;
  ch.push(mk_or(d2, 0));
  std::uint64_t d1 = ch.cur.back().id;
  ch.push(mk_or(d2, 1));
  std::uint64_t g3 = ch.cur.back().id;
  ch.push(mk_or(d1, 0));
  std::uint64_t g1 = ch.cur.back().id;
  ch.push(mk_or(d1, 1));
  std::uint64_t g2 = ch.cur.back().id;
  // the collapse rule turns the relativized instance back into phi
  Node col = mk(psig ? Rule::PSig : Rule::PrSig);
  col.pay.main = g4;
  col.pay.phi = phi;
  col.pay.kappa_var = spec.kappa_var;
  col.pay.arg_var = spec.arg_var;
  col.pay.guard = g1;
  col.pay.guard2 = g2;
  if (psig) {
    col.pay.t0 = Obj::var(eig[0]);
    col.pay.t1 = Obj::var(eig[1]);
    col.pay.s_term = Obj::var(eig[2]);
  } else {
    col.pay.t1 = Obj::var(eig[0]);
    col.pay.s_term = Obj::var(eig[1]);
  }
  ch.push(std::move(col));
  int top = taut_proof(p, ch.cur, g3, g4);
  int id = ch.finish(top);
  piece_roots.push_back(id);
  return id;
}

int Builder::piece_induction(const LeafSpec& spec, const Sequent& target) {
  const Formula& A = spec.formula.value();
  const std::string& x = spec.ind_var;
  Formula notPrg = Formula::ex(
      "y", Formula::and_(Formula::allb(x, Obj::var("y"), A),
                         negate(lang::subst(A, x, Obj::var("y")))));
  Chain ch(p, target);
  std::uint64_t m = target.back().id;
  // glue absorptions for the piece leftovers
  ch.push(mk_or(m, 0));
  std::uint64_t a1 = ch.cur.back().id;  // notPrg
  ch.push(mk_or(m, 1));
  std::uint64_t a2 = ch.cur.back().id;  // all y A(y)
  // the piece proper: one more (or) and the (all), then the cut
  ch.push(mk_or(m, 0));
  std::uint64_t b1 = ch.cur.back().id;  // second notPrg
  std::string y = fresh_in(ch.cur, "y");
  ch.push(mk_all(a2, y));
  std::uint64_t b2 = ch.cur.back().id;  // A(y)

  // cut on  not(all x<y A)  =  ex x<y not-A
  Node cut = mk(Rule::Cut);
  cut.concl = ch.cur;
  cut.pay.cut_formula = Formula::exb(x, Obj::var(y), negate(A));
  for (const auto& o : ch.cur)
    if (o.id != b1 && o.id != b2) cut.pay.left_ids.push_back(o.id);
  auto prems = binary_premises(cut);

  // left: (ball) then (ind)
  Sequent lseq = prems[0];
  std::uint64_t allxy = lseq.back().id;
  Chain lch(p, lseq);
  std::string xe = fresh_in(lseq, "x");
  {
    Node ball = mk(Rule::BAll);
    ball.pay.main = allxy;
    ball.pay.eigen = xe;
    lch.push(std::move(ball));
  }
  Sequent ind_concl = lch.cur;
  std::uint64_t guard = ind_concl[ind_concl.size() - 2].id;
  std::uint64_t ax_occ = ind_concl.back().id;
  Node ind = mk(Rule::Ind);
  ind.concl = ind_concl;
  ind.pay.ind_formula = A;
  ind.pay.ind_var = x;
  ind.pay.s_term = Obj::var(xe);
  ind.pay.ind_t = Obj::var(y);
  ind.pay.guard = guard;
  std::string ye = fresh_in(ind_concl, "y");
  ind.pay.eigen = ye;
  auto iprems = binary_premises(ind);

  // ind premise 0: derive notPrg's witness instance
  auto d0_block = [&](Sequent seq, std::uint64_t notprg_occ, std::uint64_t exb_occ,
                      std::uint64_t ay_occ, const Obj& wit) -> int {
    Chain c(p, seq);
    c.push(mk_ex(notprg_occ, wit));
    std::uint64_t conj = c.cur.back().id;
    Node andn = mk(Rule::And);
    andn.concl = c.cur;
    andn.pay.main = conj;
    auto ap = binary_premises(andn);
    int leafA = taut_proof(p, ap[0], exb_occ, ap[0].back().id);
    int leafB = taut_proof(p, ap[1], ap[1].back().id, ay_occ);
    andn.prems = {leafA, leafB};
    int top = p.add_node(std::move(andn));
    return c.finish(top);
  };

  std::uint64_t c1 = iprems[0][iprems[0].size() - 2].id;  // ex x<y' not-A
  std::uint64_t c2 = iprems[0].back().id;                 // A(y')
  int ip0 = d0_block(iprems[0], a1, c1, c2, Obj::var(ye));
  std::uint64_t c3 = iprems[1].back().id;  // not A(xe)
  int ip1 = taut_proof(p, iprems[1], c3, ax_occ);
  ind.prems = {ip0, ip1};
  int ind_id = p.add_node(std::move(ind));
  int left = lch.finish(ind_id);

  // right: the same block against the real y and the cut formula
  Sequent rseq = prems[1];
  std::uint64_t cf = rseq.back().id;
  int right = d0_block(rseq, b1, cf, b2, Obj::var(y));

  cut.prems = {left, right};
  int cut_id = p.add_node(std::move(cut));
  int id = ch.finish(cut_id);
  // the piece root in the sense of the depicted figure sits above the two
  // glue absorptions
  piece_roots.push_back(ch.linked.at(2));
  return id;
}

int Builder::piece_reflection(const LeafSpec& spec, const Sequent& target) {
  const Formula& A = spec.formula.value();
  const std::string& x = spec.ind_var;
  Chain ch(p, target);
  std::uint64_t f = target.back().id;
  std::string z = fresh_in(ch.cur, "z");
  ch.push(mk_all(f, z));
  std::uint64_t m0 = ch.cur.back().id;
  ch.push(mk_or(m0, 0));
  std::uint64_t d0occ = ch.cur.back().id;  // ex x<z not-A
  ch.push(mk_or(m0, 1));
  std::uint64_t d1occ = ch.cur.back().id;  // ex y all x<z A^(y)

  Node rfl = mk(Rule::Rfl);
  rfl.concl = ch.cur;
  rfl.pay.ind_formula = A;
  rfl.pay.ind_var = x;
  rfl.pay.ind_t = Obj::var(z);
  std::string y = fresh_in(ch.cur, "y");
  rfl.pay.eigen = y;
  auto prems = binary_premises(rfl);

  int left = taut_proof(p, prems[0], d0occ, prems[0].back().id);

  Sequent rseq = prems[1];
  std::uint64_t q1 = rseq[1].id;  // ex x<z not-A^(y)
  Chain rch(p, rseq);
  rch.push(mk_ex(d1occ, Obj::var(y)));
  std::uint64_t q2 = rch.cur.back().id;
  int rtop = taut_proof(p, rch.cur, q1, q2);
  int right = rch.finish(rtop);

  rfl.prems = {left, right};
  int rfl_id = p.add_node(std::move(rfl));
  int id = ch.finish(rfl_id);
  piece_roots.push_back(id);
  return id;
}

int Builder::build_leaf(const LeafSpec& spec, const Sequent& target) {
  switch (spec.kind) {
    case LeafKind::Taut: {
      auto [neg, pos] = find_pair(target);
      int id = taut_proof(p, target, neg, pos);
      piece_roots.push_back(id);
      return id;
    }
    case LeafKind::AxiomClosure: {
      Chain ch(p, target);
      std::uint64_t main = target.back().id;
      for (const auto& v : spec.vars) {
        ch.push(mk_all(main, v));
        main = ch.cur.back().id;
      }
      Node ax = mk(Rule::Ax);
      ax.concl = ch.cur;
      ax.pay.main = main;
      int top = p.add_node(std::move(ax));
      int id = ch.finish(top);
      piece_roots.push_back(id);
      return id;
    }
    case LeafKind::Pexists: {
      Chain ch(p, target);
      std::string a = fresh_in(target, "a");
      Node ball = mk(Rule::BAll);
      ball.pay.main = target.back().id;
      ball.pay.eigen = a;
      ch.push(std::move(ball));
      Node ax = mk(Rule::PEx);
      ax.concl = ch.cur;
      ax.pay.main = ch.cur.back().id;
      ax.pay.guard2 = ch.cur[ch.cur.size() - 2].id;
      ax.pay.s_term = Obj::var(a);
      int top = p.add_node(std::move(ax));
      int id = ch.finish(top);
      piece_roots.push_back(id);
      return id;
    }
    case LeafKind::Prho0exists: {
      Chain ch(p, target);
      std::string y = fresh_in(target, "y");
      ch.push(mk_all(target.back().id, y));
      Node ax = mk(Rule::PrEx);
      ax.concl = ch.cur;
      ax.pay.main = ch.cur.back().id;
      ax.pay.s_term = Obj::var(y);
      int top = p.add_node(std::move(ax));
      int id = ch.finish(top);
      piece_roots.push_back(id);
      return id;
    }
    case LeafKind::PSigma1: return piece_psigma(spec, target, true);
    case LeafKind::Prho0Sigma1: return piece_psigma(spec, target, false);
    case LeafKind::TransInduction: return piece_induction(spec, target);
    case LeafKind::Reflection: return piece_reflection(spec, target);
  }
  throw std::logic_error("build_leaf unreachable");
}

int Builder::build_skel(const Skel& s, const Sequent& target) {
  switch (s.k) {
    case Skel::K::Leaf: return build_leaf(s.leaf, target);
    case Skel::K::Cut: {
      // the right child proves the cut formula F; when F itself is not an
      // admissible cut formula the dual is designated and the premises swap
      Node n = mk(Rule::Cut);
      n.concl = target;
      Formula F = s.formula ? *s.formula : leaf_axiom_formula(s.kids.at(1).leaf);
      if (lang::is_cuttable(F)) {
        n.pay.cut_formula = F;
        for (const auto& o : target) n.pay.left_ids.push_back(o.id);
        auto prems = binary_premises(n);
        n.prems = {build_skel(s.kids.at(0), prems[0]), build_skel(s.kids.at(1), prems[1])};
      } else {
        n.pay.cut_formula = lang::negate(F);
        auto prems = binary_premises(n);  // left = [F], right = target ++ [not F]
        n.prems = {build_skel(s.kids.at(1), prems[0]), build_skel(s.kids.at(0), prems[1])};
      }
      return p.add_node(std::move(n));
    }
    default: {
      std::uint64_t mi = 0;
      bool found = false;
      for (const auto& o : target)
        if (o.f == s.formula.value()) {
          mi = o.id;
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument("skeleton main formula not in target");
      Node n;
      n.concl = target;
      n.pay.main = mi;
      switch (s.k) {
        case Skel::K::Or: n.rule = Rule::Or; n.pay.disj = s.disj; break;
        case Skel::K::And: n.rule = Rule::And; break;
        case Skel::K::Ex: n.rule = Rule::Ex; n.pay.witness = s.witness; break;
        case Skel::K::BEx: n.rule = Rule::BEx; n.pay.witness = s.witness; break;
        case Skel::K::All: n.rule = Rule::All; n.pay.eigen = s.eigen; break;
        case Skel::K::BAll: n.rule = Rule::BAll; n.pay.eigen = s.eigen; break;
        default: throw std::logic_error("unreachable");
      }
      if (n.rule == Rule::BEx && !n.pay.guard) {
        // witness below the bound must hold for the guard-free form
      }
      auto prems = binary_premises(n);
      for (auto& kidseq : prems) (void)kidseq;
      if (n.rule == Rule::And) {
        n.prems = {build_skel(s.kids.at(0), prems[0]), build_skel(s.kids.at(1), prems[1])};
      } else {
        n.prems = {build_skel(s.kids.at(0), prems[0])};
      }
      return p.add_node(std::move(n));
    }
  }
}

}  // namespace

int build_skeleton(Proof& p, const Skel& s, const Sequent& target,
                   std::vector<int>* pieces) {
  Builder b{p};
  int id = b.build_skel(s, target);
  if (pieces) pieces->insert(pieces->end(), b.piece_roots.begin(), b.piece_roots.end());
  return id;
}

void wrap_initial(Proof& p, int q1, const Sequent& root_seq, int k) {
  p.root = q1;
  Ord b1 = calc::assign(p).o.at(q1);
  for (int i = 0; i < k; ++i) b1 = Ord::wpow(b1);
  int below = q1;
  for (int i = 0; i < k; ++i) {
    Node h = mk(Rule::H);
    h.concl = root_seq;
    h.prems = {below};
    below = p.add_node(std::move(h));
  }
  Node d1 = mk(Rule::D1);
  d1.concl = root_seq;
  d1.prems = {below};
  d1.pay.stock = Ord::zero();
  d1.pay.relativizer = Ord::d(1, Ord::wpow(b1));
  below = p.add_node(std::move(d1));
  Ord b0 = Ord::d(1, Ord::wpow(b1));
  for (int i = 0; i < k; ++i) b0 = Ord::wpow(b0);
  for (int i = 0; i < k; ++i) {
    Node h = mk(Rule::H);
    h.concl = root_seq;
    h.prems = {below};
    below = p.add_node(std::move(h));
  }
  Ord c0 = ord::nsum(Ord::wpow(b1), Ord::nat(1));
  Node d0 = mk(Rule::D0);
  d0.concl = root_seq;
  d0.prems = {below};
  d0.pay.stock = c0;
  d0.pay.relativizer = Ord::d(0, ord::nsum(c0, b0));
  p.root = p.add_node(std::move(d0));
}

Formula leaf_axiom_formula(const LeafSpec& spec) {
  Obj w1c = Obj::constant(Ord::w1());
  switch (spec.kind) {
    case LeafKind::AxiomClosure: {
      Formula f = spec.formula.value();
      for (auto it = spec.vars.rbegin(); it != spec.vars.rend(); ++it)
        f = Formula::all(*it, f);
      return f;
    }
    case LeafKind::Pexists:
      return Formula::allb(
          "a", w1c,
          Formula::exb("x", w1c,
                       Formula::exb("y", w1c,
                                    Formula::and_(Formula::less(Obj::var("a"), Obj::var("x")),
                                                  Formula::p_atom(Obj::var("x"), Obj::var("y"))))));
    case LeafKind::Prho0exists:
      return Formula::all(
          "y", Formula::ex("x", Formula::and_(Formula::less(Obj::var("y"), Obj::var("x")),
                                              Formula::prho_atom(Obj::var("x")))));
    case LeafKind::PSigma1: {
      const Formula& phi = spec.formula.value();
      Formula inner = Formula::or_(
          Formula::or_(
              Formula::or_(Formula::p_atom(Obj::var("x"), Obj::var("y"), true),
                           Formula::less(Obj::var("a"), Obj::var("x"), true)),
              negate(lang::subst(lang::subst(phi, spec.kappa_var, w1c), spec.arg_var,
                                 Obj::var("a")))),
          lang::subst(lang::subst(lang::relativize(phi, Obj::var("y")), spec.kappa_var,
                                  Obj::var("x")),
                      spec.arg_var, Obj::var("a")));
      return Formula::all("x", Formula::all("y", Formula::all("a", inner)));
    }
    case LeafKind::Prho0Sigma1: {
      const Formula& phi = spec.formula.value();
      Formula inner = Formula::or_(
          Formula::or_(Formula::or_(Formula::prho_atom(Obj::var("x"), true),
                                    Formula::less(Obj::var("y"), Obj::var("x"), true)),
                       negate(lang::subst(phi, spec.arg_var, Obj::var("y")))),
          lang::subst(lang::relativize(phi, Obj::var("x")), spec.arg_var, Obj::var("y")));
      return Formula::all("x", Formula::all("y", inner));
    }
    case LeafKind::TransInduction: {
      const Formula& A = spec.formula.value();
      const std::string& x = spec.ind_var;
      Formula notPrg = Formula::ex(
          "y", Formula::and_(Formula::allb(x, Obj::var("y"), A),
                             negate(lang::subst(A, x, Obj::var("y")))));
      return Formula::or_(notPrg, Formula::all("y", lang::subst(A, x, Obj::var("y"))));
    }
    case LeafKind::Reflection: {
      const Formula& A = spec.formula.value();
      const std::string& x = spec.ind_var;
      Formula matrix = Formula::or_(
          Formula::exb(x, Obj::var("z"), negate(A)),
          Formula::ex("y", Formula::allb(x, Obj::var("z"), lang::relativize(A, Obj::var("y")))));
      return Formula::all("z", matrix);
    }
    case LeafKind::Taut: return spec.formula.value();
  }
  throw std::logic_error("leaf_axiom_formula unreachable");
}

EmbedResult embed(const Skel& skel, const Formula& goal) {
  EmbedResult res;
  Proof& p = res.proof;
  Sequent root_seq{{p.fresh_occ(), goal}};
  int q1 = build_skeleton(p, skel, root_seq, &res.piece_roots);

  // k bounds every cut and induction degree, 10 at least
  int k = 10;
  for (const auto& [id, n] : p.nodes) {
    if (n.rule == Rule::Cut)
      k = std::max(k, static_cast<int>(lang::dg(*n.pay.cut_formula)));
    if (n.rule == Rule::Ind)
      k = std::max(k, static_cast<int>(lang::dg(Formula::allb(
                          n.pay.ind_var, *n.pay.s_term, *n.pay.ind_formula))));
  }
  res.k = k;
  wrap_initial(p, q1, root_seq, k);
  auto ann = calc::assign(p);
  for (int pr : res.piece_roots) res.piece_ords.push_back(ann.o.at(pr));
  return res;
}

namespace {

const char* leaf_kind_name(LeafKind k) {
  switch (k) {
    case LeafKind::AxiomClosure: return "axiom-closure";
    case LeafKind::PSigma1: return "PSigma1";
    case LeafKind::Pexists: return "Pexists";
    case LeafKind::Prho0Sigma1: return "Prho0Sigma1";
    case LeafKind::Prho0exists: return "Prho0exists";
    case LeafKind::TransInduction: return "trans-induction";
    case LeafKind::Reflection: return "reflection";
    case LeafKind::Taut: return "taut";
  }
  return "?";
}

LeafKind leaf_kind_of(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(LeafKind::Taut); ++i)
    if (s == leaf_kind_name(static_cast<LeafKind>(i))) return static_cast<LeafKind>(i);
  throw io::ParseError("unknown leaf kind '" + s + "'");
}

const char* skel_kind_name(Skel::K k) {
  switch (k) {
    case Skel::K::Cut: return "cut";
    case Skel::K::Or: return "or";
    case Skel::K::And: return "and";
    case Skel::K::Ex: return "ex";
    case Skel::K::All: return "all";
    case Skel::K::BEx: return "bex";
    case Skel::K::BAll: return "ball";
    case Skel::K::Leaf: return "leaf";
  }
  return "?";
}

Skel skel_of_sexpr(const Sexpr& e) {
  if (e.atom || e.head() != "skel") throw io::ParseError("expected (skel ...)");
  Skel s;
  const std::string& kind = e.at(1).text;
  bool found = false;
  for (int i = 0; i <= static_cast<int>(Skel::K::Leaf); ++i)
    if (kind == skel_kind_name(static_cast<Skel::K>(i))) {
      s.k = static_cast<Skel::K>(i);
      found = true;
    }
  if (!found) throw io::ParseError("unknown skeleton kind '" + kind + "'");
  for (std::size_t i = 2; i < e.len(); ++i) {
    const std::string key = e.at(i).text;
    const Sexpr& v = e.at(++i);
    if (key == ":formula") s.formula = io::formula_of_sexpr(v);
    else if (key == ":disj") s.disj = std::stoi(v.text);
    else if (key == ":witness") s.witness = io::obj_of_sexpr(v);
    else if (key == ":eigen") s.eigen = v.text;
    else if (key == ":leaf") s.leaf.kind = leaf_kind_of(v.text);
    else if (key == ":lformula") s.leaf.formula = io::formula_of_sexpr(v);
    else if (key == ":vars")
      for (std::size_t j = 0; j < v.len(); ++j) s.leaf.vars.push_back(v.at(j).text);
    else if (key == ":kappa") s.leaf.kappa_var = v.text;
    else if (key == ":argv") s.leaf.arg_var = v.text;
    else if (key == ":indvar") s.leaf.ind_var = v.text;
    else if (key == ":kids")
      for (std::size_t j = 0; j < v.len(); ++j) s.kids.push_back(skel_of_sexpr(v.at(j)));
    else throw io::ParseError("unknown skeleton key " + key);
  }
  return s;
}

Sexpr skel_to_sexpr(const Skel& s) {
  std::vector<Sexpr> xs{Sexpr::sym("skel"), Sexpr::sym(skel_kind_name(s.k))};
  if (s.formula) { xs.push_back(Sexpr::sym(":formula")); xs.push_back(io::formula_to_sexpr(*s.formula)); }
  if (s.k == Skel::K::Or) { xs.push_back(Sexpr::sym(":disj")); xs.push_back(Sexpr::sym(std::to_string(s.disj))); }
  if (s.witness) { xs.push_back(Sexpr::sym(":witness")); xs.push_back(io::obj_to_sexpr(*s.witness)); }
  if (!s.eigen.empty()) { xs.push_back(Sexpr::sym(":eigen")); xs.push_back(Sexpr::sym(s.eigen)); }
  if (s.k == Skel::K::Leaf) {
    xs.push_back(Sexpr::sym(":leaf"));
    xs.push_back(Sexpr::sym(leaf_kind_name(s.leaf.kind)));
    if (s.leaf.formula) { xs.push_back(Sexpr::sym(":lformula")); xs.push_back(io::formula_to_sexpr(*s.leaf.formula)); }
    if (!s.leaf.vars.empty()) {
      std::vector<Sexpr> vs;
      for (const auto& v : s.leaf.vars) vs.push_back(Sexpr::sym(v));
      xs.push_back(Sexpr::sym(":vars"));
      xs.push_back(Sexpr::list(vs));
    }
    if (!s.leaf.kappa_var.empty()) { xs.push_back(Sexpr::sym(":kappa")); xs.push_back(Sexpr::sym(s.leaf.kappa_var)); }
    if (!s.leaf.arg_var.empty()) { xs.push_back(Sexpr::sym(":argv")); xs.push_back(Sexpr::sym(s.leaf.arg_var)); }
    if (!s.leaf.ind_var.empty()) { xs.push_back(Sexpr::sym(":indvar")); xs.push_back(Sexpr::sym(s.leaf.ind_var)); }
  }
  if (!s.kids.empty()) {
    std::vector<Sexpr> ks;
    for (const auto& k : s.kids) ks.push_back(skel_to_sexpr(k));
    xs.push_back(Sexpr::sym(":kids"));
    xs.push_back(Sexpr::list(ks));
  }
  return Sexpr::list(xs);
}

}  // namespace

Skel parse_skeleton(const std::string& text) { return skel_of_sexpr(io::parse_sexpr(text)); }
std::string print_skeleton(const Skel& s) { return skel_to_sexpr(s).print(); }

}  // namespace opr::trans
