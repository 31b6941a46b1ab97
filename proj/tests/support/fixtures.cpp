#include "support/fixtures.hpp"

#include "lang/eval.hpp"
#include "trans/taut.hpp"
#include "ord/arith.hpp"

namespace opr::fix {

using calc::Node;
using calc::Occ;
using calc::Rule;
using lang::negate;
using ord::Ord;
using trans::LeafKind;
using trans::Skel;

Formula sigma2_goal(std::uint64_t bound) {
  return Formula::ex("x", Formula::allb("y", Obj::num(bound),
                                        Formula::less(Obj::var("y"), Obj::var("x"))));
}

Skel dev_skel(std::uint64_t bound) {
  Formula goal = sigma2_goal(bound);
  Skel leaf;
  leaf.k = Skel::K::Leaf;
  leaf.leaf.kind = LeafKind::Taut;
  Skel ball;
  ball.k = Skel::K::BAll;
  ball.formula = Formula::allb("y", Obj::num(bound), Formula::less(Obj::var("y"), Obj::num(bound)));
  ball.eigen = "z";
  ball.kids = {leaf};
  Skel ex;
  ex.k = Skel::K::Ex;
  ex.formula = goal;
  ex.witness = Obj::num(bound);
  ex.kids = {ball};
  return ex;
}

trans::EmbedResult embed_simple(std::uint64_t bound) {
  return trans::embed(dev_skel(bound), sigma2_goal(bound));
}

calc::CheckConfig default_cfg(const Proof& p) {
  calc::CheckConfig cfg;
  calc::seed_pool_from_proof(p, cfg.eval);
  return cfg;
}

namespace {

// a cut under the spine whose right subtree is `right_builder`'s and whose
// left is the development of the goal with the negated cut formula floating
struct CutFixture {
  Proof p;
  Sequent root_seq;
  std::uint64_t goal_occ;

  explicit CutFixture(std::uint64_t bound = 2) {
    root_seq.push_back({p.fresh_occ(), sigma2_goal(bound)});
    goal_occ = root_seq[0].id;
  }

  // the development of the goal formula witnessing `bound`, built against a
  // target that may carry arbitrary junk
  int dev(const Sequent& target, std::uint64_t bound = 2) {
    return trans::build_skeleton(p, dev_skel(bound), target);
  }
};

}  // namespace

Proof fix_a1() {
  CutFixture f;
  Formula L = Formula::less(Obj::num(0), Obj::num(1));
  Node cut;
  cut.rule = Rule::Cut;
  cut.concl = f.root_seq;
  cut.pay.cut_formula = L;
  std::uint64_t counter = f.p.next_occ;
  auto prems = calc::derive_premises(cut, counter);
  f.p.next_occ = counter;
  int left = f.dev(prems[0]);
  Node ax;
  ax.rule = Rule::Ax;
  ax.concl = prems[1];
  ax.pay.main = prems[1].back().id;
  int right = f.p.add_node(std::move(ax));
  cut.prems = {left, right};
  int q1 = f.p.add_node(std::move(cut));
  trans::wrap_initial(f.p, q1, f.root_seq, 10);
  return std::move(f.p);
}

Proof fix_a2() {
  CutFixture f;
  Formula C = Formula::ex("x", Formula::and_(Formula::less(Obj::num(0), Obj::var("x")),
                                             Formula::prho_atom(Obj::var("x"))));
  Node cut;
  cut.rule = Rule::Cut;
  cut.concl = f.root_seq;
  cut.pay.cut_formula = C;
  std::uint64_t counter = f.p.next_occ;
  auto prems = calc::derive_premises(cut, counter);
  f.p.next_occ = counter;
  int left = f.dev(prems[0]);
  Node ax;
  ax.rule = Rule::PrEx;
  ax.concl = prems[1];
  ax.pay.main = prems[1].back().id;
  ax.pay.s_term = Obj::num(0);
  int right = f.p.add_node(std::move(ax));
  cut.prems = {left, right};
  int q1 = f.p.add_node(std::move(cut));
  trans::wrap_initial(f.p, q1, f.root_seq, 10);
  return std::move(f.p);
}

namespace {
Formula pex_main(const Obj& s) {
  Obj w1c = Obj::constant(Ord::w1());
  return Formula::exb(
      "x", w1c,
      Formula::exb("y", w1c,
                   Formula::and_(Formula::less(s, Obj::var("x")),
                                 Formula::p_atom(Obj::var("x"), Obj::var("y")))));
}
}  // namespace

Proof fix_a3_main() {
  CutFixture f;
  Formula C = pex_main(Obj::num(0));
  Node cut;
  cut.rule = Rule::Cut;
  cut.concl = f.root_seq;
  cut.pay.cut_formula = C;
  std::uint64_t counter = f.p.next_occ;
  auto prems = calc::derive_premises(cut, counter);
  f.p.next_occ = counter;
  int left = f.dev(prems[0]);
  Node ax;
  ax.rule = Rule::PEx;
  ax.concl = prems[1];
  ax.pay.main = prems[1].back().id;
  ax.pay.s_term = Obj::num(0);  // 0 < w1 holds, guard absent
  int right = f.p.add_node(std::move(ax));
  cut.prems = {left, right};
  int q1 = f.p.add_node(std::move(cut));
  trans::wrap_initial(f.p, q1, f.root_seq, 10);
  return std::move(f.p);
}

Proof fix_a3_guard() {
  // outer cut consumes the existential, inner cut consumes its true guard;
  // the axiom sits above the inner cut carrying both
  CutFixture f;
  Obj w1c = Obj::constant(Ord::w1());
  Formula guard_lit = Formula::less(w1c, w1c, true);  // w1 </ w1, true
  Formula C = pex_main(w1c);
  Node outer;
  outer.rule = Rule::Cut;
  outer.concl = f.root_seq;
  outer.pay.cut_formula = C;
  std::uint64_t counter = f.p.next_occ;
  auto oprems = calc::derive_premises(outer, counter);
  f.p.next_occ = counter;
  int left = f.dev(oprems[0]);

  Sequent inner_concl = oprems[1];  // [goal, C]
  Node inner;
  inner.rule = Rule::Cut;
  inner.concl = inner_concl;
  inner.pay.cut_formula = guard_lit;
  counter = f.p.next_occ;
  auto iprems = calc::derive_premises(inner, counter);
  f.p.next_occ = counter;
  int ileft = f.dev(iprems[0]);  // [goal, C, w1<w1] development
  // right: the axiom supplies the existential with its guard occurrence
  Node ax;
  ax.rule = Rule::PEx;
  ax.concl = iprems[1];
  auto ci = calc::find_occ(iprems[1], inner_concl.back().id);
  ax.pay.main = iprems[1][*ci].id;
  ax.pay.s_term = w1c;
  ax.pay.guard2 = iprems[1].back().id;
  int iright = f.p.add_node(std::move(ax));
  inner.prems = {ileft, iright};
  int inner_id = f.p.add_node(std::move(inner));
  outer.prems = {left, inner_id};
  int q1 = f.p.add_node(std::move(outer));
  trans::wrap_initial(f.p, q1, f.root_seq, 10);
  return std::move(f.p);
}

Proof fix_r11() {
  // a false unbounded universal member reduced via its least counterexample
  CutFixture f;
  Formula junk = Formula::all("y", Formula::or_(Formula::less(Obj::var("y"), Obj::num(2), true),
                                                Formula::less(Obj::var("y"), Obj::num(1))));
  Sequent root{{f.p.fresh_occ(), sigma2_goal(5)}, {f.p.fresh_occ(), junk}};
  Node alln;
  alln.rule = Rule::All;
  alln.concl = root;
  alln.pay.main = root[1].id;
  alln.pay.eigen = "w";
  std::uint64_t counter = f.p.next_occ;
  auto prems = calc::derive_premises(alln, counter);
  f.p.next_occ = counter;
  int above = trans::build_skeleton(f.p, dev_skel(5), prems[0]);
  alln.prems = {above};
  int q1 = f.p.add_node(std::move(alln));
  trans::wrap_initial(f.p, q1, root, 10);
  return std::move(f.p);
}

Proof fix_r1_other() {
  // a false bounded universal member: all y<2 (y<1)
  CutFixture f;
  Formula junk = Formula::allb("y", Obj::num(2), Formula::less(Obj::var("y"), Obj::num(1)));
  Sequent root{{f.p.fresh_occ(), sigma2_goal(5)}, {f.p.fresh_occ(), junk}};
  Node ball;
  ball.rule = Rule::BAll;
  ball.concl = root;
  ball.pay.main = root[1].id;
  ball.pay.eigen = "w";
  std::uint64_t counter = f.p.next_occ;
  auto prems = calc::derive_premises(ball, counter);
  f.p.next_occ = counter;
  int above = trans::build_skeleton(f.p, dev_skel(5), prems[0]);
  ball.prems = {above};
  int q1 = f.p.add_node(std::move(ball));
  trans::wrap_initial(f.p, q1, root, 10);
  return std::move(f.p);
}

namespace {
Proof fix_r12(bool psig) {
  CutFixture f;
  // phi(kappa, u) = ex y (u<y and y<kappa); the collapse instance lands false
  Formula phi =
      psig ? Formula::ex("v", Formula::and_(Formula::less(Obj::var("u"), Obj::var("v")),
                                            Formula::less(Obj::var("v"), Obj::var("kk"))))
           : Formula::ex("v", Formula::less(Obj::var("u"), Obj::var("v")));
  Obj t0 = Obj::num(5);
  Obj t1 = psig ? Obj::num(1) : Obj::num(3);
  Obj s0 = Obj::num(2);
  Formula inst =
      psig ? lang::subst(lang::subst(lang::relativize(phi, t1), "kk", t0), "u", s0)
           : lang::subst(lang::relativize(phi, t1), "u", s0);
  Formula guard_pos = psig ? Formula::p_atom(t0, t1) : Formula::prho_atom(t1);

  Sequent root{{f.p.fresh_occ(), sigma2_goal(2)}, {f.p.fresh_occ(), inst}};
  Node cut;
  cut.rule = Rule::Cut;
  cut.concl = root;
  cut.pay.cut_formula = negate(guard_pos);
  std::uint64_t counter = f.p.next_occ;
  auto prems = calc::derive_premises(cut, counter);
  f.p.next_occ = counter;
  // left: the development, with the false positive literal floating
  int left = f.dev(prems[0]);
  // right: the collapse rule over the witnessing development of phi
  Sequent rtarget = prems[1];  // [inst, not-guard]
  Node sig;
  sig.rule = psig ? Rule::PSig : Rule::PrSig;
  sig.concl = rtarget;
  for (const auto& o : rtarget)
    if (o.f == inst) sig.pay.main = o.id;
  sig.pay.phi = phi;
  sig.pay.kappa_var = psig ? "kk" : "";
  sig.pay.arg_var = "u";
  if (psig) sig.pay.t0 = t0;
  sig.pay.t1 = t1;
  sig.pay.s_term = s0;
  sig.pay.guard = rtarget.back().id;
  counter = f.p.next_occ;
  auto sprems = calc::derive_premises(sig, counter);
  f.p.next_occ = counter;
  // premise: [phi-instance, not-guard]: ex v (2<v and v<w1) / ex v (2<v)
  Sequent starget = sprems[0];
  Node exn;
  exn.rule = Rule::Ex;
  exn.concl = starget;
  Formula phi_inst = psig ? lang::subst(lang::subst(phi, "kk", Obj::constant(Ord::w1())), "u", s0)
                          : lang::subst(phi, "u", s0);
  for (const auto& o : starget)
    if (o.f == phi_inst) exn.pay.main = o.id;
  exn.pay.witness = Obj::num(3);
  counter = f.p.next_occ;
  auto eprems = calc::derive_premises(exn, counter);
  f.p.next_occ = counter;
  int leaf;
  if (psig) {
    Node andn;
    andn.rule = Rule::And;
    andn.concl = eprems[0];
    andn.pay.main = eprems[0].back().id;
    counter = f.p.next_occ;
    auto aprems = calc::derive_premises(andn, counter);
    f.p.next_occ = counter;
    auto mk_ax = [&](const Sequent& sq) {
      Node ax;
      ax.rule = Rule::Ax;
      ax.concl = sq;
      ax.pay.main = sq.back().id;
      return f.p.add_node(std::move(ax));
    };
    andn.prems = {mk_ax(aprems[0]), mk_ax(aprems[1])};
    leaf = f.p.add_node(std::move(andn));
  } else {
    Node ax;
    ax.rule = Rule::Ax;
    ax.concl = eprems[0];
    ax.pay.main = eprems[0].back().id;
    leaf = f.p.add_node(std::move(ax));
  }
  exn.prems = {leaf};
  int ex_id = f.p.add_node(std::move(exn));
  sig.prems = {ex_id};
  int sig_id = f.p.add_node(std::move(sig));
  cut.prems = {left, sig_id};
  int q1 = f.p.add_node(std::move(cut));
  trans::wrap_initial(f.p, q1, root, 10);
  return std::move(f.p);
}
}  // namespace

Proof fix_r121() { return fix_r12(true); }
Proof fix_r122() { return fix_r12(false); }

Proof fix_r2() {
  CutFixture f;
  Formula A = Formula::ex(
      "zz", Formula::ex("ww", Formula::and_(Formula::prho_atom(Obj::var("zz")),
                                            Formula::less(Obj::var("xx"), Obj::var("ww")))));
  Sequent root{{f.p.fresh_occ(), sigma2_goal(2)}};
  Node rfl;
  rfl.rule = Rule::Rfl;
  rfl.concl = root;
  rfl.pay.ind_formula = A;
  rfl.pay.ind_var = "xx";
  rfl.pay.ind_t = Obj::num(2);
  rfl.pay.eigen = "yy";
  std::uint64_t counter = f.p.next_occ;
  auto prems = calc::derive_premises(rfl, counter);
  f.p.next_occ = counter;
  int left = f.dev(prems[0]);
  int right = f.dev(prems[1]);
  rfl.prems = {left, right};
  int q1 = f.p.add_node(std::move(rfl));
  trans::wrap_initial(f.p, q1, root, 10);
  return std::move(f.p);
}

namespace {
Proof fix_ind(bool guard_true) {
  CutFixture f;
  Formula A = Formula::less(Obj::var("xx"), Obj::num(2));
  Obj s = guard_true ? Obj::num(5) : Obj::num(1);
  Obj t = Obj::num(3);
  Sequent root{{f.p.fresh_occ(), sigma2_goal(2)}};

  if (guard_true) {
    // the true guard literal 5 </ 3 vanishes at a cut below the (ind)
    Formula g = Formula::less(s, t, true);
    Node cut;
    cut.rule = Rule::Cut;
    cut.concl = root;
    cut.pay.cut_formula = g;
      std::uint64_t counter = f.p.next_occ;
    auto cprems = calc::derive_premises(cut, counter);
    f.p.next_occ = counter;
    int left = f.dev(cprems[0]);
    Node ind;
    ind.rule = Rule::Ind;
    ind.concl = cprems[1];
    ind.pay.ind_formula = A;
    ind.pay.ind_var = "xx";
    ind.pay.s_term = s;
    ind.pay.ind_t = t;
    ind.pay.guard = cprems[1].back().id;
    ind.pay.eigen = "ye";
    counter = f.p.next_occ;
    auto iprems = calc::derive_premises(ind, counter);
    f.p.next_occ = counter;
    // premise 0 carries the goal nowhere: prove it through an axiom on the
    // true literal (ye < 2 is open, so weave the development instead)
    Sequent p0t = iprems[0];
    p0t.push_back({f.p.fresh_occ(), sigma2_goal(2)});
    int p0 = f.dev(p0t);
    Node ax;
    ax.rule = Rule::Ax;
    ax.concl = iprems[1];
    ax.pay.main = iprems[1].back().id;  // not(5 < 2), true
    int p1 = f.p.add_node(std::move(ax));
    ind.prems = {p0, p1};
    int ind_id = f.p.add_node(std::move(ind));
    cut.prems = {left, ind_id};
    int q1 = f.p.add_node(std::move(cut));
    trans::wrap_initial(f.p, q1, root, 10);
    return std::move(f.p);
  }

  // the (p1) condition pins the right premise ordinal to dg(A); a (taut)
  // against a 1<2 occurrence consumed by a cut below provides exactly that
  Formula carrier = Formula::less(Obj::num(1), Obj::num(2));
  Node cut;
  cut.rule = Rule::Cut;
  cut.concl = root;
  cut.pay.cut_formula = carrier;
  std::uint64_t counter = f.p.next_occ;
  auto cprems = calc::derive_premises(cut, counter);
  f.p.next_occ = counter;
  int left = f.dev(cprems[0]);

  Node ind;
  ind.rule = Rule::Ind;
  ind.concl = cprems[1];
  ind.pay.ind_formula = A;
  ind.pay.ind_var = "xx";
  ind.pay.s_term = s;
  ind.pay.ind_t = t;
  ind.pay.eigen = "ye";
  counter = f.p.next_occ;
  auto iprems = calc::derive_premises(ind, counter);
  f.p.next_occ = counter;
  int p0 = f.dev(iprems[0]);
  int p1 = trans::taut_proof(f.p, iprems[1], iprems[1].back().id,
                             cprems[1].back().id);
  ind.prems = {p0, p1};
  int ind_id = f.p.add_node(std::move(ind));
  cut.prems = {left, ind_id};
  int q1 = f.p.add_node(std::move(cut));
  trans::wrap_initial(f.p, q1, root, 10);
  return std::move(f.p);
}
}  // namespace

Proof fix_r31() { return fix_ind(true); }
Proof fix_r32() { return fix_ind(false); }

namespace {
Proof fix_r4(bool delta0) {
  CutFixture f;
  Formula C = delta0
                  ? Formula::exb("v", Obj::num(3), Formula::less(Obj::var("v"), Obj::num(1)))
                  : Formula::ex("v", Formula::less(Obj::num(5), Obj::var("v")));
  Sequent root{{f.p.fresh_occ(), sigma2_goal(2)}};
  Node cut;
  cut.rule = Rule::Cut;
  cut.concl = root;
  cut.pay.cut_formula = C;
  std::uint64_t counter = f.p.next_occ;
  auto prems = calc::derive_premises(cut, counter);
  f.p.next_occ = counter;
  int left = f.dev(prems[0]);
  // right: introduce the existential with a witness
  Node exn;
  exn.rule = delta0 ? Rule::BEx : Rule::Ex;
  exn.concl = prems[1];
  exn.pay.main = prems[1].back().id;
  exn.pay.witness = delta0 ? Obj::num(0) : Obj::num(7);
  counter = f.p.next_occ;
  auto eprems = calc::derive_premises(exn, counter);
  f.p.next_occ = counter;
  Node ax;
  ax.rule = Rule::Ax;
  ax.concl = eprems[0];
  ax.pay.main = eprems[0].back().id;
  int leaf = f.p.add_node(std::move(ax));
  exn.prems = {leaf};
  int ex_id = f.p.add_node(std::move(exn));
  cut.prems = {left, ex_id};
  int q1 = f.p.add_node(std::move(cut));
  trans::wrap_initial(f.p, q1, root, 10);
  return std::move(f.p);
}
}  // namespace

Proof fix_r41() { return fix_r4(true); }
Proof fix_r42() { return fix_r4(false); }

}  // namespace opr::fix
