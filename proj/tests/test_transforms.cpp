#include <random>

#include "doctest.h"
#include "calc/check.hpp"
#include "io/formio.hpp"
#include "io/ordio.hpp"
#include "ord/arith.hpp"
#include "ord/order.hpp"
#include "support/fixtures.hpp"
#include "trans/embed.hpp"
#include "trans/surgery.hpp"
#include "trans/taut.hpp"

using namespace opr;
using calc::Node;
using calc::Proof;
using calc::Rule;
using calc::Sequent;
using lang::Formula;
using lang::Obj;
using ord::Ord;

namespace {

// all formula shapes with dg <= budget over Delta0 and P-flavoured literals
std::vector<Formula> shapes_up_to(unsigned budget) {
  std::vector<Formula> out;
  Formula lit_d0 = Formula::less(Obj::num(0), Obj::num(1));
  Formula lit_p = Formula::prho_atom(Obj::var("q"));
  out.push_back(lit_d0);
  out.push_back(lit_p);
  std::vector<Formula> frontier = out;
  for (int round = 0; round < 2; ++round) {
    std::vector<Formula> next;
    for (const auto& a : frontier)
      for (const auto& b : frontier) {
        if (lang::dg(Formula::or_(a, b)) <= budget) next.push_back(Formula::or_(a, b));
        if (lang::dg(Formula::and_(a, b)) <= budget) next.push_back(Formula::and_(a, b));
      }
    for (const auto& a : frontier) {
      for (auto mk : {0, 1, 2, 3}) {
        Formula f = mk == 0   ? Formula::ex("v", a)
                    : mk == 1 ? Formula::all("v", a)
                    : mk == 2 ? Formula::exb("v", Obj::num(3), a)
                              : Formula::allb("v", Obj::num(3), a);
        if (lang::dg(f) <= budget) next.push_back(f);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = next;
    if (frontier.size() > 60) frontier.resize(60);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("transforms");

TEST_CASE("taut_proof validates and lands exactly on dg") {
  auto shapes = shapes_up_to(12);
  CAPTURE(shapes.size());
  int checked = 0;
  for (const auto& A : shapes) {
    Proof p;
    Sequent seq;
    seq.push_back({p.fresh_occ(), Formula::less(Obj::num(0), Obj::num(9))});  // ambient
    seq.push_back({p.fresh_occ(), lang::negate(A)});
    seq.push_back({p.fresh_occ(), A});
    p.root = trans::taut_proof(p, seq, seq[1].id, seq[2].id);
    auto ann = calc::assign(p);
    REQUIRE(ann.o_root == Ord::nat(lang::dg(A)));
    auto cfg = fix::default_cfg(p);
    auto diags = calc::rule_check(p, cfg);
    if (!diags.empty()) {
      CAPTURE(io::print_formula(A));
      CAPTURE(diags[0].clause);
      CAPTURE(diags[0].message);
      REQUIRE(diags.empty());
    }
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("embed reproduces the depicted piece ordinals") {
  using trans::LeafKind;
  using trans::LeafSpec;
  using trans::Skel;
  Formula phi3 = io::parse_formula("(ex v (and (< u v) (< v kk)))");
  Formula phi1 = io::parse_formula("(ex v (< u v))");
  Formula indA = io::parse_formula("(Pr0 xx)");
  Formula rflA = io::parse_formula("(ex zz (ex ww (and (Pr0 zz) (< xx ww))))");

  auto leaf = [](LeafKind k, std::optional<Formula> f, const char* kv, const char* av,
                 const char* iv) {
    Skel s;
    s.k = Skel::K::Leaf;
    s.leaf.kind = k;
    s.leaf.formula = std::move(f);
    s.leaf.kappa_var = kv;
    s.leaf.arg_var = av;
    s.leaf.ind_var = iv;
    return s;
  };

  // chain of cuts over all six axiom pieces, development innermost
  std::vector<Skel> pieces{
      leaf(LeafKind::PSigma1, phi3, "kk", "u", ""),
      leaf(LeafKind::Pexists, std::nullopt, "", "", ""),
      leaf(LeafKind::Prho0Sigma1, phi1, "", "u", ""),
      leaf(LeafKind::Prho0exists, std::nullopt, "", "", ""),
      leaf(LeafKind::Reflection, rflA, "", "", "xx"),
      leaf(LeafKind::TransInduction, indA, "", "", "xx"),
  };
  Skel dev = fix::dev_skel(3);
  Skel cur = dev;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    Skel cut;
    cut.k = Skel::K::Cut;
    cut.kids = {cur, *it};
    cur = cut;
  }
  auto res = trans::embed(cur, fix::sigma2_goal(3));
  auto cfg = fix::default_cfg(res.proof);
  auto diags = calc::validate(res.proof, cfg);
  for (const auto& d : diags) {
    CAPTURE(d.node);
    CAPTURE(d.clause);
    CAPTURE(d.message);
    CHECK(false);
  }
  REQUIRE(res.piece_ords.size() == 7);  // dev + six pieces
  // order: innermost dev first? pieces are built left-to-right along cuts:
  // dev is the left spine end, each piece the right child
  unsigned dprime = lang::dg(indA);
  unsigned dd = lang::dg(Formula::allb("xx", Obj::var("y"), indA));
  unsigned d0 = dd + dprime + 1;
  unsigned d1 = d0 + dprime + 2;
  Ord ind_expect = ord::nsum(ord::nprod(Ord::nat(d1), Ord::r0()), Ord::nat(d0 + 3));
  // collect the multiset of piece ordinals
  std::vector<Ord> want{Ord::nat(1),  // the development's tautology core
                        Ord::nat(12), Ord::nat(2), Ord::nat(11), Ord::nat(2),
                        Ord::nat(24), ind_expect};
  REQUIRE(want.size() == res.piece_ords.size());
  for (const auto& w : want) {
    bool found = false;
    for (const auto& got : res.piece_ords) found = found || got == w;
    CAPTURE(io::print_ord(w));
    CHECK(found);
  }
}

TEST_CASE("drop_false_literal preserves the assignment node for node") {
  std::mt19937_64 rng(2024);
  int done = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t bound = 2 + rng() % 3;
    // development with an injected false literal floating from the leaf down
    Proof p;
    Formula junk = Formula::less(Obj::num(1 + rng() % 5), Obj::num(rng() % 2), false);
    Sequent root{{p.fresh_occ(), fix::sigma2_goal(bound)}, {p.fresh_occ(), junk}};
    int q1 = trans::build_skeleton(p, fix::dev_skel(bound), root);
    trans::wrap_initial(p, q1, root, 10);
    auto before = calc::assign(p);
    std::map<int, Ord> before_o = before.o;
    trans::drop_false_literal(p, p.root, root[1].id);
    trans::garbage_collect(p);
    auto after = calc::assign(p);
    for (const auto& [id, o] : after.o) {
      REQUIRE(before_o.count(id));
      REQUIRE(before_o.at(id) == o);
    }
    auto cfg = fix::default_cfg(p);
    REQUIRE(calc::validate(p, cfg).empty());
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("weaken then drop is the identity on annotations") {
  auto res = fix::embed_simple(2);
  Proof& p = res.proof;
  auto before = calc::assign(p);
  // weaken the whole proof... additions below height w must stay closed
  auto ids = trans::weaken_subtree(p, p.root, {io::parse_formula("(< 3 1)")});
  auto mid = calc::assign(p);
  CHECK(mid.o_root == before.o_root);
  auto cfg = fix::default_cfg(p);
  CHECK(calc::validate(p, cfg).empty());
  trans::drop_false_literal(p, p.root, ids[0]);
  trans::garbage_collect(p);
  auto after = calc::assign(p);
  CHECK(after.o_root == before.o_root);
}

TEST_CASE("invert_all instantiates a junk universal") {
  Proof p;
  Formula junk = io::parse_formula("(all v (or (not (< v 2)) (< v 1)))");
  Sequent root{{p.fresh_occ(), fix::sigma2_goal(2)}, {p.fresh_occ(), junk}};
  int q1 = trans::build_skeleton(p, fix::dev_skel(2), root);
  trans::wrap_initial(p, q1, root, 10);
  auto before = calc::assign(p);
  lang::EvalCtx ctx;
  trans::invert_all(p, p.root, root[1].id, Obj::num(1), ctx);
  trans::garbage_collect(p);
  const Node& r = p.node(p.root);
  auto i = calc::find_occ(r.concl, root[1].id);
  REQUIRE(i.has_value());
  CHECK(r.concl[*i].f == io::parse_formula("(or (not (< 1 2)) (< 1 1))"));
  auto cfg = fix::default_cfg(p);
  CHECK(calc::validate(p, cfg).empty());
  auto after = calc::assign(p);
  CHECK(ord::compare(after.o_root, before.o_root) != ord::Cmp::GT);
  // now split and drop both false pieces
  auto [f0, f1] = trans::invert_or_split(p, p.root, root[1].id);
  trans::drop_false_literal(p, p.root, f0);
  trans::drop_false_literal(p, p.root, f1);
  trans::garbage_collect(p);
  CHECK(calc::validate(p, cfg).empty());
  CHECK(calc::assign(p).o_root == before.o_root);
}

TEST_CASE("dropping a false collapse guard leaves the absent form") {
  // a (PSigma1) whose not-P guard is false (the collapse pair is real) can
  // lose the guard; the absent form then requires exactly that truth
  Proof p;
  Formula phi = io::parse_formula("(ex v (< u v))");
  Obj t0 = io::parse_obj("(D0 2)");
  Obj t1 = io::parse_obj("(F 2)");
  Obj s0 = io::parse_obj("0");
  Formula inst = lang::subst(lang::subst(lang::relativize(phi, t1), "kk", t0), "u", s0);
  Formula guard = lang::negate(Formula::p_atom(t0, t1));  // false: P(D0(2),F(2)) holds
  Sequent seq{{p.fresh_occ(), fix::sigma2_goal(2)},
              {p.fresh_occ(), inst},
              {p.fresh_occ(), guard}};
  Node sig;
  sig.rule = Rule::PSig;
  sig.concl = seq;
  sig.pay.main = seq[1].id;
  sig.pay.phi = phi;
  sig.pay.kappa_var = "kk";
  sig.pay.arg_var = "u";
  sig.pay.t0 = t0;
  sig.pay.t1 = t1;
  sig.pay.s_term = s0;
  sig.pay.guard = seq[2].id;
  std::uint64_t counter = p.next_occ;
  auto prems = calc::derive_premises(sig, counter);
  p.next_occ = counter;
  int above = trans::build_skeleton(p, fix::dev_skel(2), prems[0]);
  sig.prems = {above};
  p.root = p.add_node(std::move(sig));
  {
    auto cfg = fix::default_cfg(p);
    CHECK(calc::rule_check(p, cfg).empty());
  }
  trans::drop_false_literal(p, p.root, seq[2].id);
  trans::garbage_collect(p);
  CHECK_FALSE(p.node(p.root).pay.guard.has_value());
  auto cfg = fix::default_cfg(p);
  CHECK(calc::rule_check(p, cfg).empty());  // the absent form carries the truth obligation
}

TEST_CASE("assignment grows strictly through non-copy rules") {
  auto res = fix::embed_simple(3);
  const Proof& p = res.proof;
  auto ann = calc::assign(p);
  for (const auto& [id, n] : p.nodes) {
    if (n.rule == Rule::PSig || n.rule == Rule::PrSig || n.rule == Rule::D0 ||
        n.rule == Rule::D1)
      continue;
    for (int c : n.prems) {
      // w^x fixes collapse values; otherwise strictly above the premise
      if (n.rule == Rule::H && ann.o.at(c).kind() == Ord::K::D) {
        CHECK(ann.o.at(id) == ann.o.at(c));
        continue;
      }
      CHECK(ord::compare(ann.o.at(c), ann.o.at(id)) == ord::Cmp::LT);
    }
  }
}

TEST_CASE("invert_all removes a real introduction") {
  // taut proof of (not all v B, all v B): inverting the positive side kills
  // the (all) rule and instantiates the family
  Proof p;
  Formula B = io::parse_formula("(or (Pr0 v) (not (Pr0 v)))");
  Formula A = Formula::all("v", B);
  Sequent seq{{p.fresh_occ(), lang::negate(A)}, {p.fresh_occ(), A}};
  p.root = trans::taut_proof(p, seq, seq[0].id, seq[1].id);
  auto before = calc::assign(p);
  lang::EvalCtx ctx;
  trans::invert_all(p, p.root, seq[1].id, Obj::num(4), ctx);
  trans::garbage_collect(p);
  const Node& r = p.node(p.root);
  auto i = calc::find_occ(r.concl, seq[1].id);
  REQUIRE(i.has_value());
  CHECK(r.concl[*i].f == lang::subst(B, "v", Obj::num(4)));
  auto after = calc::assign(p);
  CHECK(ord::compare(after.o_root, before.o_root) == ord::Cmp::LT);
}

TEST_SUITE_END();
