#include "trans/taut.hpp"

#include "lang/ast.hpp"

namespace opr::trans {

using calc::Formula;
using calc::Node;
using calc::Obj;
using calc::Occ;
using calc::Rule;
using calc::find_occ;

namespace {

std::string fresh_for(const Sequent& seq, const std::string& hint) {
  std::set<std::string> fv;
  for (const auto& o : seq) o.f.free_vars(fv);
  return lang::fresh_var(fv, hint);
}

}  // namespace

int taut_proof(Proof& p, const Sequent& seq, std::uint64_t neg_id, std::uint64_t pos_id) {
  using K = Formula::K;
  auto ni = find_occ(seq, neg_id);
  auto pi = find_occ(seq, pos_id);
  if (!ni || !pi) throw std::invalid_argument("taut_proof: pair not in sequent");
  const Formula A = seq[*pi].f;
  if (!(lang::negate(A) == seq[*ni].f))
    throw std::invalid_argument("taut_proof: occurrences are not dual");

  if (A.is_atom() || lang::is_delta0(A)) {
    Node n;
    n.rule = Rule::Taut;
    n.concl = seq;
    n.pay.main = neg_id;
    n.pay.main2 = pos_id;
    return p.add_node(std::move(n));
  }

  auto build_unary = [&](Node n) {
    std::uint64_t counter = p.next_occ;
    auto prem = calc::derive_premises(n, counter);
    p.next_occ = counter;
    return std::pair<Node, Sequent>(std::move(n), prem.at(0));
  };

  switch (A.kind()) {
    case K::Or:
    case K::And: {
      // peel the connective on both sides; the conjunction side carries the
      // two premises
      bool a_is_or = A.kind() == K::Or;
      std::uint64_t and_id = a_is_or ? neg_id : pos_id;  // the And-formula occurrence
      std::uint64_t or_id = a_is_or ? pos_id : neg_id;
      Node top;
      top.rule = Rule::And;
      top.concl = seq;
      top.pay.main = and_id;
      std::uint64_t counter = p.next_occ;
      auto prems = calc::derive_premises(top, counter);
      p.next_occ = counter;
      std::vector<int> kids;
      for (int i = 0; i < 2; ++i) {
        // under the And-premise, absorb the matching Or-disjunct
        Node orn;
        orn.rule = Rule::Or;
        orn.concl = prems[i];
        orn.pay.main = or_id;
        orn.pay.disj = i;
        auto [orn2, oprem] = build_unary(std::move(orn));
        std::uint64_t minor_and = prems[i].back().id;
        std::uint64_t minor_or = oprem.back().id;
        std::uint64_t sub_neg = a_is_or ? minor_and : minor_or;
        std::uint64_t sub_pos = a_is_or ? minor_or : minor_and;
        int leaf = taut_proof(p, oprem, sub_neg, sub_pos);
        orn2.prems = {leaf};
        kids.push_back(p.add_node(std::move(orn2)));
      }
      top.prems = kids;
      return p.add_node(std::move(top));
    }
    case K::Ex:
    case K::All: {
      bool a_is_ex = A.kind() == K::Ex;
      std::uint64_t all_id = a_is_ex ? neg_id : pos_id;
      std::uint64_t ex_id = a_is_ex ? pos_id : neg_id;
      std::string z = fresh_for(seq, "z");
      Node alln;
      alln.rule = Rule::All;
      alln.concl = seq;
      alln.pay.main = all_id;
      alln.pay.eigen = z;
      auto [alln2, aprem] = build_unary(std::move(alln));
      Node exn;
      exn.rule = Rule::Ex;
      exn.concl = aprem;
      exn.pay.main = ex_id;
      exn.pay.witness = Obj::var(z);
      auto [exn2, eprem] = build_unary(std::move(exn));
      std::uint64_t minor_all = aprem.back().id;
      std::uint64_t minor_ex = eprem.back().id;
      int leaf = taut_proof(p, eprem, a_is_ex ? minor_all : minor_ex,
                            a_is_ex ? minor_ex : minor_all);
      exn2.prems = {leaf};
      alln2.prems = {p.add_node(std::move(exn2))};
      return p.add_node(std::move(alln2));
    }
    case K::ExB:
    case K::AllB: {
      bool a_is_ex = A.kind() == K::ExB;
      std::uint64_t ball_id = a_is_ex ? neg_id : pos_id;
      std::uint64_t bex_id = a_is_ex ? pos_id : neg_id;
      std::string z = fresh_for(seq, "z");
      Node balln;
      balln.rule = Rule::BAll;
      balln.concl = seq;
      balln.pay.main = ball_id;
      balln.pay.eigen = z;
      auto [balln2, bprem] = build_unary(std::move(balln));
      // bprem = seq ++ [not (z<t), body-instance]
      std::uint64_t guard = bprem[bprem.size() - 2].id;
      std::uint64_t minor_ball = bprem.back().id;
      Node bexn;
      bexn.rule = Rule::BEx;
      bexn.concl = bprem;
      bexn.pay.main = bex_id;
      bexn.pay.witness = Obj::var(z);
      bexn.pay.guard = guard;
      auto [bexn2, eprem] = build_unary(std::move(bexn));
      std::uint64_t minor_bex = eprem.back().id;
      int leaf = taut_proof(p, eprem, a_is_ex ? minor_ball : minor_bex,
                            a_is_ex ? minor_bex : minor_ball);
      bexn2.prems = {leaf};
      balln2.prems = {p.add_node(std::move(bexn2))};
      return p.add_node(std::move(balln2));
    }
    default: throw std::logic_error("taut_proof: unreachable");
  }
}

}  // namespace opr::trans
