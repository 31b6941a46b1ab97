#include "trans/surgery.hpp"

#include <algorithm>

#include "lang/ast.hpp"

namespace opr::trans {

using calc::Formula;
using calc::Node;
using calc::Obj;
using calc::Occ;
using calc::Rule;
using calc::Sequent;
using calc::find_occ;

int clone_subtree(Proof& p, int n) {
  Node copy = p.node(n);
  std::vector<int> kids;
  for (int c : copy.prems) kids.push_back(clone_subtree(p, c));
  copy.prems = kids;
  return p.add_node(std::move(copy));
}

void subst_subtree(Proof& p, int n, const std::string& x, const Obj& t) {
  for (int id : p.subtree(n)) {
    Node& nd = p.node(id);
    if (nd.pay.eigen == x) throw std::logic_error("substituting an active eigenvariable");
    for (auto& o : nd.concl) o.f = lang::subst(o.f, x, t);
    auto sub_obj = [&](std::optional<Obj>& ot) {
      if (ot) ot = ot->subst(x, t);
    };
    sub_obj(nd.pay.witness);
    sub_obj(nd.pay.t0);
    sub_obj(nd.pay.t1);
    sub_obj(nd.pay.s_term);
    sub_obj(nd.pay.ind_t);
    auto sub_f = [&](std::optional<Formula>& of) {
      if (of) of = lang::subst(*of, x, t);
    };
    sub_f(nd.pay.cut_formula);
    sub_f(nd.pay.phi);
    sub_f(nd.pay.ind_formula);
  }
}

std::vector<std::uint64_t> weaken_subtree(Proof& p, int n,
                                          const std::vector<Formula>& fs) {
  std::vector<Occ> add;
  for (const auto& f : fs) add.push_back({p.fresh_occ(), f});
  weaken_subtree_with(p, n, add);
  std::vector<std::uint64_t> ids;
  for (const auto& o : add) ids.push_back(o.id);
  return ids;
}

void weaken_subtree_with(Proof& p, int n, const std::vector<Occ>& occs) {
  for (int id : p.subtree(n)) {
    Node& nd = p.node(id);
    nd.concl.insert(nd.concl.begin(), occs.begin(), occs.end());
  }
}

void replace_child(Proof& p, int parent, int old_child, int new_child) {
  if (parent < 0) {
    p.root = new_child;
    return;
  }
  for (int& c : p.node(parent).prems)
    if (c == old_child) c = new_child;
}

void garbage_collect(Proof& p) {
  auto keep = p.subtree(p.root);
  std::map<int, Node> alive;
  for (int id : keep) alive.emplace(id, std::move(p.node(id)));
  p.nodes = std::move(alive);
}

namespace {

void erase_occ(Sequent& s, std::uint64_t id) {
  s.erase(std::remove_if(s.begin(), s.end(), [id](const Occ& o) { return o.id == id; }),
          s.end());
}

void strip_id(std::vector<std::uint64_t>& v, std::uint64_t id) {
  v.erase(std::remove(v.begin(), v.end(), id), v.end());
}

}  // namespace

void drop_false_literal(Proof& p, int n, std::uint64_t occ) {
  auto fam = calc::ancestors(p, n, occ);
  std::vector<int> to_splice;
  for (auto& [id, o] : fam) {
    Node& nd = p.node(id);
    auto pos = find_occ(nd.concl, o);
    if (!pos) continue;
    // the (h)-suffix shrinks when an added occurrence dies
    if (nd.rule == Rule::H && *pos >= nd.concl.size() - nd.pay.h_added) --nd.pay.h_added;
    erase_occ(nd.concl, o);
    strip_id(nd.pay.left_ids, o);
    strip_id(nd.pay.gamma_ids, o);
    if (nd.pay.guard == o) nd.pay.guard.reset();
    if (nd.pay.guard2 == o) nd.pay.guard2.reset();
    if (nd.pay.main2 == o) {  // taut loses its positive member: not expected
      throw std::logic_error("drop_false_literal: positive taut member is not false");
    }
    if (nd.pay.main == o) {
      switch (nd.rule) {
        case Rule::Taut:
          // the false member goes; the true partner carries an (ax)
          nd.rule = Rule::Ax;
          nd.pay.main = nd.pay.main2;
          nd.pay.main2.reset();
          break;
        case Rule::PSig:
        case Rule::PrSig:
          to_splice.push_back(id);  // rule became a no-op copy
          break;
        case Rule::Ax: throw std::logic_error("drop_false_literal: (ax) main is not false");
        default: throw std::logic_error("drop_false_literal: literal main of a logical rule");
      }
    }
  }
  auto parent = p.parents();
  for (int id : to_splice) {
    Node& nd = p.node(id);
    nd.pay = calc::Payload{};
    int child = nd.prems.at(0);
    replace_child(p, parent.at(id), id, child);
    if (p.root == id) p.root = child;
  }
}

namespace {

// occurrences of the family inside the subtree rooted at n
std::vector<std::pair<int, std::uint64_t>> family_in(const Proof& p, int n,
                                                     std::uint64_t occ) {
  return calc::ancestors(p, n, occ);
}

void rename_occ(Node& nd, std::uint64_t from, std::uint64_t to) {
  for (auto& o : nd.concl)
    if (o.id == from) o.id = to;
  auto ren = [&](std::optional<std::uint64_t>& x) {
    if (x && *x == from) x = to;
  };
  ren(nd.pay.main);
  ren(nd.pay.main2);
  ren(nd.pay.guard);
  ren(nd.pay.guard2);
  for (auto& i : nd.pay.left_ids)
    if (i == from) i = to;
  for (auto& i : nd.pay.gamma_ids)
    if (i == from) i = to;
}

}  // namespace

void invert_all(Proof& p, int n, std::uint64_t occ, const Obj& s, lang::EvalCtx& ctx) {
  auto fam = family_in(p, n, occ);
  // introducing rules first (they sit above the start node)
  std::vector<std::pair<int, std::uint64_t>> mains;
  for (auto& [id, o] : fam) {
    const Node& nd = p.node(id);
    if ((nd.rule == Rule::All || nd.rule == Rule::BAll) && nd.pay.main == o)
      mains.push_back({id, o});
  }
  auto parent = p.parents();
  for (auto& [id, o] : mains) {
    Node& nd = p.node(id);
    int child = nd.prems.at(0);
    bool bounded = nd.rule == Rule::BAll;
    const Node& ch = p.node(child);
    std::uint64_t minor = ch.concl.back().id;
    std::uint64_t guard = bounded ? ch.concl[ch.concl.size() - 2].id : 0;
    subst_subtree(p, child, nd.pay.eigen, s);
    if (bounded) drop_false_literal(p, child, guard);
    // merge: the minor chain becomes the family occurrence; the side copies
    // of the universal above this rule are obsolete
    for (int m : p.subtree(child)) {
      Node& mn = p.node(m);
      erase_occ(mn.concl, o);
      strip_id(mn.pay.left_ids, o);
      strip_id(mn.pay.gamma_ids, o);
      rename_occ(mn, minor, o);
    }
    replace_child(p, parent.at(id), id, child);
    if (p.root == id) p.root = child;
    parent = p.parents();
  }
  // replace the remaining (side-chain) occurrences by the instance
  fam = family_in(p, n, occ);
  for (auto& [id, o] : fam) {
    Node& nd = p.node(id);
    auto pos = find_occ(nd.concl, o);
    if (!pos) continue;
    const Formula& f = nd.concl[*pos].f;
    if (f.kind() == Formula::K::All || f.kind() == Formula::K::AllB)
      nd.concl[*pos].f = lang::subst(f.body(), f.var(), s);
  }
  (void)ctx;
}

void invert_and(Proof& p, int n, std::uint64_t occ, int i) {
  auto fam = family_in(p, n, occ);
  std::vector<std::pair<int, std::uint64_t>> mains;
  for (auto& [id, o] : fam) {
    const Node& nd = p.node(id);
    if (nd.rule == Rule::And && nd.pay.main == o) mains.push_back({id, o});
  }
  auto parent = p.parents();
  for (auto& [id, o] : mains) {
    Node& nd = p.node(id);
    int keep = nd.prems.at(i);
    const Node& ch = p.node(keep);
    std::uint64_t minor = ch.concl.back().id;
    for (int m : p.subtree(keep)) {
      Node& mn = p.node(m);
      erase_occ(mn.concl, o);
      strip_id(mn.pay.left_ids, o);
      strip_id(mn.pay.gamma_ids, o);
      rename_occ(mn, minor, o);
    }
    replace_child(p, parent.at(id), id, keep);
    if (p.root == id) p.root = keep;
    parent = p.parents();
  }
  fam = family_in(p, n, occ);
  for (auto& [id, o] : fam) {
    Node& nd = p.node(id);
    auto pos = find_occ(nd.concl, o);
    if (!pos) continue;
    const Formula& f = nd.concl[*pos].f;
    if (f.kind() == Formula::K::And) nd.concl[*pos].f = f.child(i);
  }
}

std::pair<std::uint64_t, std::uint64_t> invert_or_split(Proof& p, int n,
                                                        std::uint64_t occ) {
  std::uint64_t f0 = p.fresh_occ();
  std::uint64_t f1 = p.fresh_occ();
  auto fam = family_in(p, n, occ);
  std::vector<std::pair<int, int>> mains;  // node, disj
  for (auto& [id, o] : fam) {
    const Node& nd = p.node(id);
    if (nd.rule == Rule::Or && nd.pay.main == o) mains.push_back({id, nd.pay.disj});
  }
  // split the side copies first
  for (auto& [id, o] : fam) {
    Node& nd = p.node(id);
    auto pos = find_occ(nd.concl, o);
    if (!pos) continue;
    Formula f = nd.concl[*pos].f;
    if (f.kind() != Formula::K::Or) continue;
    nd.concl[*pos] = {f0, f.child(0)};
    nd.concl.insert(nd.concl.begin() + *pos + 1, {f1, f.child(1)});
    if (nd.pay.main == o) nd.pay.main.reset();
    for (auto& i : nd.pay.left_ids)
      if (i == o) i = f0;  // keep the split on the same cut side
    bool in_left = std::find(nd.pay.left_ids.begin(), nd.pay.left_ids.end(), f0) !=
                   nd.pay.left_ids.end();
    if (in_left) nd.pay.left_ids.push_back(f1);
    for (auto& i : nd.pay.gamma_ids)
      if (i == o) i = f0;
  }
  // then merge the introducing rules' minors into the split members
  auto parent = p.parents();
  for (auto& [id, disj] : mains) {
    Node& nd = p.node(id);
    int child = nd.prems.at(0);
    const Node& ch = p.node(child);
    std::uint64_t minor = ch.concl.back().id;
    std::uint64_t target = disj == 0 ? f0 : f1;
    for (int m : p.subtree(child)) {
      Node& mn = p.node(m);
      erase_occ(mn.concl, target);
      rename_occ(mn, minor, target);
    }
    replace_child(p, parent.at(id), id, child);
    if (p.root == id) p.root = child;
    parent = p.parents();
  }
  return {f0, f1};
}

}  // namespace opr::trans
