#include "io/proofio.hpp"

#include <algorithm>
#include <sstream>

#include "io/formio.hpp"
#include "io/ordio.hpp"

namespace opr::io {

using calc::Node;
using calc::Occ;
using calc::Proof;
using calc::Rule;
using calc::Sequent;
using calc::find_occ;

namespace {

Rule rule_of(const std::string& s) {
  for (int r = 0; r <= static_cast<int>(Rule::D1); ++r)
    if (s == calc::rule_name(static_cast<Rule>(r))) return static_cast<Rule>(r);
  throw ParseError("unknown rule tag '" + s + "'");
}

std::optional<std::size_t> occ_index(const Sequent& s, std::uint64_t id) {
  return find_occ(s, id);
}

void put_idx(std::vector<Sexpr>& xs, const char* key, const Sequent& seq,
             std::optional<std::uint64_t> id) {
  if (!id) return;
  auto i = occ_index(seq, *id);
  if (!i) throw std::logic_error("payload occurrence missing while printing");
  xs.push_back(Sexpr::sym(key));
  xs.push_back(Sexpr::sym(std::to_string(*i)));
}

}  // namespace

std::string print_proof(const Proof& p) {
  std::ostringstream out;
  out << "(proof :root " << p.root << ")\n";
  std::vector<int> ids;
  for (const auto& [id, n] : p.nodes) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  for (int id : ids) {
    const Node& n = p.node(id);
    std::vector<Sexpr> xs{Sexpr::sym("node"), Sexpr::sym(std::to_string(n.id)),
                          Sexpr::sym(calc::rule_name(n.rule))};
    std::vector<Sexpr> seq{Sexpr::sym("seq")};
    for (const auto& o : n.concl) seq.push_back(formula_to_sexpr(o.f));
    xs.push_back(Sexpr::sym(":concl"));
    xs.push_back(Sexpr::list(seq));
    if (!n.prems.empty()) {
      std::vector<Sexpr> pr;
      for (int c : n.prems) pr.push_back(Sexpr::sym(std::to_string(c)));
      xs.push_back(Sexpr::sym(":prem"));
      xs.push_back(Sexpr::list(pr));
    }
    const auto& pay = n.pay;
    put_idx(xs, ":main", n.concl, pay.main);
    put_idx(xs, ":main2", n.concl, pay.main2);
    put_idx(xs, ":guard", n.concl, pay.guard);
    put_idx(xs, ":guard2", n.concl, pay.guard2);
    if (n.rule == Rule::Or) {
      xs.push_back(Sexpr::sym(":disj"));
      xs.push_back(Sexpr::sym(std::to_string(pay.disj)));
    }
    if (pay.witness) { xs.push_back(Sexpr::sym(":witness")); xs.push_back(obj_to_sexpr(*pay.witness)); }
    if (!pay.eigen.empty()) { xs.push_back(Sexpr::sym(":eigen")); xs.push_back(Sexpr::sym(pay.eigen)); }
    if (pay.cut_formula) { xs.push_back(Sexpr::sym(":cutformula")); xs.push_back(formula_to_sexpr(*pay.cut_formula)); }
    if (!pay.left_ids.empty()) {
      std::vector<Sexpr> li;
      for (auto lid : pay.left_ids) {
        auto i = occ_index(n.concl, lid);
        if (!i) throw std::logic_error("cut left id missing while printing");
        li.push_back(Sexpr::sym(std::to_string(*i)));
      }
      xs.push_back(Sexpr::sym(":left"));
      xs.push_back(Sexpr::list(li));
    }
    if (pay.phi) { xs.push_back(Sexpr::sym(":phi")); xs.push_back(formula_to_sexpr(*pay.phi)); }
    if (!pay.kappa_var.empty()) { xs.push_back(Sexpr::sym(":kappa")); xs.push_back(Sexpr::sym(pay.kappa_var)); }
    if (!pay.arg_var.empty()) { xs.push_back(Sexpr::sym(":argv")); xs.push_back(Sexpr::sym(pay.arg_var)); }
    if (pay.t0) { xs.push_back(Sexpr::sym(":t0")); xs.push_back(obj_to_sexpr(*pay.t0)); }
    if (pay.t1) { xs.push_back(Sexpr::sym(":t1")); xs.push_back(obj_to_sexpr(*pay.t1)); }
    if (pay.s_term) { xs.push_back(Sexpr::sym(":s")); xs.push_back(obj_to_sexpr(*pay.s_term)); }
    if (pay.ind_t) { xs.push_back(Sexpr::sym(":t")); xs.push_back(obj_to_sexpr(*pay.ind_t)); }
    if (pay.ind_formula) { xs.push_back(Sexpr::sym(":indform")); xs.push_back(formula_to_sexpr(*pay.ind_formula)); }
    if (!pay.ind_var.empty()) { xs.push_back(Sexpr::sym(":indvar")); xs.push_back(Sexpr::sym(pay.ind_var)); }
    if (!pay.gamma_ids.empty()) {
      std::vector<Sexpr> gi;
      for (auto gid : pay.gamma_ids) {
        auto i = occ_index(n.concl, gid);
        if (!i) throw std::logic_error("gamma id missing while printing");
        gi.push_back(Sexpr::sym(std::to_string(*i)));
      }
      xs.push_back(Sexpr::sym(":gamma"));
      xs.push_back(Sexpr::list(gi));
    }
    if (pay.relativizer) { xs.push_back(Sexpr::sym(":relativizer")); xs.push_back(ord_to_sexpr(*pay.relativizer)); }
    if (pay.stock) { xs.push_back(Sexpr::sym(":stock")); xs.push_back(ord_to_sexpr(*pay.stock)); }
    if (n.rule == Rule::H) {
      xs.push_back(Sexpr::sym(":added"));
      xs.push_back(Sexpr::sym(std::to_string(pay.h_added)));
    }
    out << Sexpr::list(xs).print() << "\n";
  }
  return out.str();
}

namespace {

struct RawNode {
  int id;
  Rule rule;
  std::vector<lang::Formula> concl;
  std::vector<int> prems;
  std::map<std::string, Sexpr> keys;
};

std::size_t idx_of(const Sexpr& e) { return std::stoul(e.text); }

}  // namespace

Proof parse_proof(const std::string& text) {
  auto exprs = parse_all(text);
  if (exprs.empty() || exprs[0].head() != "proof")
    throw ParseError("missing (proof :root <id>) header");
  int root = -1;
  for (std::size_t i = 1; i + 1 < exprs[0].len(); ++i)
    if (exprs[0].at(i).is_sym(":root")) root = std::stoi(exprs[0].at(i + 1).text);
  if (root < 0) throw ParseError("header lacks :root");

  std::map<int, RawNode> raw;
  for (std::size_t k = 1; k < exprs.size(); ++k) {
    const Sexpr& e = exprs[k];
    if (e.head() != "node") throw ParseError("expected (node ...)");
    RawNode r;
    r.id = std::stoi(e.at(1).text);
    r.rule = rule_of(e.at(2).text);
    for (std::size_t i = 3; i < e.len(); ++i) {
      if (!e.at(i).atom || e.at(i).text.empty() || e.at(i).text[0] != ':')
        throw ParseError("expected a :key in node " + std::to_string(r.id));
      const std::string key = e.at(i).text;
      if (i + 1 >= e.len()) throw ParseError("missing value for " + key);
      const Sexpr& v = e.at(++i);
      if (key == ":concl") {
        for (std::size_t j = 1; j < v.len(); ++j) r.concl.push_back(formula_of_sexpr(v.at(j)));
      } else if (key == ":prem") {
        for (std::size_t j = 0; j < v.len(); ++j) r.prems.push_back(std::stoi(v.at(j).text));
      } else {
        r.keys.emplace(key, v);
      }
    }
    raw.emplace(r.id, std::move(r));
  }

  Proof p;
  p.root = root;
  // assign occurrence ids root-down: premise shapes dictate which conclusion
  // occurrences flow upward
  std::function<void(int, const Sequent&, std::optional<ord::Ord>,
                     std::vector<std::uint64_t>)>
      build = [&](int id, const Sequent& forced, std::optional<ord::Ord> rel,
                  std::vector<std::uint64_t> gamma) {
    auto it = raw.find(id);
    if (it == raw.end()) throw ParseError("node " + std::to_string(id) + " missing");
    RawNode& r = it->second;
    Node n;
    n.rule = r.rule;
    n.prems = r.prems;
    if (id == p.root) {
      for (const auto& f : r.concl) n.concl.push_back({p.fresh_occ(), f});
    } else {
      // assign ids by matching stored formulas to the expected premise
      // shape, preferring positional alignment; leftovers are weakening
      // extras and receive fresh ids
      std::vector<bool> bound(r.concl.size(), false);
      std::vector<std::uint64_t> ids(r.concl.size(), 0);
      std::vector<bool> shape_used(forced.size(), false);
      auto fits = [&](const Occ& want, const lang::Formula& stored) {
        if (want.f == stored) return true;
        bool in_gamma =
            std::find(gamma.begin(), gamma.end(), want.id) != gamma.end();
        if (in_gamma && rel)
          return lang::relativize(stored, lang::Obj::constant(*rel)) == want.f;
        return false;
      };
      for (std::size_t i = 0; i < forced.size() && i < r.concl.size(); ++i)
        if (fits(forced[i], r.concl[i]) && !bound[i]) {
          bound[i] = true;
          shape_used[i] = true;
          ids[i] = forced[i].id;
        }
      for (std::size_t i = 0; i < forced.size(); ++i) {
        if (shape_used[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < r.concl.size(); ++j) {
          if (bound[j]) continue;
          if (fits(forced[i], r.concl[j])) {
            bound[j] = true;
            ids[j] = forced[i].id;
            found = true;
            break;
          }
        }
        // unmatched expectations surface later as validation diagnostics
        (void)found;
      }
      for (std::size_t j = 0; j < r.concl.size(); ++j) {
        if (!bound[j]) ids[j] = p.fresh_occ();
        n.concl.push_back({ids[j], r.concl[j]});
      }
    }
    auto get_idx = [&](const char* key) -> std::optional<std::uint64_t> {
      auto k = r.keys.find(key);
      if (k == r.keys.end()) return std::nullopt;
      std::size_t i = idx_of(k->second);
      if (i >= n.concl.size()) throw ParseError("occurrence index out of range");
      return n.concl[i].id;
    };
    n.pay.main = get_idx(":main");
    n.pay.main2 = get_idx(":main2");
    n.pay.guard = get_idx(":guard");
    n.pay.guard2 = get_idx(":guard2");
    if (auto k = r.keys.find(":disj"); k != r.keys.end()) n.pay.disj = std::stoi(k->second.text);
    if (auto k = r.keys.find(":witness"); k != r.keys.end()) n.pay.witness = obj_of_sexpr(k->second);
    if (auto k = r.keys.find(":eigen"); k != r.keys.end()) n.pay.eigen = k->second.text;
    if (auto k = r.keys.find(":cutformula"); k != r.keys.end())
      n.pay.cut_formula = formula_of_sexpr(k->second);
    if (auto k = r.keys.find(":left"); k != r.keys.end())
      for (std::size_t j = 0; j < k->second.len(); ++j) {
        std::size_t i = idx_of(k->second.at(j));
        if (i >= n.concl.size()) throw ParseError("cut :left index out of range");
        n.pay.left_ids.push_back(n.concl[i].id);
      }
    if (auto k = r.keys.find(":phi"); k != r.keys.end()) n.pay.phi = formula_of_sexpr(k->second);
    if (auto k = r.keys.find(":kappa"); k != r.keys.end()) n.pay.kappa_var = k->second.text;
    if (auto k = r.keys.find(":argv"); k != r.keys.end()) n.pay.arg_var = k->second.text;
    if (auto k = r.keys.find(":t0"); k != r.keys.end()) n.pay.t0 = obj_of_sexpr(k->second);
    if (auto k = r.keys.find(":t1"); k != r.keys.end()) n.pay.t1 = obj_of_sexpr(k->second);
    if (auto k = r.keys.find(":s"); k != r.keys.end()) n.pay.s_term = obj_of_sexpr(k->second);
    if (auto k = r.keys.find(":t"); k != r.keys.end()) n.pay.ind_t = obj_of_sexpr(k->second);
    if (auto k = r.keys.find(":indform"); k != r.keys.end())
      n.pay.ind_formula = formula_of_sexpr(k->second);
    if (auto k = r.keys.find(":indvar"); k != r.keys.end()) n.pay.ind_var = k->second.text;
    if (auto k = r.keys.find(":gamma"); k != r.keys.end())
      for (std::size_t j = 0; j < k->second.len(); ++j) {
        std::size_t i = idx_of(k->second.at(j));
        if (i >= n.concl.size()) throw ParseError("gamma index out of range");
        n.pay.gamma_ids.push_back(n.concl[i].id);
      }
    if (auto k = r.keys.find(":relativizer"); k != r.keys.end())
      n.pay.relativizer = ord_of_sexpr(k->second);
    if (auto k = r.keys.find(":stock"); k != r.keys.end()) n.pay.stock = ord_of_sexpr(k->second);
    if (auto k = r.keys.find(":added"); k != r.keys.end())
      n.pay.h_added = std::stoul(k->second.text);

    n.id = id;
    p.nodes[id] = n;
    p.next_node = std::max(p.next_node, id + 1);

    // derive premise shapes to push occurrence ids upward
    std::vector<Sequent> shapes;
    {
      Node& stored = p.nodes[id];
      std::uint64_t before = p.next_occ;
      std::uint64_t counter = before;
      shapes = calc::derive_premises(stored, counter);
      p.next_occ = counter;
      // D1: premise keeps the stored premise formulas at gamma positions; the
      // shape carries conclusion formulas there, which the builder below
      // overrides with the raw node's own stored formulas
    }
    if (shapes.size() != n.prems.size())
      throw ParseError("node " + std::to_string(id) + ": premise count mismatch");
    const Node& done = p.nodes[id];
    for (std::size_t k2 = 0; k2 < n.prems.size(); ++k2)
      build(n.prems[k2], shapes[k2], done.pay.relativizer, done.pay.gamma_ids);
  };
  build(root, {}, std::nullopt, {});
  return p;
}

}  // namespace opr::io
