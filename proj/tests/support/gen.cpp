#include "support/gen.hpp"

#include <algorithm>
#include <functional>

#include "ord/order.hpp"

namespace opr::gen {

using ord::Ord;

// Fragment size: 0 and w^0 cost 1, w^e costs 1 + size(e), a sum costs the sum
// of its parts. Keeps the size-6 corpus in the tens of terms.
std::vector<Ord> enumerate_eps0(std::size_t max_size) {
  std::vector<std::vector<Ord>> terms(max_size + 1);   // by exact size
  std::vector<std::vector<Ord>> prins(max_size + 1);   // principal terms only
  if (max_size >= 1) {
    terms[1] = {Ord::zero(), Ord::wpow(Ord::zero())};
    prins[1] = {Ord::wpow(Ord::zero())};
  }
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const auto& e : terms[s - 1])
      if (!e.is_zero()) {
        Ord p = Ord::wpow(e);
        prins[s].push_back(p);
        terms[s].push_back(p);
      }
    // sums: multisets of >= 2 principals with sizes adding to s
    std::vector<std::pair<Ord, std::size_t>> flat;
    for (std::size_t k = 1; k < s; ++k)
      for (const auto& p : prins[k]) flat.push_back({p, k});
    std::vector<Ord> parts;
    std::function<void(std::size_t, std::size_t)> build = [&](std::size_t from,
                                                              std::size_t left) {
      if (left == 0) {
        if (parts.size() >= 2) terms[s].push_back(Ord::sum(parts));
        return;
      }
      for (std::size_t i = from; i < flat.size(); ++i) {
        if (flat[i].second > left) continue;
        parts.push_back(flat[i].first);
        build(i, left - flat[i].second);
        parts.pop_back();
      }
    };
    build(0, s);
  }
  std::vector<Ord> out;
  for (std::size_t s = 1; s <= max_size; ++s)
    out.insert(out.end(), terms[s].begin(), terms[s].end());
  return out;
}

Ord random_term(std::mt19937_64& rng, int depth_budget, int mu_permille, bool no_collapse) {
  auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };
  if (depth_budget <= 0 || pick(100) < 25) {
    if (mu_permille > 0 && pick(1000) < mu_permille) return Ord::mu("A", {});
    switch (pick(5)) {
      case 0: return Ord::zero();
      case 1: return Ord::w1();
      case 2: return Ord::r0();
      case 3: return Ord::nat(1 + rng() % 3);
      default: return Ord::wpow(Ord::nat(rng() % 3));
    }
  }
  int top = no_collapse ? 2 : 6;
  switch (pick(top)) {
    case 0: {
      std::vector<Ord> ps;
      int n = 2 + pick(2);
      for (int i = 0; i < n; ++i)
        ps.push_back(random_term(rng, depth_budget - 1, mu_permille, no_collapse));
      return Ord::sum(std::move(ps));
    }
    case 1: return Ord::wpow(random_term(rng, depth_budget - 1, mu_permille, no_collapse));
    case 2: return Ord::d(0, random_term(rng, depth_budget - 1, mu_permille, no_collapse));
    case 3: return Ord::d(1, random_term(rng, depth_budget - 1, mu_permille, no_collapse));
    case 4: return Ord::f(random_term(rng, depth_budget - 1, mu_permille, no_collapse));
    default: return Ord::wpow(random_term(rng, depth_budget - 1, mu_permille, no_collapse));
  }
}

}  // namespace opr::gen
