#include "doctest.h"
#include "ord/arith.hpp"
#include "ord/cnf.hpp"
#include "ord/order.hpp"
#include "support/cnf_arith.hpp"
#include "support/gen.hpp"

using namespace opr;
using ord::Cmp;
using ord::Ord;

static int as_int(Cmp c) { return c == Cmp::LT ? -1 : c == Cmp::EQ ? 0 : 1; }

TEST_SUITE_BEGIN("cnf oracle");

TEST_CASE("compare agrees with CNF comparison on the eps0 fragment, size <= 6") {
  auto corpus = gen::enumerate_eps0(6);
  CAPTURE(corpus.size());
  REQUIRE(corpus.size() > 30);
  std::size_t pairs = 0;
  for (const auto& a : corpus) {
    ord::Cnf ca = ord::to_cnf_small(a);
    for (const auto& b : corpus) {
      ord::Cnf cb = ord::to_cnf_small(b);
      ++pairs;
      REQUIRE_MESSAGE(as_int(ord::compare(a, b)) == oracle::cnf_cmp(ca, cb),
                      "disagreement on pair");
    }
  }
  CHECK(pairs >= 1000);
}

TEST_CASE("nsum and nprod commute with the translation") {
  auto corpus = gen::enumerate_eps0(6);
  for (const auto& a : corpus) {
    ord::Cnf ca = ord::to_cnf_small(a);
    for (const auto& b : corpus) {
      ord::Cnf cb = ord::to_cnf_small(b);
      REQUIRE(ord::to_cnf_small(ord::nsum(a, b)) == oracle::cnf_nat_add(ca, cb));
      REQUIRE(ord::to_cnf_small(ord::nprod(a, b)) == oracle::cnf_nat_mul(ca, cb));
    }
  }
}

TEST_CASE("ordinary + and * agree with CNF ordinal arithmetic") {
  auto corpus = gen::enumerate_eps0(5);
  for (const auto& a : corpus) {
    ord::Cnf ca = ord::to_cnf_small(a);
    for (const auto& b : corpus) {
      ord::Cnf cb = ord::to_cnf_small(b);
      REQUIRE(ord::to_cnf_small(ord::ord_add(a, b)) == oracle::cnf_ord_add(ca, cb));
      REQUIRE(ord::to_cnf_small(ord::ord_mul(a, b)) == oracle::cnf_ord_mul(ca, cb));
    }
  }
}

TEST_CASE("epsilon analogues: w^e = e only for the designated atoms") {
  auto corpus = gen::enumerate_eps0(5);
  for (const auto& a : corpus) {
    Ord w = Ord::wpow(a);
    CHECK(ord::compare(a, w) == Cmp::LT);  // no epsilon numbers inside the fragment
  }
  CHECK(Ord::wpow(Ord::w1()) == Ord::w1());
  CHECK(Ord::wpow(Ord::r0()) == Ord::r0());
}

TEST_SUITE_END();
