#ifndef OPR_ORD_TERM_HPP
#define OPR_ORD_TERM_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace opr::ord {

// Raised when an operation runs into an order-opaque mu-term.
struct Undecidable : std::runtime_error {
  explicit Undecidable(const std::string& what) : std::runtime_error(what) {}
};

// Coarse position of a term value relative to the two regular ordinals.
// Totally ordered: Finite(0) < Finite(1) < ... < Countable < EqW1 < Middle < EqR0 < Above.
struct Region {
  enum class Tag { Finite, Countable, EqW1, Middle, EqR0, Above };
  Tag tag = Tag::Finite;
  std::uint64_t n = 0;  // meaningful for Finite only

  static Region finite(std::uint64_t k) { return {Tag::Finite, k}; }
  static Region countable() { return {Tag::Countable, 0}; }
  static Region eq_w1() { return {Tag::EqW1, 0}; }
  static Region middle() { return {Tag::Middle, 0}; }
  static Region eq_r0() { return {Tag::EqR0, 0}; }
  static Region above() { return {Tag::Above, 0}; }

  friend bool operator==(const Region& a, const Region& b) {
    return a.tag == b.tag && (a.tag != Tag::Finite || a.n == b.n);
  }
  friend bool operator<(const Region& a, const Region& b) {
    if (a.tag != b.tag) return static_cast<int>(a.tag) < static_cast<int>(b.tag);
    return a.tag == Tag::Finite && a.n < b.n;
  }
};

// Normal-form ordinal notation over 0, w1, r0 with #, w^, D0, D1, F and mu.
// Immutable value type; all factories normalize:
//   - sums are flat, zero-free, sorted non-increasing, length >= 2
//   - w^e collapses to e when e is an epsilon atom (w1, r0, D, F)
class Ord {
 public:
  enum class K { Zero, W1, R0, Sum, WPow, D, F, Mu };

  Ord() : Ord(zero()) {}

  static Ord zero();
  static Ord w1();
  static Ord r0();
  static Ord nat(std::uint64_t n);
  static Ord wpow(const Ord& e);
  static Ord sum(std::vector<Ord> parts);  // natural-sum normal form of the parts
  static Ord d(int level, const Ord& a);   // level 0 or 1
  static Ord f(const Ord& a);
  static Ord mu(std::string id, std::vector<Ord> args);

  K kind() const { return rep_->k; }
  int dlevel() const { return rep_->level; }
  const Ord& arg() const { return rep_->kids[0]; }        // WPow/D/F
  const std::vector<Ord>& parts() const { return rep_->kids; }  // Sum
  const std::vector<Ord>& args() const { return rep_->kids; }   // Mu
  const std::string& mu_id() const { return rep_->id; }

  bool is_zero() const { return kind() == K::Zero; }
  // Numeral recognition: 0, w^0, or a sum of w^0's.
  bool is_nat() const;
  std::uint64_t nat_value() const;  // pre: is_nat()
  bool contains_mu() const;
  std::size_t size() const;  // constructor count

  bool operator==(const Ord& o) const { return equal(*this, o); }
  bool operator!=(const Ord& o) const { return !equal(*this, o); }

  // Total syntactic order used for canonical placement only (sorting,
  // de-duplication). Agrees with nothing semantic; see compare() in order.hpp.
  static int syntactic_cmp(const Ord& a, const Ord& b);

 private:
  struct Rep {
    K k;
    int level = 0;
    std::string id;
    std::vector<Ord> kids;
  };
  std::shared_ptr<const Rep> rep_;
  explicit Ord(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}
  static Ord make(Rep r);
  static bool equal(const Ord& a, const Ord& b);
};

// Region of a normal term. Throws Undecidable if a mu-term prevents placement.
Region region(const Ord& a);

// Rebuild a term bottom-up through the factories. Identity on normal forms;
// serves as the normalization entry point for arbitrary term trees.
Ord renormalize(const Ord& a);

}  // namespace opr::ord

#endif
