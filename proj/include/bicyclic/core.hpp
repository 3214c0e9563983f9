// Element arithmetic of the bicyclic monoid B_omega and the extended bicyclic
// semigroup B_Z.
//
// Both semigroups are sets of integer pairs (i, j) under the same product
//
//   (i1, j1) * (i2, j2) = (i1 - j1 + i2, j2)   if j1 <= i2
//                         (i1, j1 - i2 + j2)   if j1 >= i2
//
// and differ only in whether coordinates may be negative. An Element carries
// its Domain and binary operations refuse to mix domains.

#ifndef BICYCLIC_CORE_HPP_
#define BICYCLIC_CORE_HPP_

#include <optional>
#include <string>

#include "bicyclic/integer.hpp"

namespace bicyclic {

  enum class Domain {
    omega,  // B_omega: coordinates in {0, 1, 2, ...}
    zed     // B_Z: coordinates in the integers
  };

  std::string to_string(Domain d);

  // Throws DomainError unless a == b.
  void require_same_domain(Domain a, Domain b, char const* what);

  class Element {
   public:
    // Throws DomainError if d is omega and either coordinate is negative.
    Element(Int i, Int j, Domain d = Domain::omega);

    Int i() const noexcept {
      return _i;
    }
    Int j() const noexcept {
      return _j;
    }
    Domain domain() const noexcept {
      return _domain;
    }

    bool operator==(Element const&) const = default;

   private:
    Int    _i;
    Int    _j;
    Domain _domain;
  };

  // "(i,j)"
  std::string to_string(Element const& x);

  // Lexicographic on (i, j); used for deterministic scan orders and sets.
  bool operator<(Element const& x, Element const& y);

  using MultiplyFn = Element (*)(Element const&, Element const&);

  Element multiply(Element const& x, Element const& y);

  Element inverse(Element const& x);

  bool is_idempotent(Element const& x) noexcept;

  // The idempotent (c, c).
  Element idempotent(Int c, Domain d);

  // The n-fold product x * ... * x, n >= 1, by the closed forms
  //   (k + a, a)^n = (kn + a, a),   (a, k + a)^n = (a, kn + a).
  // Every element has one of the two shapes (with k >= 0).
  Element power(Element const& x, Int n);

  // The same value computed as a left fold of `mul`; the definition that
  // `power` is checked against.
  Element power_by_repeated_multiplication(Element const& x,
                                           Int            n,
                                           MultiplyFn     mul = multiply);

  // Natural partial order: s <= t iff s = t e for an idempotent e. Closed
  // form: s == t, or the two have the same difference i - j and s.i >= t.i.
  bool leq_natural(Element const& s, Element const& t);

  // Existential form of the natural order: searches idempotents (c, c) with
  // |c| <= bound (and c >= 0 in B_omega), largest c first, for s = t (c, c).
  // When a witness exists it is found if bound >= |s.j|, and the one returned
  // is then s^-1 s.
  std::optional<Element> leq_natural_witness(Element const& s,
                                             Element const& t,
                                             Int            bound,
                                             MultiplyFn     mul = multiply);

  namespace mutant {
    // The product with min{j1, i2} replaced by max{j1, i2}. Exists only so
    // the oracles can be shown to reject a wrong product.
    Element multiply_max(Element const& x, Element const& y);
  }  // namespace mutant

}  // namespace bicyclic

#endif  // BICYCLIC_CORE_HPP_
