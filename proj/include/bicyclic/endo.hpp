// Endomorphisms e[k,a] : (m, n) -> (km + a, kn + a).
//
// For every k >= 0 and every a (a >= 0 on B_omega) the map is an
// endomorphism, and every endomorphism of B_omega or B_Z is of this form, so
// an Endo is stored by its parameters rather than as a function.

#ifndef BICYCLIC_ENDO_HPP_
#define BICYCLIC_ENDO_HPP_

#include <string>

#include "bicyclic/core.hpp"

namespace bicyclic {

  class Endo {
   public:
    // Throws DomainError if k < 0, or if d is omega and a < 0.
    Endo(Int k, Int a, Domain d = Domain::omega);

    Int k() const noexcept {
      return _k;
    }
    Int a() const noexcept {
      return _a;
    }
    Domain domain() const noexcept {
      return _domain;
    }

    bool operator==(Endo const&) const = default;

   private:
    Int    _k;
    Int    _a;
    Domain _domain;
  };

  // "e[k,a]"
  std::string to_string(Endo const& phi);

  // Lexicographic on (k, a).
  bool operator<(Endo const& x, Endo const& y);

  Element apply(Endo const& phi, Element const& x);

  // The map "psi first, then phi": apply(compose(phi, psi), x) equals
  // apply(phi, apply(psi, x)). Parameters: k = phi.k * psi.k and
  // a = phi.a + phi.k * psi.a.
  Endo compose(Endo const& phi, Endo const& psi);

  // e[1,0]
  Endo identity_endo(Domain d);

  // k == 0: everything collapses to the idempotent (a, a).
  bool is_annihilating(Endo const& phi) noexcept;

  // Fixes the identity (0,0) of the monoid B_omega. Throws DomainError on B_Z,
  // which is not a monoid.
  bool is_monoid_endo(Endo const& phi);

  // (0,0) -> (0,0); meaningful on both domains.
  bool fixes_origin(Endo const& phi) noexcept;

  // B_omega: only e[1,0]. B_Z: every e[1,a].
  bool is_automorphism(Endo const& phi) noexcept;

  // e[1,-a]. Throws PreconditionError unless is_automorphism(phi).
  Endo invert_automorphism(Endo const& phi);

  // (m, n) -> (km + a, kn + a) from B_omega into B_Z; an injective
  // homomorphism for every k >= 1. Throws PreconditionError for k < 1 and
  // DomainError if x is not in B_omega.
  Element apply_embedding(Int a, Int k, Element const& x);

}  // namespace bicyclic

#endif  // BICYCLIC_ENDO_HPP_
