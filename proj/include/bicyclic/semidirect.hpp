// The semidirect products (omega,+) x| (omega,*) and Z(+) x| (omega,*) with
// (omega,*) acting by multiplication, n -> kn. The product is
//
//   (a1, k1) (a2, k2) = (a1 + k1 a2, k1 k2).

#ifndef BICYCLIC_SEMIDIRECT_HPP_
#define BICYCLIC_SEMIDIRECT_HPP_

#include <string>

#include "bicyclic/core.hpp"
#include "bicyclic/endo.hpp"

namespace bicyclic {

  // Domain omega: additive part in (omega,+); zed: additive part in Z(+).
  class SdElement {
   public:
    // Throws DomainError if k < 0, or if d is omega and a < 0.
    SdElement(Int a, Int k, Domain d = Domain::omega);

    Int a() const noexcept {
      return _a;
    }
    Int k() const noexcept {
      return _k;
    }
    Domain domain() const noexcept {
      return _domain;
    }

    bool operator==(SdElement const&) const = default;

   private:
    Int    _a;
    Int    _k;
    Domain _domain;
  };

  // "(a,k)"
  std::string to_string(SdElement const& s);

  SdElement sd_multiply(SdElement const& u, SdElement const& v);

  // (0,1)
  SdElement sd_identity(Domain d);

  // k n
  Int sd_action(Int k, Int n);

  // e[k,a] -> (a,k)
  SdElement iso_to_sd(Endo const& phi);

  // (a,k) -> e[k,a]
  Endo iso_from_sd(SdElement const& s);

}  // namespace bicyclic

#endif  // BICYCLIC_SEMIDIRECT_HPP_
