#include "bicyclic/semidirect.hpp"

namespace bicyclic {

  SdElement::SdElement(Int a, Int k, Domain d) : _a(a), _k(k), _domain(d) {
    if (k < 0) {
      throw DomainError("multiplicative component k must be >= 0, got "
                        + std::to_string(k));
    }
    if (d == Domain::omega && a < 0) {
      throw DomainError("additive component a must be >= 0 in (omega,+), got "
                        + std::to_string(a));
    }
  }

  std::string to_string(SdElement const& s) {
    return "(" + std::to_string(s.a()) + "," + std::to_string(s.k()) + ")";
  }

  SdElement sd_multiply(SdElement const& u, SdElement const& v) {
    require_same_domain(u.domain(), v.domain(), "sd_multiply");
    return SdElement(checked_add(u.a(), sd_action(u.k(), v.a())),
                     checked_mul(u.k(), v.k()),
                     u.domain());
  }

  SdElement sd_identity(Domain d) {
    return SdElement(0, 1, d);
  }

  Int sd_action(Int k, Int n) {
    return checked_mul(k, n);
  }

  SdElement iso_to_sd(Endo const& phi) {
    return SdElement(phi.a(), phi.k(), phi.domain());
  }

  Endo iso_from_sd(SdElement const& s) {
    return Endo(s.k(), s.a(), s.domain());
  }

}  // namespace bicyclic
