#include "bicyclic/endo.hpp"

namespace bicyclic {

  Endo::Endo(Int k, Int a, Domain d) : _k(k), _a(a), _domain(d) {
    if (k < 0) {
      throw DomainError("endomorphism scaling k must be >= 0, got "
                        + std::to_string(k));
    }
    if (d == Domain::omega && a < 0) {
      throw DomainError("endomorphism shift a must be >= 0 on B_omega, got "
                        + std::to_string(a));
    }
  }

  std::string to_string(Endo const& phi) {
    return "e[" + std::to_string(phi.k()) + "," + std::to_string(phi.a())
           + "]";
  }

  bool operator<(Endo const& x, Endo const& y) {
    if (x.domain() != y.domain()) {
      return x.domain() < y.domain();
    }
    if (x.k() != y.k()) {
      return x.k() < y.k();
    }
    return x.a() < y.a();
  }

  Element apply(Endo const& phi, Element const& x) {
    require_same_domain(phi.domain(), x.domain(), "apply");
    return Element(checked_add(checked_mul(phi.k(), x.i()), phi.a()),
                   checked_add(checked_mul(phi.k(), x.j()), phi.a()),
                   x.domain());
  }

  Endo compose(Endo const& phi, Endo const& psi) {
    require_same_domain(phi.domain(), psi.domain(), "compose");
    return Endo(checked_mul(phi.k(), psi.k()),
                checked_add(phi.a(), checked_mul(phi.k(), psi.a())),
                phi.domain());
  }

  Endo identity_endo(Domain d) {
    return Endo(1, 0, d);
  }

  bool is_annihilating(Endo const& phi) noexcept {
    return phi.k() == 0;
  }

  bool is_monoid_endo(Endo const& phi) {
    if (phi.domain() != Domain::omega) {
      throw DomainError("is_monoid_endo: B_Z is not a monoid");
    }
    return phi.a() == 0;
  }

  bool fixes_origin(Endo const& phi) noexcept {
    return phi.a() == 0;
  }

  bool is_automorphism(Endo const& phi) noexcept {
    if (phi.domain() == Domain::omega) {
      return phi.k() == 1 && phi.a() == 0;
    }
    return phi.k() == 1;
  }

  Endo invert_automorphism(Endo const& phi) {
    if (!is_automorphism(phi)) {
      throw PreconditionError("invert_automorphism: " + to_string(phi)
                              + " is not an automorphism of B_"
                              + to_string(phi.domain()));
    }
    return Endo(1, checked_sub(0, phi.a()), phi.domain());
  }

  Element apply_embedding(Int a, Int k, Element const& x) {
    if (k < 1) {
      throw PreconditionError("apply_embedding: k must be >= 1, got "
                              + std::to_string(k));
    }
    if (x.domain() != Domain::omega) {
      throw DomainError("apply_embedding: argument must be in B_omega");
    }
    return Element(checked_add(checked_mul(k, x.i()), a),
                   checked_add(checked_mul(k, x.j()), a),
                   Domain::zed);
  }

}  // namespace bicyclic
