#include "bicyclic/core.hpp"

#include <algorithm>

namespace bicyclic {

  std::string to_string(Domain d) {
    return d == Domain::omega ? "omega" : "z";
  }

  void require_same_domain(Domain a, Domain b, char const* what) {
    if (a != b) {
      throw DomainError(std::string(what) + ": domain mismatch ("
                        + to_string(a) + " vs " + to_string(b) + ")");
    }
  }

  Element::Element(Int i, Int j, Domain d) : _i(i), _j(j), _domain(d) {
    if (d == Domain::omega && (i < 0 || j < 0)) {
      throw DomainError("element (" + std::to_string(i) + ","
                        + std::to_string(j)
                        + ") has a negative coordinate in B_omega");
    }
  }

  std::string to_string(Element const& x) {
    return "(" + std::to_string(x.i()) + "," + std::to_string(x.j()) + ")";
  }

  bool operator<(Element const& x, Element const& y) {
    if (x.domain() != y.domain()) {
      return x.domain() < y.domain();
    }
    if (x.i() != y.i()) {
      return x.i() < y.i();
    }
    return x.j() < y.j();
  }

  Element multiply(Element const& x, Element const& y) {
    require_same_domain(x.domain(), y.domain(), "multiply");
    if (x.j() <= y.i()) {
      return Element(checked_add(checked_sub(x.i(), x.j()), y.i()),
                     y.j(),
                     x.domain());
    }
    return Element(
        x.i(), checked_add(checked_sub(x.j(), y.i()), y.j()), x.domain());
  }

  Element inverse(Element const& x) {
    return Element(x.j(), x.i(), x.domain());
  }

  bool is_idempotent(Element const& x) noexcept {
    return x.i() == x.j();
  }

  Element idempotent(Int c, Domain d) {
    return Element(c, c, d);
  }

  Element power(Element const& x, Int n) {
    if (n < 1) {
      throw PreconditionError("power: exponent must be >= 1, got "
                              + std::to_string(n));
    }
    if (x.i() >= x.j()) {
      Int const a = x.j();
      Int const k = checked_sub(x.i(), x.j());
      return Element(checked_add(checked_mul(k, n), a), a, x.domain());
    }
    Int const a = x.i();
    Int const k = checked_sub(x.j(), x.i());
    return Element(a, checked_add(checked_mul(k, n), a), x.domain());
  }

  Element power_by_repeated_multiplication(Element const& x,
                                           Int            n,
                                           MultiplyFn     mul) {
    if (n < 1) {
      throw PreconditionError("power: exponent must be >= 1, got "
                              + std::to_string(n));
    }
    Element result = x;
    for (Int step = 1; step < n; ++step) {
      result = mul(result, x);
    }
    return result;
  }

  bool leq_natural(Element const& s, Element const& t) {
    require_same_domain(s.domain(), t.domain(), "leq_natural");
    if (s == t) {
      return true;
    }
    return checked_sub(s.i(), s.j()) == checked_sub(t.i(), t.j())
           && s.i() >= t.i();
  }

  std::optional<Element> leq_natural_witness(Element const& s,
                                             Element const& t,
                                             Int            bound,
                                             MultiplyFn     mul) {
    require_same_domain(s.domain(), t.domain(), "leq_natural_witness");
    Int const lowest = s.domain() == Domain::omega ? 0 : -bound;
    for (Int c = bound; c >= lowest; --c) {
      Element const e = idempotent(c, s.domain());
      if (mul(t, e) == s) {
        return e;
      }
    }
    return std::nullopt;
  }

  namespace mutant {
    Element multiply_max(Element const& x, Element const& y) {
      require_same_domain(x.domain(), y.domain(), "multiply");
      Int const m = std::max(x.j(), y.i());
      return Element(checked_sub(checked_add(x.i(), y.i()), m),
                     checked_sub(checked_add(x.j(), y.j()), m),
                     x.domain());
    }
  }  // namespace mutant

}  // namespace bicyclic
