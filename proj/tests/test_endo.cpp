#include "doctest.h"

#include "bicyclic/endo.hpp"
#include "reference.hpp"

using namespace bicyclic;

namespace {
  Element om(Int i, Int j) {
    return Element(i, j, Domain::omega);
  }
  Element zz(Int i, Int j) {
    return Element(i, j, Domain::zed);
  }
  Endo eo(Int k, Int a) {
    return Endo(k, a, Domain::omega);
  }
  Endo ez(Int k, Int a) {
    return Endo(k, a, Domain::zed);
  }
}  // namespace

TEST_CASE("endo invariants") {
  CHECK_THROWS_AS(eo(-1, 0), DomainError);
  CHECK_THROWS_AS(ez(-1, 0), DomainError);
  CHECK_THROWS_AS(eo(1, -1), DomainError);
  CHECK_NOTHROW(ez(1, -1));
}

TEST_CASE("apply") {
  for (Int m = 0; m < 6; ++m) {
    for (Int n = 0; n < 6; ++n) {
      CHECK(apply(eo(1, 0), om(m, n)) == om(m, n));
      CHECK(apply(eo(0, 4), om(m, n)) == om(4, 4));
    }
  }
  CHECK(apply(eo(2, 1), om(2, 3)) == om(5, 7));
  CHECK(apply(ez(0, -4), zz(9, 1)) == zz(-4, -4));
  CHECK(apply(identity_endo(Domain::omega), om(7, 3)) == om(7, 3));
  CHECK_THROWS_AS(apply(eo(1, 0), zz(0, 0)), DomainError);
}

TEST_CASE("compose") {
  for (Int k1 = 0; k1 < 6; ++k1) {
    for (Int k2 = 0; k2 < 6; ++k2) {
      CHECK(compose(eo(k1, 0), eo(k2, 0)) == eo(k1 * k2, 0));
    }
  }
  CHECK(compose(ez(1, 3), ez(1, -3)) == ez(1, 0));
  CHECK(compose(ez(1, -3), ez(1, 3)) == ez(1, 0));

  // e[2,1] after e[3,2], computed pointwise with the reference map.
  CHECK(compose(eo(2, 1), eo(3, 2)) == eo(6, 5));
  for (Int m = 0; m < 10; ++m) {
    for (Int n = 0; n < 10; ++n) {
      auto const want = reference::apply(2, 1, reference::apply(3, 2, {m, n}));
      auto const got  = apply(eo(6, 5), om(m, n));
      CHECK(reference::Pair{got.i(), got.j()} == want);
    }
  }

  Endo const phi = eo(3, 2);
  CHECK(compose(identity_endo(Domain::omega), phi) == phi);
  CHECK(compose(phi, identity_endo(Domain::omega)) == phi);
  CHECK_THROWS_AS(compose(eo(1, 0), ez(1, 0)), DomainError);
}

TEST_CASE("compose is associative and coherent with apply") {
  for (Int k1 = 0; k1 <= 3; ++k1)
    for (Int a1 = -3; a1 <= 3; ++a1)
      for (Int k2 = 0; k2 <= 3; ++k2)
        for (Int a2 = -3; a2 <= 3; ++a2) {
          Endo const f = ez(k1, a1), g = ez(k2, a2);
          for (Int k3 = 0; k3 <= 2; ++k3) {
            Endo const h = ez(k3, -k3);
            REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
          }
          for (Int m = -3; m <= 3; ++m) {
            for (Int n = -3; n <= 3; ++n) {
              REQUIRE(apply(compose(f, g), zz(m, n))
                      == apply(f, apply(g, zz(m, n))));
            }
          }
        }
}

TEST_CASE("endomorphisms preserve products, inverses and the order") {
  for (Int k = 0; k <= 4; ++k) {
    for (Int a = -4; a <= 4; ++a) {
      Endo const phi = ez(k, a);
      for (Int i1 = -3; i1 <= 3; ++i1)
        for (Int j1 = -3; j1 <= 3; ++j1) {
          Element const x = zz(i1, j1);
          REQUIRE(apply(phi, inverse(x)) == inverse(apply(phi, x)));
          for (Int i2 = -3; i2 <= 3; ++i2)
            for (Int j2 = -3; j2 <= 3; ++j2) {
              Element const y = zz(i2, j2);
              REQUIRE(apply(phi, multiply(x, y))
                      == multiply(apply(phi, x), apply(phi, y)));
              if (leq_natural(x, y)) {
                REQUIRE(leq_natural(apply(phi, x), apply(phi, y)));
              }
            }
        }
    }
  }
  // The image of (1,1) <= (0,0) under e[2,1].
  CHECK(apply(eo(2, 1), om(1, 1)) == om(3, 3));
  CHECK(leq_natural(om(3, 3), om(1, 1)));
}

TEST_CASE("predicates") {
  CHECK(is_annihilating(eo(0, 5)));
  CHECK_FALSE(is_annihilating(eo(1, 0)));
  CHECK_FALSE(is_annihilating(eo(3, 2)));

  for (Int k = 0; k < 5; ++k) {
    CHECK(is_monoid_endo(eo(k, 0)));
    CHECK(fixes_origin(ez(k, 0)));
  }
  CHECK_FALSE(is_monoid_endo(eo(2, 1)));
  CHECK(apply(eo(0, 0), om(0, 0)) == om(0, 0));
  CHECK(is_monoid_endo(eo(0, 0)));
  CHECK_THROWS_AS(is_monoid_endo(ez(1, 0)), DomainError);
  CHECK_FALSE(fixes_origin(ez(1, -3)));
  CHECK(fixes_origin(eo(0, 0)));
}

TEST_CASE("automorphisms") {
  CHECK(is_automorphism(eo(1, 0)));
  CHECK_FALSE(is_automorphism(eo(1, 1)));
  for (Int a = -6; a <= 6; ++a) {
    CHECK(is_automorphism(ez(1, a)));
  }
  CHECK_FALSE(is_automorphism(eo(2, 0)));
  CHECK_FALSE(is_automorphism(ez(2, 0)));
  CHECK_FALSE(is_automorphism(ez(0, 0)));

  CHECK(invert_automorphism(ez(1, 3)) == ez(1, -3));
  CHECK(invert_automorphism(eo(1, 0)) == eo(1, 0));
  CHECK(invert_automorphism(ez(1, -7)) == ez(1, 7));
  for (Int a = -6; a <= 6; ++a) {
    Endo const phi = ez(1, a);
    CHECK(compose(phi, invert_automorphism(phi)) == identity_endo(Domain::zed));
    CHECK(compose(invert_automorphism(phi), phi) == identity_endo(Domain::zed));
  }
  CHECK_THROWS_AS(invert_automorphism(ez(2, 0)), PreconditionError);
  CHECK_THROWS_AS(invert_automorphism(eo(1, 1)), PreconditionError);
}

TEST_CASE("embeddings of B_omega into B_Z") {
  for (Int m = 0; m < 5; ++m) {
    for (Int n = 0; n < 5; ++n) {
      CHECK(apply_embedding(0, 1, om(m, n)) == zz(m, n));
    }
  }
  CHECK(apply_embedding(-2, 3, om(1, 0)) == zz(1, -2));
  CHECK(apply_embedding(-5, 2, om(0, 1)) == zz(-5, -3));
  CHECK(multiply(apply_embedding(-5, 2, om(0, 1)),
                 apply_embedding(-5, 2, om(1, 0)))
        == zz(-5, -5));
  CHECK(apply_embedding(-5, 2, om(0, 0)) == zz(-5, -5));
  CHECK_THROWS_AS(apply_embedding(0, 0, om(1, 0)), PreconditionError);
  CHECK_THROWS_AS(apply_embedding(0, 1, zz(1, 0)), DomainError);
}
