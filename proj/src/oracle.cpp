#include "bicyclic/oracle.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <utility>

namespace bicyclic {

  namespace {

    // Accumulates one sweep. `step` runs a single case; a case fails when
    // its check returns a non-empty description or throws.
    class Sweep {
     public:
      Sweep(std::string claim, Window const& w) {
        _report.claim  = std::move(claim);
        _report.window = w;
      }

      template <typename Check, typename Inputs>
      bool step(Check&& check, Inputs&& inputs) {
        ++_report.cases_checked;
        std::string detail;
        try {
          detail = check();
        } catch (std::exception const& e) {
          detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
          return true;
        }
        _report.counterexample = Counterexample{inputs(), std::move(detail)};
        return false;
      }

      void note(std::string text) {
        _report.note = std::move(text);
      }

      VerificationReport report() const {
        return _report;
      }

     private:
      VerificationReport _report;
    };

    std::string ne(std::string const& what,
                   std::string const& got,
                   std::string const& want) {
      return what + ": got " + got + ", expected " + want;
    }

    template <typename T>
    std::string expect_eq(std::string const& what, T const& got, T const& want) {
      if (got == want) {
        return {};
      }
      return ne(what, to_string(got), to_string(want));
    }

    std::string prefix(std::string const& label, std::string detail) {
      return detail.empty() ? detail : label + ": " + detail;
    }

    Int lowest_shift(Domain d, Int bound) {
      return d == Domain::omega ? 0 : -bound;
    }

  }  // namespace

  void validate(Window const& w) {
    if (w.element_bound < 1 || w.param_bound < 1 || w.power_bound < 1) {
      throw PreconditionError("window bounds must all be >= 1");
    }
  }

  std::vector<Element> window_elements(Domain d, Int element_bound) {
    Int const lo = d == Domain::omega ? 0 : -element_bound;
    Int const hi = d == Domain::omega ? element_bound - 1 : element_bound;
    std::vector<Element> out;
    for (Int i = lo; i <= hi; ++i) {
      for (Int j = lo; j <= hi; ++j) {
        out.emplace_back(i, j, d);
      }
    }
    return out;
  }

  std::vector<Endo> window_endos(Domain d, Int param_bound) {
    std::vector<Endo> out;
    for (Int k = 0; k <= param_bound; ++k) {
      for (Int a = lowest_shift(d, param_bound); a <= param_bound; ++a) {
        out.emplace_back(k, a, d);
      }
    }
    return out;
  }

  std::string to_string(Value const& v) {
    return std::visit(
        [](auto const& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Int>) {
            return std::to_string(x);
          } else if constexpr (std::is_same_v<T, Word>) {
            return "\"" + bicyclic::to_string(x) + "\"";
          } else {
            return bicyclic::to_string(x);
          }
        },
        v);
  }

  VerificationReport merge(std::string                            claim,
                           std::vector<VerificationReport> const& parts) {
    VerificationReport out;
    out.claim = std::move(claim);
    if (!parts.empty()) {
      out.window = parts.front().window;
    }
    for (auto const& part : parts) {
      out.cases_checked += part.cases_checked;
      if (!out.counterexample && part.counterexample) {
        out.counterexample = part.counterexample;
      }
      if (!part.note.empty()) {
        out.note += (out.note.empty() ? "" : " ") + part.note;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Element arithmetic
  ////////////////////////////////////////////////////////////////////////

  VerificationReport check_associativity(Domain        d,
                                         Window const& w,
                                         MultiplyFn    mul) {
    validate(w);
    Sweep      sweep("eq-1.1-assoc", w);
    auto const elts = window_elements(d, w.element_bound);
    for (auto const& x : elts) {
      for (auto const& y : elts) {
        for (auto const& z : elts) {
          bool const ok = sweep.step(
              [&] {
                return expect_eq(
                    "(xy)z vs x(yz)", mul(mul(x, y), z), mul(x, mul(y, z)));
              },
              [&] { return std::vector<Value>{x, y, z}; });
          if (!ok) {
            return sweep.report();
          }
        }
      }
    }
    return sweep.report();
  }

  VerificationReport check_powers(Domain d, Window const& w, MultiplyFn mul) {
    validate(w);
    Sweep sweep("powers", w);
    for (Int k = 0; k <= w.param_bound; ++k) {
      for (Int a = lowest_shift(d, w.param_bound); a <= w.param_bound; ++a) {
        Element const down(k + a, a, d);
        Element const up(a, k + a, d);
        for (Int n = 1; n <= w.power_bound; ++n) {
          bool const ok = sweep.step(
              [&] {
                std::string err;
                Element const want_down(k * n + a, a, d);
                Element const want_up(a, k * n + a, d);
                err = expect_eq("power (k+a,a)^n", power(down, n), want_down);
                if (err.empty()) {
                  err = expect_eq("repeated (k+a,a)^n",
                                  power_by_repeated_multiplication(down, n, mul),
                                  want_down);
                }
                if (err.empty()) {
                  err = expect_eq("power (a,k+a)^n", power(up, n), want_up);
                }
                if (err.empty()) {
                  err = expect_eq("repeated (a,k+a)^n",
                                  power_by_repeated_multiplication(up, n, mul),
                                  want_up);
                }
                return err;
              },
              [&] { return std::vector<Value>{k, a, n}; });
          if (!ok) {
            return sweep.report();
          }
        }
      }
    }
    return sweep.report();
  }

  Int required_witness_bound(Domain d, Window const& w) {
    // max |coordinate| + 1
    return d == Domain::omega ? w.element_bound : w.element_bound + 1;
  }

  VerificationReport check_order_closed_form(Domain             d,
                                             Window const&      w,
                                             std::optional<Int> witness_bound,
                                             MultiplyFn         mul) {
    validate(w);
    Int const needed = required_witness_bound(d, w);
    Int const bound  = witness_bound.value_or(needed);
    if (bound < needed) {
      throw PreconditionError(
          "witness bound " + std::to_string(bound)
          + " is too small for a complete order check on this window (need >= "
          + std::to_string(needed) + ")");
    }
    Sweep      sweep("order-closed-form", w);
    auto const elts = window_elements(d, w.element_bound);
    for (auto const& s : elts) {
      for (auto const& t : elts) {
        bool const ok = sweep.step(
            [&]() -> std::string {
              bool const closed  = leq_natural(s, t);
              auto const witness = leq_natural_witness(s, t, bound, mul);
              if (closed != witness.has_value()) {
                return std::string("closed form says ")
                       + (closed ? "s <= t" : "not s <= t")
                       + " but witness search "
                       + (witness ? "found " + to_string(*witness)
                                  : std::string("found none"));
              }
              if (is_idempotent(s) && is_idempotent(t)
                  && closed != (s.i() >= t.i())) {
                return "order on idempotents is not reverse numeric order";
              }
              return {};
            },
            [&] { return std::vector<Value>{s, t}; });
        if (!ok) {
          return sweep.report();
        }
      }
    }
    return sweep.report();
  }

  VerificationReport check_order_preservation(Domain d, Window const& w) {
    validate(w);
    Sweep      sweep("order-preservation", w);
    auto const elts  = window_elements(d, w.element_bound);
    auto const endos = window_endos(d, w.param_bound);
    for (auto const& phi : endos) {
      for (auto const& x : elts) {
        bool ok = sweep.step(
            [&] {
              return expect_eq("image of inverse",
                               apply(phi, inverse(x)),
                               inverse(apply(phi, x)));
            },
            [&] { return std::vector<Value>{phi, x}; });
        if (!ok) {
          return sweep.report();
        }
        for (auto const& y : elts) {
          if (!leq_natural(x, y)) {
            continue;
          }
          ok = sweep.step(
              [&]() -> std::string {
                if (leq_natural(apply(phi, x), apply(phi, y))) {
                  return {};
                }
                return "x <= y but " + to_string(apply(phi, x)) + " is not <= "
                       + to_string(apply(phi, y));
              },
              [&] { return std::vector<Value>{phi, x, y}; });
          if (!ok) {
            return sweep.report();
          }
        }
      }
    }
    return sweep.report();
  }

  VerificationReport check_order_and_powers(Domain        d,
                                            Window const& w,
                                            MultiplyFn    mul) {
    return merge("order-and-powers",
                 {check_powers(d, w, mul),
                  check_order_closed_form(d, w, std::nullopt, mul),
                  check_order_preservation(d, w)});
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms
  ////////////////////////////////////////////////////////////////////////

  VerificationReport check_endo_family(Domain        d,
                                       Window const& w,
                                       MultiplyFn    mul,
                                       EndoSlice     slice) {
    validate(w);
    Sweep      sweep(d == Domain::omega ? "lemma-2.1" : "lemma-3.1", w);
    auto const elts = window_elements(d, w.element_bound);
    for (auto const& phi : window_endos(d, w.param_bound)) {
      if ((slice == EndoSlice::origin_fixing && phi.a() != 0)
          || (slice == EndoSlice::annihilating && phi.k() != 0)) {
        continue;
      }
      for (auto const& x : elts) {
        for (auto const& y : elts) {
          bool const ok = sweep.step(
              [&] {
                return expect_eq("image of product",
                                 apply(phi, mul(x, y)),
                                 mul(apply(phi, x), apply(phi, y)));
              },
              [&] { return std::vector<Value>{phi, x, y}; });
          if (!ok) {
            return sweep.report();
          }
        }
      }
    }
    return sweep.report();
  }

  VerificationReport check_monoid_endo_family(Window const& w, MultiplyFn mul) {
    auto  family = check_endo_family(
        Domain::omega, w, mul, EndoSlice::origin_fixing);
    Sweep sweep("cor-2.2", w);
    for (Int k = 0; k <= w.param_bound; ++k) {
      Endo const phi(k, 0);
      bool const ok = sweep.step(
          [&]() -> std::string {
            auto err = expect_eq(
                "image of identity", apply(phi, Element(0, 0)), Element(0, 0));
            if (err.empty() && !is_monoid_endo(phi)) {
              err = "is_monoid_endo rejects an identity-fixing map";
            }
            return err;
          },
          [&] { return std::vector<Value>{phi}; });
      if (!ok) {
        break;
      }
    }
    return merge("cor-2.2", {family, sweep.report()});
  }

  VerificationReport check_origin_fixing_composition(Window const& w) {
    validate(w);
    Sweep      sweep("thm-3.4", w);
    auto const elts = window_elements(Domain::zed, w.element_bound);
    for (Int k1 = 0; k1 <= w.param_bound; ++k1) {
      for (Int k2 = 0; k2 <= w.param_bound; ++k2) {
        Endo const f(k1, 0, Domain::zed);
        Endo const g(k2, 0, Domain::zed);
        bool const ok = sweep.step(
            [&]() -> std::string {
              Endo const want(k1 * k2, 0, Domain::zed);
              auto       err = expect_eq("e[k1,0]e[k2,0]", compose(f, g), want);
              if (err.empty()) {
                err = expect_eq("e[k2,0]e[k1,0]", compose(g, f), want);
              }
              if (err.empty() && !fixes_origin(compose(f, g))) {
                err = "composite does not fix (0,0)";
              }
              for (auto const& x : elts) {
                if (!err.empty()) {
                  break;
                }
                err = prefix("at " + to_string(x),
                             expect_eq("pointwise composite",
                                       apply(f, apply(g, x)),
                                       apply(want, x)));
              }
              return err;
            },
            [&] { return std::vector<Value>{f, g}; });
        if (!ok) {
          return sweep.report();
        }
      }
    }
    return sweep.report();
  }

  VerificationReport check_units(Domain d, Window const& w) {
    validate(w);
    Sweep      sweep("units", w);
    auto const box = window_endos(d, w.param_bound);
    Endo const id  = identity_endo(d);
    for (auto const& phi : box) {
      bool const ok = sweep.step(
          [&]() -> std::string {
            std::optional<Endo> found;
            for (auto const& psi : box) {
              if (compose(phi, psi) == id && compose(psi, phi) == id) {
                found = psi;
                break;
              }
            }
            bool const expected = d == Domain::omega
                                      ? (phi.k() == 1 && phi.a() == 0)
                                      : phi.k() == 1;
            if (found.has_value() != expected) {
              return found ? "unexpected unit with inverse " + to_string(*found)
                           : std::string("expected unit has no inverse in box");
            }
            if (is_automorphism(phi) != expected) {
              return "is_automorphism disagrees with the inverse search";
            }
            if (found) {
              return expect_eq("invert_automorphism",
                               invert_automorphism(phi),
                               *found);
            }
            return {};
          },
          [&] { return std::vector<Value>{phi}; });
      if (!ok) {
        return sweep.report();
      }
    }
    if (d == Domain::zed) {
      for (Int a = -w.param_bound; a <= w.param_bound; ++a) {
        for (Int b = -w.param_bound; b <= w.param_bound; ++b) {
          Endo const f(1, a, d);
          Endo const g(1, b, d);
          bool const ok = sweep.step(
              [&] {
                return expect_eq("e[1,a]e[1,b]", compose(f, g), Endo(1, a + b, d));
              },
              [&] { return std::vector<Value>{f, g}; });
          if (!ok) {
            return sweep.report();
          }
        }
      }
    }
    return sweep.report();
  }

  VerificationReport check_embeddings(Window const& w, MultiplyFn mul) {
    validate(w);
    Sweep      sweep("lemma-3.2", w);
    auto const grid = window_elements(Domain::omega, w.element_bound);
    Int const  top  = w.element_bound - 1;
    for (Int k = 1; k <= w.param_bound; ++k) {
      for (Int a = -w.param_bound; a <= w.param_bound; ++a) {
        bool ok = sweep.step(
            [&]() -> std::string {
              std::set<Element> image;
              for (auto const& x : grid) {
                image.insert(apply_embedding(a, k, x));
              }
              if (image.size() != grid.size()) {
                return "not injective on the window";
              }
              // Independent description of the image: pairs in the box
              // [a, a + k top]^2 whose coordinates are congruent to a mod k.
              std::set<Element> lattice;
              for (Int x = a; x <= a + k * top; ++x) {
                for (Int y = a; y <= a + k * top; ++y) {
                  if ((x - a) % k == 0 && (y - a) % k == 0) {
                    lattice.emplace(x, y, Domain::zed);
                  }
                }
              }
              if (image != lattice) {
                return "image is not {(km+a, kn+a)}";
              }
              return {};
            },
            [&] { return std::vector<Value>{a, k}; });
        if (!ok) {
          return sweep.report();
        }
        for (auto const& x : grid) {
          for (auto const& y : grid) {
            ok = sweep.step(
                [&] {
                  return expect_eq("embedding of product",
                                   apply_embedding(a, k, mul(x, y)),
                                   mul(apply_embedding(a, k, x),
                                       apply_embedding(a, k, y)));
                },
                [&] { return std::vector<Value>{a, k, x, y}; });
            if (!ok) {
              return sweep.report();
            }
          }
        }
      }
    }
    return sweep.report();
  }

  VerificationReport check_lemma_3_3_steps(Window const& w, MultiplyFn mul) {
    validate(w);
    Sweep        sweep("lemma-3.3", w);
    Domain const z = Domain::zed;
    for (Int k = 1; k <= w.param_bound; ++k) {
      for (Int p = 0; p < w.element_bound; ++p) {
        Endo const phi(k, 0, z);
        bool const ok = sweep.step(
            [&]() -> std::string {
              Element const low_p(-p - 1, -p, z);   // (-p-1, -p)
              Element const p_low(-p, -p - 1, z);   // (-p, -p-1)
              Element const diag(-p, -p, z);
              Element const low_diag(-p - 1, -p - 1, z);
              std::string   err;
              err = expect_eq("(-p-1,-p)(-p,-p-1)",
                              mul(low_p, p_low),
                              low_diag);
              if (err.empty()) {
                err = expect_eq("(-p,-p-1)(-p-1,-p)", mul(p_low, low_p), diag);
              }
              if (err.empty()) {
                err = expect_eq("(-p,-p)(-p-1,-p)",
                                mul(diag, low_p),
                                Element(-p, -p + 1, z));
              }
              if (!err.empty()) {
                return err;
              }
              // The image of (-(p+1), -(p+1)) is (s, s) strictly above the
              // image (-kp, -kp) of (-p, -p) in the natural order.
              Element const top = apply(phi, low_diag);
              Int const     s   = top.i();
              Element const below(-k * p, -k * p, z);
              if (!is_idempotent(top) || !leq_natural(below, top)
                  || below == top || !(s < -k * p)) {
                return "image of (-p-1,-p-1) is not an idempotent (s,s) with "
                       "s < -kp";
              }
              err = expect_eq("image of (-p-1,-p)",
                              apply(phi, low_p),
                              Element(s, -k * p, z));
              if (err.empty()) {
                err = expect_eq("image of (-p,-p-1)",
                                apply(phi, p_low),
                                Element(-k * p, s, z));
              }
              if (!err.empty()) {
                return err;
              }
              // (-kp,-kp)(s,-kp) = (-kp, -2kp - s) must equal the image
              // (-kp, -kp + k) of (-p, -p+1); solving gives s = -k(p+1).
              Element const lhs = mul(below, Element(s, -k * p, z));
              err = expect_eq("(-kp,-kp)(s,-kp)",
                              lhs,
                              Element(-k * p, -2 * k * p - s, z));
              if (err.empty()) {
                err = expect_eq("image of (-p,-p+1)",
                                apply(phi, Element(-p, -p + 1, z)),
                                lhs);
              }
              if (err.empty()) {
                Int const solved = -k * p - k * p - (-k * p + k);
                if (solved != s || s != -k * (p + 1)) {
                  return "forced value s = " + std::to_string(solved)
                         + " differs from -k(p+1) = "
                         + std::to_string(-k * (p + 1));
                }
              }
              // Extension to (-p-1, -q) and (-q, -p-1) for q < p + 1.
              for (Int q = 0; err.empty() && q <= p; ++q) {
                err = expect_eq("(-p-1,-p)(-p,-q)",
                                mul(low_p, Element(-p, -q, z)),
                                Element(-p - 1, -q, z));
                if (err.empty()) {
                  err = expect_eq("(-q,-p)(-p,-p-1)",
                                  mul(Element(-q, -p, z), p_low),
                                  Element(-q, -p - 1, z));
                }
                if (err.empty()) {
                  err = expect_eq("image of (-p-1,-q)",
                                  mul(apply(phi, low_p),
                                      apply(phi, Element(-p, -q, z))),
                                  Element(-k * p - k, -k * q, z));
                }
                if (err.empty()) {
                  err = expect_eq("image of (-q,-p-1)",
                                  mul(apply(phi, Element(-q, -p, z)),
                                      apply(phi, p_low)),
                                  Element(-k * q, -k * p - k, z));
                }
              }
              return err;
            },
            [&] { return std::vector<Value>{k, p}; });
        if (!ok) {
          return sweep.report();
        }
      }
    }
    return sweep.report();
  }

  VerificationReport check_endo_reduction(Window const& w) {
    validate(w);
    Sweep        sweep("prop-3.5", w);
    Domain const z    = Domain::zed;
    auto const   elts = window_elements(z, w.element_bound);
    for (auto const& phi : window_endos(z, w.param_bound)) {
      bool const ok = sweep.step(
          [&]() -> std::string {
            Endo const shift_back(1, -phi.a(), z);
            Endo const shift(1, phi.a(), z);
            if (!is_automorphism(shift_back)
                || compose(shift, shift_back) != identity_endo(z)
                || compose(shift_back, shift) != identity_endo(z)) {
              return "e[1,-a] is not a unit";
            }
            // phi first, then e[1,-a].
            Endo const reduced = compose(shift_back, phi);
            if (apply(reduced, Element(0, 0, z)) != Element(0, 0, z)) {
              return "reduced map does not fix (0,0)";
            }
            Int const k = apply(reduced, Element(1, 1, z)).i();
            if (k < 0) {
              return "reduced map sends (1,1) below (0,0) in the wrong direction";
            }
            Endo const scaled(k, 0, z);
            for (auto const& x : elts) {
              auto err = prefix("at " + to_string(x),
                                expect_eq("reduced map vs e[k,0]",
                                          apply(reduced, x),
                                          apply(scaled, x)));
              if (err.empty()) {
                err = prefix("at " + to_string(x),
                             expect_eq("e[1,a] e[k,0] vs phi",
                                       apply(shift, apply(scaled, x)),
                                       apply(phi, x)));
              }
              if (!err.empty()) {
                return err;
              }
            }
            return {};
          },
          [&] { return std::vector<Value>{phi}; });
      if (!ok) {
        break;
      }
    }
    sweep.note(
        "Only the reduction steps are checked, on members of the e[k,a] "
        "family; that no other self-map of B_Z is an endomorphism is not "
        "finitely checkable.");
    return sweep.report();
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // The extension of a generator assignment to (m, n) with m, n < limit,
    // as (1,0)^m (0,1)(1,0) (0,1)^n.
    class Extension {
     public:
      Extension(Element of_p, Element of_q, Int limit, MultiplyFn mul)
          : _limit(limit), _images() {
        Element const unit = mul(of_p, of_q);
        std::vector<Element> q_pow{unit};  // placeholder at index 0
        std::vector<Element> p_pow{unit};
        for (Int m = 1; m < limit; ++m) {
          q_pow.push_back(m == 1 ? of_q : mul(q_pow.back(), of_q));
          p_pow.push_back(m == 1 ? of_p : mul(p_pow.back(), of_p));
        }
        _images.reserve(static_cast<std::size_t>(limit * limit));
        for (Int m = 0; m < limit; ++m) {
          Element const left = m == 0 ? unit : mul(q_pow[m], unit);
          for (Int n = 0; n < limit; ++n) {
            _images.push_back(n == 0 ? left : mul(left, p_pow[n]));
          }
        }
      }

      Element const& operator()(Element const& x) const {
        if (x.i() >= _limit || x.j() >= _limit) {
          throw Error("element " + to_string(x) + " outside the extension");
        }
        return _images[static_cast<std::size_t>(x.i() * _limit + x.j())];
      }

     private:
      Int                  _limit;
      std::vector<Element> _images;
    };

    Classification classify(Window const&          w,
                            ClassifyOptions const& opts,
                            bool                   monoid) {
      validate(w);
      MultiplyFn const mul    = opts.mul;
      auto const       elts   = window_elements(Domain::omega, w.element_bound);
      // Products of window elements have coordinates below 2 * bound.
      Int const        limit  = 2 * w.element_bound;
      Classification   result;

      auto try_candidate = [&](Element const& of_p, Element const& of_q) {
        ++result.candidates;
        try {
          if (monoid && mul(of_p, of_q) != Element(0, 0)) {
            ++result.cases_checked;
            return;
          }
          Extension const image(of_p, of_q, limit, mul);
          // The extension must send the generators to their assigned images.
          ++result.cases_checked;
          if (image(Element(0, 1)) != of_p || image(Element(1, 0)) != of_q) {
            return;
          }
          for (auto const& x : elts) {
            for (auto const& y : elts) {
              ++result.cases_checked;
              if (image(mul(x, y)) != mul(image(x), image(y))) {
                return;
              }
            }
          }
          // Survivor: is it e[k,a] with a = i, k = j - i?
          bool matches = of_p.i() <= of_p.j() && of_q == inverse(of_p);
          if (matches) {
            Endo const phi(of_p.j() - of_p.i(), of_p.i());
            for (auto const& x : elts) {
              if (image(x) != apply(phi, x)) {
                matches = false;
                break;
              }
            }
            if (matches) {
              result.endos.push_back(phi);
              return;
            }
          }
          result.anomalies.push_back(GeneratorImages{of_p, of_q});
        } catch (std::exception const&) {
          // A product that cannot be formed rejects the candidate.
        }
      };

      for (auto const& of_p : elts) {
        if (opts.unconstrained) {
          for (auto const& of_q : elts) {
            try_candidate(of_p, of_q);
          }
        } else {
          try_candidate(of_p, inverse(of_p));
        }
      }
      std::sort(result.endos.begin(), result.endos.end());
      return result;
    }

  }  // namespace

  Classification classify_semigroup_endos(Window const&          w,
                                          ClassifyOptions const& opts) {
    return classify(w, opts, false);
  }

  Classification classify_monoid_endos(Window const&          w,
                                       ClassifyOptions const& opts) {
    return classify(w, opts, true);
  }

  std::vector<Endo> expected_semigroup_endos(Int element_bound) {
    std::vector<Endo> out;
    for (Int k = 0; k < element_bound; ++k) {
      for (Int a = 0; a + k < element_bound; ++a) {
        out.emplace_back(k, a);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Endo> expected_monoid_endos(Int element_bound) {
    std::vector<Endo> out;
    for (Int k = 0; k < element_bound; ++k) {
      out.emplace_back(k, 0);
    }
    return out;
  }

  std::vector<std::vector<Endo>>
  induced_composition_table(std::vector<Endo> const& survivors,
                            Window const&            w) {
    auto const elts = window_elements(Domain::omega, w.element_bound);
    std::vector<std::vector<Endo>> table;
    for (auto const& f : survivors) {
      auto& row = table.emplace_back();
      for (auto const& g : survivors) {
        auto composite = [&](Element const& x) { return apply(f, apply(g, x)); };
        Element const gen = composite(Element(0, 1));
        if (gen.i() > gen.j()) {
          throw Error("composite sends (0,1) to " + to_string(gen));
        }
        Endo const phi(gen.j() - gen.i(), gen.i());
        for (auto const& x : elts) {
          if (composite(x) != apply(phi, x)) {
            throw Error("composite of " + to_string(f) + " and " + to_string(g)
                        + " is not " + to_string(phi) + " at " + to_string(x));
          }
        }
        row.push_back(phi);
      }
    }
    return table;
  }

  VerificationReport check_classification(EndoKind               kind,
                                          Window const&          w,
                                          ClassifyOptions const& opts) {
    bool const  monoid = kind == EndoKind::monoid;
    auto const  found  = monoid ? classify_monoid_endos(w, opts)
                                : classify_semigroup_endos(w, opts);
    auto const  want   = monoid ? expected_monoid_endos(w.element_bound)
                                : expected_semigroup_endos(w.element_bound);
    Sweep sweep(monoid ? "lemma-2.3" : "prop-2.5", w);
    std::vector<Value> culprit;
    sweep.step(
        [&]() -> std::string {
          if (!found.anomalies.empty()) {
            auto const& g = found.anomalies.front();
            culprit       = {g.of_p, g.of_q};
            return "surviving assignment (0,1) -> " + to_string(g.of_p)
                   + ", (1,0) -> " + to_string(g.of_q)
                   + " is not of the form e[k,a]";
          }
          for (auto const& phi : want) {
            if (!std::binary_search(found.endos.begin(), found.endos.end(), phi)) {
              culprit = {phi};
              return "expected " + to_string(phi) + " was rejected";
            }
          }
          for (auto const& phi : found.endos) {
            if (!std::binary_search(want.begin(), want.end(), phi)) {
              culprit = {phi};
              return "unexpected survivor " + to_string(phi);
            }
          }
          return {};
        },
        [&] { return culprit; });
    auto report = sweep.report();
    report.cases_checked += found.cases_checked;
    if (!report.passed() || !monoid) {
      return report;
    }

    Sweep table_sweep("thm-2.4", w);
    auto const table = induced_composition_table(found.endos, w);
    for (std::size_t r = 0; r < found.endos.size(); ++r) {
      for (std::size_t c = 0; c < found.endos.size(); ++c) {
        Endo const& f  = found.endos[r];
        Endo const& g  = found.endos[c];
        bool const  ok = table_sweep.step(
            [&] {
              return expect_eq("composite", table[r][c], Endo(f.k() * g.k(), 0));
            },
            [&] { return std::vector<Value>{f, g}; });
        if (!ok) {
          break;
        }
      }
    }
    return merge(report.claim, {report, table_sweep.report()});
  }

  ////////////////////////////////////////////////////////////////////////
  // Semidirect products
  ////////////////////////////////////////////////////////////////////////

  VerificationReport check_semidirect_iso(Domain        d,
                                          Window const& w,
                                          bool          reversed_composition) {
    validate(w);
    Sweep      sweep(d == Domain::omega ? "thm-2.6" : "thm-3.6", w);
    auto const box  = window_endos(d, w.param_bound);
    auto const elts = window_elements(d, w.element_bound);

    std::set<std::pair<Int, Int>> seen;
    for (auto const& phi : box) {
      bool const ok = sweep.step(
          [&]() -> std::string {
            SdElement const s = iso_to_sd(phi);
            if (!seen.emplace(s.a(), s.k()).second) {
              return "iso_to_sd is not injective";
            }
            auto err = expect_eq("iso_from_sd(iso_to_sd)", iso_from_sd(s), phi);
            if (err.empty()) {
              SdElement const t(phi.a(), phi.k(), d);
              err = expect_eq("iso_to_sd(iso_from_sd)", iso_to_sd(iso_from_sd(t)), t);
            }
            return err;
          },
          [&] { return std::vector<Value>{phi}; });
      if (!ok) {
        return sweep.report();
      }
    }
    for (auto const& phi : box) {
      for (auto const& psi : box) {
        bool const ok = sweep.step(
            [&]() -> std::string {
              SdElement const lhs = reversed_composition
                                        ? reversed_composition_image(phi, psi)
                                        : iso_to_sd(compose(phi, psi));
              auto err = expect_eq("homomorphism law",
                                   lhs,
                                   sd_multiply(iso_to_sd(phi), iso_to_sd(psi)));
              if (!err.empty()) {
                return err;
              }
              Endo const both = compose(phi, psi);
              for (auto const& x : elts) {
                err = prefix("at " + to_string(x),
                             expect_eq("compose vs apply after apply",
                                       apply(both, x),
                                       apply(phi, apply(psi, x))));
                if (!err.empty()) {
                  break;
                }
              }
              return err;
            },
            [&] { return std::vector<Value>{phi, psi}; });
        if (!ok) {
          return sweep.report();
        }
      }
    }
    return sweep.report();
  }

  VerificationReport check_sd_action(Domain d, Window const& w) {
    validate(w);
    Sweep     sweep("sd-action", w);
    Int const lo = lowest_shift(d, w.param_bound);
    for (Int k1 = 0; k1 <= w.param_bound; ++k1) {
      for (Int k2 = 0; k2 <= w.param_bound; ++k2) {
        for (Int n = lo; n <= w.param_bound; ++n) {
          for (Int m = lo; m <= w.param_bound; ++m) {
            bool const ok = sweep.step(
                [&]() -> std::string {
                  if (sd_action(k1, n + m)
                      != sd_action(k1, n) + sd_action(k1, m)) {
                    return "action is not additive";
                  }
                  if (sd_action(k1 * k2, n) != sd_action(k1, sd_action(k2, n))) {
                    return "action is not multiplicative in k";
                  }
                  return {};
                },
                [&] { return std::vector<Value>{k1, k2, n, m}; });
            if (!ok) {
              return sweep.report();
            }
          }
        }
      }
    }
    return sweep.report();
  }

  SdElement reversed_composition_image(Endo const& phi, Endo const& psi) {
    return iso_to_sd(compose(psi, phi));
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> random_words(WordSweep const& sweep) {
    std::mt19937_64                            gen(sweep.seed);
    std::uniform_int_distribution<std::size_t> length(0, sweep.max_length);
    std::bernoulli_distribution                coin(0.5);
    std::vector<Word>                          out;
    out.reserve(sweep.count);
    for (std::size_t n = 0; n < sweep.count; ++n) {
      Word w(length(gen));
      for (auto& l : w) {
        l = coin(gen) ? Letter::p : Letter::q;
      }
      out.push_back(std::move(w));
    }
    return out;
  }

  VerificationReport check_words(Window const&    w,
                                 WordSweep const& sweep_params,
                                 MultiplyFn       mul) {
    validate(w);
    Sweep sweep("words-iso", w);
    for (auto const& word : random_words(sweep_params)) {
      bool const ok = sweep.step(
          [&]() -> std::string {
            NormalForm const nf = normalize(word);
            auto err = expect_eq("fold of letters vs normal form",
                                 word_to_element(word, mul),
                                 to_element(nf));
            if (err.empty()) {
              err = expect_eq("leftmost-first deletion",
                              to_element(reduce_by_deletion(
                                  word, DeletionOrder::leftmost)),
                              to_element(nf));
            }
            if (err.empty()) {
              err = expect_eq("rightmost-first deletion",
                              to_element(reduce_by_deletion(
                                  word, DeletionOrder::rightmost)),
                              to_element(nf));
            }
            if (err.empty()) {
              auto const mid = word.begin() + static_cast<std::ptrdiff_t>(word.size() / 2);
              Word const u(word.begin(), mid);
              Word const v(mid, word.end());
              err = expect_eq("fold of concatenation",
                              word_to_element(word, mul),
                              mul(word_to_element(u, mul), word_to_element(v, mul)));
            }
            return err;
          },
          [&] { return std::vector<Value>{word}; });
      if (!ok) {
        return sweep.report();
      }
    }
    for (auto const& x : window_elements(Domain::omega, w.element_bound)) {
      bool const ok = sweep.step(
          [&] {
            return expect_eq("normal form of element word",
                             to_element(normalize(element_to_word(x))),
                             x);
          },
          [&] { return std::vector<Value>{x}; });
      if (!ok) {
        return sweep.report();
      }
    }
    sweep.note(std::to_string(sweep_params.count) + " random words of length <= "
               + std::to_string(sweep_params.max_length) + ", seed "
               + std::to_string(sweep_params.seed) + ".");
    return sweep.report();
  }

}  // namespace bicyclic
