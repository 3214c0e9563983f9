// Brute-force verification of the algebraic claims about B_omega, B_Z, their
// endomorphisms and the semidirect products, on finite windows.
//
// A pass verdict means "no counterexample inside the window"; every report
// carries the window it was computed on. Sweeps are deterministic and stop at
// the first counterexample in scan order. Checks that multiply elements take
// the product as a parameter so they can be run against a corrupted product.

#ifndef BICYCLIC_ORACLE_HPP_
#define BICYCLIC_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bicyclic/core.hpp"
#include "bicyclic/endo.hpp"
#include "bicyclic/semidirect.hpp"
#include "bicyclic/words.hpp"

namespace bicyclic {

  // Element coordinates range over [0, element_bound) in B_omega and over
  // [-element_bound, element_bound] in B_Z. Endomorphism parameters satisfy
  // 0 <= k <= param_bound and |a| <= param_bound (a >= 0 in B_omega).
  // Exponents range over [1, power_bound].
  struct Window {
    Int element_bound = 8;
    Int param_bound   = 8;
    Int power_bound   = 10;

    bool operator==(Window const&) const = default;
  };

  // Throws PreconditionError if a bound is < 1.
  void validate(Window const& w);

  std::vector<Element> window_elements(Domain d, Int element_bound);
  std::vector<Endo>    window_endos(Domain d, Int param_bound);

  using Value = std::variant<Element, Endo, SdElement, Int, Word>;

  std::string to_string(Value const& v);

  struct Counterexample {
    std::vector<Value> inputs;
    std::string        detail;
  };

  struct VerificationReport {
    std::string                   claim;
    std::optional<Counterexample> counterexample;
    std::uint64_t                 cases_checked = 0;
    Window                        window;
    std::string                   note;

    bool passed() const noexcept {
      return !counterexample.has_value();
    }
  };

  // Concatenates sweeps into one report for `claim`: cases are summed, the
  // first counterexample wins, notes are joined.
  VerificationReport merge(std::string                            claim,
                           std::vector<VerificationReport> const& parts);

  ////////////////////////////////////////////////////////////////////////
  // Element arithmetic
  ////////////////////////////////////////////////////////////////////////

  // (xy)z = x(yz) for all window triples.
  VerificationReport check_associativity(Domain        d,
                                         Window const& w,
                                         MultiplyFn    mul = multiply);

  // power agrees with repeated multiplication and with the closed forms
  // (k+a,a)^n = (kn+a,a), (a,k+a)^n = (a,kn+a).
  VerificationReport check_powers(Domain        d,
                                  Window const& w,
                                  MultiplyFn    mul = multiply);

  // leq_natural agrees with the existential witness search on all window
  // pairs, and restricted to idempotents it is (a,a) <= (b,b) iff a >= b.
  // `witness_bound` defaults to the smallest complete bound; a smaller value
  // throws PreconditionError.
  VerificationReport
  check_order_closed_form(Domain             d,
                          Window const&      w,
                          std::optional<Int> witness_bound = std::nullopt,
                          MultiplyFn         mul           = multiply);

  // Every endomorphism in the parameter box preserves the natural order and
  // inverses.
  VerificationReport check_order_preservation(Domain d, Window const& w);

  // The three checks above, merged.
  VerificationReport check_order_and_powers(Domain        d,
                                            Window const& w,
                                            MultiplyFn    mul = multiply);

  // Smallest witness bound for which check_order_closed_form is complete.
  Int required_witness_bound(Domain d, Window const& w);

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms
  ////////////////////////////////////////////////////////////////////////

  enum class EndoSlice { all, origin_fixing, annihilating };

  // e[k,a](xy) = e[k,a](x) e[k,a](y) for all box parameters (restricted to
  // `slice`) and window pairs.
  VerificationReport check_endo_family(Domain        d,
                                       Window const& w,
                                       MultiplyFn    mul   = multiply,
                                       EndoSlice     slice = EndoSlice::all);

  // Every e[k,0] is a homomorphism that fixes the identity of B_omega.
  VerificationReport check_monoid_endo_family(Window const& w,
                                              MultiplyFn    mul = multiply);

  // On B_Z, e[k1,0] e[k2,0] = e[k1 k2,0] = e[k2,0] e[k1,0] for
  // k1, k2 <= param_bound, both as parameters and pointwise on the window.
  VerificationReport check_origin_fixing_composition(Window const& w);

  // Endomorphisms with a two-sided compose-inverse inside the box, found by
  // search, are exactly e[1,0] (B_omega) or every e[1,a] (B_Z); they agree
  // with is_automorphism and invert_automorphism, and on B_Z
  // e[1,a] e[1,b] = e[1,a+b].
  VerificationReport check_units(Domain d, Window const& w);

  // (m,n) -> (km+a, kn+a) for 1 <= k <= param_bound, |a| <= param_bound is
  // injective on the B_omega window, a homomorphism into B_Z, and its image
  // is the set of pairs >= (a,a) congruent to a modulo k.
  VerificationReport check_embeddings(Window const& w,
                                      MultiplyFn    mul = multiply);

  // The product identities and the forced value s = -k(p+1) from the
  // inductive step describing (0,0)-endomorphisms of B_Z, for
  // 1 <= k <= param_bound and 0 <= p < element_bound.
  VerificationReport check_lemma_3_3_steps(Window const& w,
                                           MultiplyFn    mul = multiply);

  // The reduction of an arbitrary e[k,a] on B_Z to an origin-fixing one:
  // e[1,-a] is a unit, composing with it fixes (0,0), the composite is
  // e[k,0] pointwise, and composing back with e[1,a] recovers e[k,a].
  // Covers only members of the family; the note says so.
  VerificationReport check_endo_reduction(Window const& w);

  ////////////////////////////////////////////////////////////////////////
  // Classification by generator images (B_omega only)
  ////////////////////////////////////////////////////////////////////////

  struct GeneratorImages {
    Element of_p;  // image of (0,1)
    Element of_q;  // image of (1,0)
  };

  struct ClassifyOptions {
    // Search the image of (1,0) independently instead of forcing it to the
    // inverse of the image of (0,1).
    bool       unconstrained = false;
    MultiplyFn mul           = multiply;
  };

  struct Classification {
    // Surviving assignments that coincide with some e[k,a], sorted.
    std::vector<Endo> endos;
    // Surviving assignments that do not; empty when the classification holds.
    std::vector<GeneratorImages> anomalies;
    std::uint64_t                candidates    = 0;
    std::uint64_t                cases_checked = 0;
  };

  // Candidate images of (0,1) range over the window. Each assignment is
  // extended to (m,n) = (1,0)^m (0,1)(1,0) (0,1)^n and kept if it is a
  // homomorphism on all window pairs.
  Classification classify_semigroup_endos(Window const&          w,
                                          ClassifyOptions const& opts = {});

  // As above with the extra requirement that (0,0) is fixed.
  Classification classify_monoid_endos(Window const&          w,
                                       ClassifyOptions const& opts = {});

  // {e[k,a] : a, k >= 0, a + k < element_bound}
  std::vector<Endo> expected_semigroup_endos(Int element_bound);
  // {e[k,0] : 0 <= k < element_bound}
  std::vector<Endo> expected_monoid_endos(Int element_bound);

  // table[r][c] is the composite "column first, then row" of survivors r and
  // c, identified pointwise on the window from the image of (0,1). Throws
  // Error if a composite is not an e[k,a] on the window.
  std::vector<std::vector<Endo>>
  induced_composition_table(std::vector<Endo> const& survivors,
                            Window const&            w);

  enum class EndoKind { monoid, semigroup };

  // Runs the classification and compares it with the expected family; for
  // the monoid kind also compares the induced composition table with
  // multiplication of the k's.
  VerificationReport check_classification(EndoKind               kind,
                                          Window const&          w,
                                          ClassifyOptions const& opts = {});

  ////////////////////////////////////////////////////////////////////////
  // Semidirect products
  ////////////////////////////////////////////////////////////////////////

  // iso_to_sd(compose(phi, psi)) = sd_multiply(iso_to_sd(phi), iso_to_sd(psi))
  // on the parameter box, iso_to_sd/iso_from_sd are mutually inverse, and
  // compose agrees pointwise with applying psi then phi on the element
  // window. With `reversed_composition` the left side uses compose(psi, phi).
  VerificationReport check_semidirect_iso(Domain        d,
                                          Window const& w,
                                          bool reversed_composition = false);

  // Action laws of n -> kn: additive in n, multiplicative in k.
  VerificationReport check_sd_action(Domain d, Window const& w);

  // iso_to_sd(compose(psi, phi)): the value the homomorphism law would need
  // under the opposite composition convention.
  SdElement reversed_composition_image(Endo const& phi, Endo const& psi);

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  struct WordSweep {
    std::uint64_t seed       = 20260101;
    std::size_t   count      = 10000;
    std::size_t   max_length = 30;
  };

  std::vector<Word> random_words(WordSweep const& sweep);

  // For every random word: normalize agrees with folding `mul` over the
  // letters, leftmost-first and rightmost-first deletion agree with
  // normalize, and splitting the word is a homomorphism. For every window
  // element x of B_omega: normalize(element_to_word(x)) = x.
  VerificationReport check_words(Window const&    w,
                                 WordSweep const& sweep = {},
                                 MultiplyFn       mul   = multiply);

  ////////////////////////////////////////////////////////////////////////
  // Claims
  ////////////////////////////////////////////////////////////////////////

  // Identifiers accepted by verify_claim, in the order "all" runs them.
  std::vector<std::string_view> const& claim_ids();

  struct ClaimOptions {
    MultiplyFn mul = multiply;
    // Passed to check_order_closed_form.
    std::optional<Int> witness_bound;
    WordSweep          words;
  };

  // Runs the oracles behind one claim and merges them into a single report.
  // Throws PreconditionError for an unknown identifier or a window that is
  // too small for the requested check.
  VerificationReport verify_claim(std::string_view    id,
                                  Window const&       w,
                                  ClaimOptions const& opts = {});

}  // namespace bicyclic

#endif  // BICYCLIC_ORACLE_HPP_
