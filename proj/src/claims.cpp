#include <functional>

#include "bicyclic/oracle.hpp"

namespace bicyclic {

  namespace {

    VerificationReport labelled(VerificationReport r, Domain d) {
      if (r.counterexample) {
        r.counterexample->detail = (d == Domain::omega ? "B_omega: " : "B_Z: ")
                                   + r.counterexample->detail;
      }
      return r;
    }

    template <typename F>
    VerificationReport both(std::string claim, F&& check) {
      return merge(std::move(claim),
                   {labelled(check(Domain::omega), Domain::omega),
                    labelled(check(Domain::zed), Domain::zed)});
    }

    using Runner = std::function<VerificationReport(Window const&,
                                                    ClaimOptions const&)>;

    std::vector<std::pair<std::string_view, Runner>> const& registry() {
      static std::vector<std::pair<std::string_view, Runner>> const claims = {
          {"eq-1.1-assoc",
           [](Window const& w, ClaimOptions const& o) {
             return both("eq-1.1-assoc", [&](Domain d) {
               return check_associativity(d, w, o.mul);
             });
           }},
          {"lemma-2.1",
           [](Window const& w, ClaimOptions const& o) {
             return check_endo_family(Domain::omega, w, o.mul);
           }},
          {"cor-2.2",
           [](Window const& w, ClaimOptions const& o) {
             return check_monoid_endo_family(w, o.mul);
           }},
          {"lemma-2.3",
           [](Window const& w, ClaimOptions const& o) {
             auto r  = check_classification(EndoKind::monoid, w, {false, o.mul});
             r.claim = "lemma-2.3";
             return r;
           }},
          {"thm-2.4",
           [](Window const& w, ClaimOptions const& o) {
             auto r  = check_classification(EndoKind::monoid, w, {false, o.mul});
             r.claim = "thm-2.4";
             return r;
           }},
          {"prop-2.5",
           [](Window const& w, ClaimOptions const& o) {
             return merge(
                 "prop-2.5",
                 {check_classification(EndoKind::semigroup, w, {false, o.mul}),
                  check_classification(EndoKind::semigroup, w, {true, o.mul})});
           }},
          {"thm-2.6",
           [](Window const& w, ClaimOptions const&) {
             return merge("thm-2.6",
                          {check_semidirect_iso(Domain::omega, w),
                           check_sd_action(Domain::omega, w)});
           }},
          {"lemma-3.1",
           [](Window const& w, ClaimOptions const& o) {
             return check_endo_family(Domain::zed, w, o.mul);
           }},
          {"lemma-3.2",
           [](Window const& w, ClaimOptions const& o) {
             return check_embeddings(w, o.mul);
           }},
          {"lemma-3.3",
           [](Window const& w, ClaimOptions const& o) {
             return check_lemma_3_3_steps(w, o.mul);
           }},
          {"thm-3.4",
           [](Window const& w, ClaimOptions const&) {
             return check_origin_fixing_composition(w);
           }},
          {"prop-3.5",
           [](Window const& w, ClaimOptions const& o) {
             return merge("prop-3.5",
                          {check_endo_reduction(w),
                           check_units(Domain::zed, w),
                           check_lemma_3_3_steps(w, o.mul),
                           check_endo_family(Domain::zed,
                                             w,
                                             o.mul,
                                             EndoSlice::origin_fixing)});
           }},
          {"thm-3.6",
           [](Window const& w, ClaimOptions const&) {
             return merge("thm-3.6",
                          {check_semidirect_iso(Domain::zed, w),
                           check_sd_action(Domain::zed, w)});
           }},
          {"order-closed-form",
           [](Window const& w, ClaimOptions const& o) {
             return both("order-closed-form", [&](Domain d) {
               return merge("order-closed-form",
                            {check_order_closed_form(d, w, o.witness_bound, o.mul),
                             check_order_preservation(d, w)});
             });
           }},
          {"powers",
           [](Window const& w, ClaimOptions const& o) {
             return both("powers",
                         [&](Domain d) { return check_powers(d, w, o.mul); });
           }},
          {"units",
           [](Window const& w, ClaimOptions const&) {
             return both("units", [&](Domain d) { return check_units(d, w); });
           }},
          {"words-iso",
           [](Window const& w, ClaimOptions const& o) {
             return check_words(w, o.words, o.mul);
           }},
      };
      return claims;
    }

  }  // namespace

  std::vector<std::string_view> const& claim_ids() {
    static std::vector<std::string_view> const ids = [] {
      std::vector<std::string_view> out;
      for (auto const& entry : registry()) {
        out.push_back(entry.first);
      }
      return out;
    }();
    return ids;
  }

  VerificationReport verify_claim(std::string_view    id,
                                  Window const&       w,
                                  ClaimOptions const& opts) {
    validate(w);
    for (auto const& [name, run] : registry()) {
      if (name == id) {
        auto report  = run(w, opts);
        report.claim = std::string(name);
        report.window = w;
        return report;
      }
    }
    throw PreconditionError("unknown claim \"" + std::string(id) + "\"");
  }

}  // namespace bicyclic
