// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bicyclic/oracle.hpp"

using namespace bicyclic;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& why) {
      if (!ok) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + why;
      }
    }

    void require(VerificationReport const& r, std::string const& label) {
      cases += r.cases_checked;
      if (!r.passed()) {
        std::string inputs;
        for (auto const& v : r.counterexample->inputs) {
          inputs += (inputs.empty() ? "" : " ") + to_string(v);
        }
        require(false,
                label + ": counterexample " + inputs + " ("
                    + r.counterexample->detail + ")");
      }
    }

    std::uint64_t cases = 0;
  };

  struct Criterion {
    int                      number;
    std::string              title;
    double                   budget_seconds;  // 0 means unbudgeted
    std::function<Outcome()> body;
  };

  Window window(Int elements, Int params, Int powers = 10) {
    return Window{elements, params, powers};
  }

  Outcome associativity(MultiplyFn mul) {
    Outcome o;
    o.require(check_associativity(Domain::omega, window(12, 1), mul), "B_omega");
    o.require(check_associativity(Domain::zed, window(6, 1), mul), "B_Z");
    return o;
  }

  Outcome endo_family(MultiplyFn mul) {
    Outcome o;
    o.require(check_endo_family(Domain::omega, window(10, 8), mul), "B_omega");
    o.require(check_endo_family(Domain::zed, window(5, 8), mul), "B_Z");
    return o;
  }

  Outcome words(MultiplyFn mul) {
    Outcome o;
    o.require(check_words(window(8, 1), WordSweep{20260101, 10000, 30}, mul),
              "words");
    return o;
  }

  Outcome monoid_classification() {
    Outcome              o;
    Window const         w      = window(8, 1);
    Classification const result = classify_monoid_endos(w);
    o.cases += result.cases_checked;
    o.require(result.endos == expected_monoid_endos(8),
              "survivors differ from {e[k,0] : k < 8}");
    o.require(result.anomalies.empty(), "assignments outside the family survive");
    auto const table = induced_composition_table(result.endos, w);
    bool       table_ok = table.size() == 8;
    for (std::size_t r = 0; table_ok && r < table.size(); ++r) {
      table_ok = table[r].size() == 8;
      for (std::size_t c = 0; table_ok && c < table[r].size(); ++c) {
        table_ok = table[r][c] == Endo(static_cast<Int>(r * c), 0);
      }
    }
    o.require(table_ok, "composition table is not k*k'");
    return o;
  }

  Outcome semigroup_classification() {
    Outcome o;
    Window const w = window(8, 1);
    for (bool unconstrained : {false, true}) {
      Classification const result
          = classify_semigroup_endos(w, ClassifyOptions{unconstrained, multiply});
      std::string const label = unconstrained ? "unconstrained" : "constrained";
      o.cases += result.cases_checked;
      o.require(result.endos == expected_semigroup_endos(8),
                label + " survivors differ from {e[k,a] : a+k < 8}");
      o.require(result.anomalies.empty(),
                label + " search keeps assignments outside the family");
    }
    return o;
  }

  Outcome semidirect() {
    Outcome o;
    o.require(check_semidirect_iso(Domain::omega, window(4, 10)), "B_omega");
    o.require(check_semidirect_iso(Domain::zed, window(3, 10)), "B_Z");
    Endo const      phi(2, 1);
    Endo const      psi(3, 2);
    SdElement const forward  = iso_to_sd(compose(phi, psi));
    SdElement const reversed = reversed_composition_image(phi, psi);
    o.require(forward == sd_multiply(iso_to_sd(phi), iso_to_sd(psi)),
              "forward image of e[2,1] e[3,2] is not the product");
    o.require(forward == SdElement(5, 6),
              "forward image is " + to_string(forward) + ", want (5,6)");
    o.require(reversed == SdElement(4, 6) && reversed != forward,
              "reversed-composition witness: image is " + to_string(reversed)
                  + ", want (4,6) distinct from " + to_string(forward));
    return o;
  }

  Outcome origin_fixing() {
    Outcome o;
    o.require(check_origin_fixing_composition(window(3, 100)), "B_Z");
    return o;
  }

  Outcome units() {
    Outcome o;
    o.require(check_units(Domain::omega, window(1, 10)), "B_omega");
    o.require(check_units(Domain::zed, window(1, 10)), "B_Z");
    return o;
  }

  Outcome powers() {
    Outcome o;
    o.require(check_powers(Domain::omega, window(1, 5, 20)), "B_omega");
    o.require(check_powers(Domain::zed, window(1, 5, 20)), "B_Z");
    return o;
  }

  Outcome embeddings() {
    Outcome o;
    o.require(check_embeddings(window(8, 5)), "embeddings");
    return o;
  }

  Outcome lemma_steps() {
    Outcome o;
    o.require(check_lemma_3_3_steps(window(7, 6)), "steps");
    return o;
  }

  Outcome natural_order() {
    Outcome o;
    o.require(check_order_closed_form(Domain::omega, window(10, 1)), "B_omega");
    o.require(check_order_closed_form(Domain::zed, window(5, 1)), "B_Z");
    return o;
  }

  Outcome mutation() {
    Outcome o;
    auto const expect_caught = [&](Outcome const& r, char const* which) {
      o.cases += r.cases;
      o.require(!r.pass, std::string("criterion ") + which + " misses the mutant");
      if (!r.pass) {
        o.detail += (o.detail.empty() ? "" : "; ") + std::string(which) + ": "
                    + r.detail;
      }
    };
    expect_caught(associativity(mutant::multiply_max), "1");
    expect_caught(endo_family(mutant::multiply_max), "2");
    expect_caught(words(mutant::multiply_max), "11");
    return o;
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "associativity, B_omega [0,12)^3 and B_Z [-6,6]^3", 10,
       [] { return associativity(multiply); }},
      {2, "e[k,a] homomorphism law, k,|a| <= 8", 30,
       [] { return endo_family(multiply); }},
      {3, "monoid endomorphisms at bound 8 and their composition table", 0,
       monoid_classification},
      {4, "semigroup endomorphisms at bound 8, constrained and unconstrained", 0,
       semigroup_classification},
      {5, "e[k,a] -> (a,k) bijective homomorphism, k,|a| <= 10; reversed witness",
       5, semidirect},
      {6, "e[k1,0] e[k2,0] = e[k1 k2,0] on B_Z, k1,k2 <= 100", 0, origin_fixing},
      {7, "units of the family, k,|a| <= 10", 0, units},
      {8, "closed-form powers, k,|a| <= 5, n <= 20", 0, powers},
      {9, "embeddings (m,n) -> (km+a,kn+a), k <= 5, |a| <= 5, [0,8)^2", 0,
       embeddings},
      {10, "(0,0)-endomorphism step identities, k <= 6, p <= 6", 0, lemma_steps},
      {11, "10000 random words of length <= 30", 5,
       [] { return words(multiply); }},
      {12, "closed-form natural order vs witness search", 0, natural_order},
      {13, "min/max mutant caught by criteria 1, 2 and 11", 0, mutation},
  };

  int failures = 0;
  for (auto const& c : criteria) {
    auto const    start   = std::chrono::steady_clock::now();
    Outcome       outcome = c.body();
    double const  seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.require(false, "over the " + std::to_string(c.budget_seconds)
                                 + " s budget");
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("%s  criterion %2d: %s  [cases=%llu, %.2f s",
                outcome.pass ? "PASS" : "FAIL",
                c.number,
                c.title.c_str(),
                static_cast<unsigned long long>(outcome.cases),
                seconds);
    if (c.budget_seconds > 0) {
      std::printf(" / %.0f s", c.budget_seconds);
    }
    std::printf("]\n");
    if (!outcome.detail.empty()) {
      std::printf("      %s\n", outcome.detail.c_str());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
