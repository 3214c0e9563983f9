// Command-line front end: literal syntaxes, JSON/CSV rendering and the
// subcommand dispatcher used by tools/bicyclic.cpp.

#ifndef BICYCLIC_CLI_HPP_
#define BICYCLIC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bicyclic/core.hpp"
#include "bicyclic/endo.hpp"
#include "bicyclic/oracle.hpp"
#include "bicyclic/semidirect.hpp"

namespace bicyclic::cli {

  enum class OutputFormat { human, json, csv };

  // "human", "json" or "csv"; throws ParseError otherwise.
  OutputFormat parse_format(std::string_view text);
  // "omega" or "z"; throws ParseError otherwise.
  Domain parse_domain(std::string_view text);

  // "(i,j)" with optional signs and whitespace. Throws ParseError, or
  // DomainError if the pair is not in the domain.
  Element parse_element(std::string_view text, Domain d);

  // "e[k,a]". Throws ParseError or DomainError.
  Endo parse_endo(std::string_view text, Domain d);

  // {"domain":"omega"|"z","i":int,"j":int}
  nlohmann::json to_json(Element const& x);
  // {"domain":...,"k":int,"a":int}
  nlohmann::json to_json(Endo const& phi);
  // {"domain":...,"a":int,"k":int}
  nlohmann::json to_json(SdElement const& s);
  nlohmann::json to_json(Window const& w);
  nlohmann::json to_json(Value const& v);
  // {"claim":str,"verdict":"pass"|"fail","counterexample":value|null,
  //  "cases_checked":int,"window":{...}} plus "note" when non-empty.
  nlohmann::json to_json(VerificationReport const& r);

  // Inverses of to_json; throw ParseError on malformed documents.
  Element   element_from_json(nlohmann::json const& j);
  Endo      endo_from_json(nlohmann::json const& j);
  SdElement sd_element_from_json(nlohmann::json const& j);

  // Environment variable naming the default output format.
  constexpr char const* default_format_env = "BICYCLIC_DEFAULT_FORMAT";

  enum ExitStatus : int { success = 0, verification_failed = 1, usage_error = 2 };

  // Runs one command; `args` excludes the program name. Results go to `out`,
  // diagnostics to `err`.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace bicyclic::cli

#endif  // BICYCLIC_CLI_HPP_
