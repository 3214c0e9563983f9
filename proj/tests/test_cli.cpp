#include <cstdlib>
#include <sstream>

#include "doctest.h"

#include "bicyclic/cli.hpp"

using namespace bicyclic;
using namespace bicyclic::cli;

namespace {

  struct Result {
    int         status;
    std::string out;
    std::string err;
  };

  Result run_cli(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          status = run(args, out, err);
    return {status, out.str(), err.str()};
  }

  // Keeps BICYCLIC_DEFAULT_FORMAT from leaking between test cases.
  struct EnvGuard {
    explicit EnvGuard(char const* value) {
      if (value) {
        setenv(default_format_env, value, 1);
      } else {
        unsetenv(default_format_env);
      }
    }
    ~EnvGuard() {
      unsetenv(default_format_env);
    }
  };

}  // namespace

TEST_CASE("literals") {
  CHECK(parse_element("(0,1)", Domain::omega) == Element(0, 1));
  CHECK(parse_element(" ( -2 , +3 ) ", Domain::zed) == Element(-2, 3, Domain::zed));
  CHECK_THROWS_AS(parse_element("(-2,3)", Domain::omega), DomainError);
  CHECK_THROWS_AS(parse_element("(1,2", Domain::omega), ParseError);
  CHECK_THROWS_AS(parse_element("1,2", Domain::omega), ParseError);
  CHECK_THROWS_AS(parse_element("(99999999999999999999,0)", Domain::zed),
                  ParseError);

  CHECK(parse_endo("e[2,1]", Domain::omega) == Endo(2, 1));
  CHECK(parse_endo("e[1,-5]", Domain::zed) == Endo(1, -5, Domain::zed));
  CHECK_THROWS_AS(parse_endo("e[1,-5]", Domain::omega), DomainError);
  CHECK_THROWS_AS(parse_endo("e[-1,0]", Domain::zed), DomainError);
  CHECK_THROWS_AS(parse_endo("f[1,0]", Domain::zed), ParseError);

  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
  CHECK(parse_domain("z") == Domain::zed);
  CHECK_THROWS_AS(parse_domain("n"), ParseError);
}

TEST_CASE("json round trip") {
  for (Int i = -3; i <= 3; ++i) {
    for (Int j = -3; j <= 3; ++j) {
      Element const x(i, j, Domain::zed);
      CHECK(element_from_json(nlohmann::json::parse(to_json(x).dump())) == x);
      Endo const phi(std::abs(i), j, Domain::zed);
      CHECK(endo_from_json(nlohmann::json::parse(to_json(phi).dump())) == phi);
      SdElement const s(j, std::abs(i), Domain::zed);
      CHECK(sd_element_from_json(nlohmann::json::parse(to_json(s).dump())) == s);
    }
  }
  CHECK(to_json(Element(2, 3)).dump() == R"({"domain":"omega","i":2,"j":3})");
  CHECK(to_json(Endo(2, 1)).dump() == R"({"a":1,"domain":"omega","k":2})");
  CHECK_THROWS_AS(element_from_json(nlohmann::json{{"i", 1}}), ParseError);
  CHECK_THROWS_AS(
      element_from_json(nlohmann::json{{"domain", "omega"}, {"i", -1}, {"j", 0}}),
      DomainError);
}

TEST_CASE("mul") {
  EnvGuard g(nullptr);
  auto     r = run_cli({"mul", "--domain", "omega", "(0,1)", "(1,0)"});
  CHECK(r.status == 0);
  CHECK(r.out == "(0,0)\n");
  r = run_cli({"mul", "--domain", "z", "(-2,-3)", "(-3,-2)"});
  CHECK(r.out == "(-2,-2)\n");
  r = run_cli({"mul", "--domain", "omega", "(0,0)", "(5,7)"});
  CHECK(r.out == "(5,7)\n");
  r = run_cli({"mul", "(0,0)", "(5,7)", "--format", "json"});
  CHECK(r.out == "{\"domain\":\"omega\",\"i\":5,\"j\":7}\n");
  r = run_cli({"mul", "(0,0)", "(5,7)", "--format", "csv"});
  CHECK(r.out == "i,j\n5,7\n");

  r = run_cli({"mul", "(0,-1)", "(1,0)"});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
  r = run_cli({"mul", "(0,1)"});
  CHECK(r.status == 2);
  r = run_cli({"mul", "--domain", "q", "(0,1)", "(0,1)"});
  CHECK(r.status == 2);
}

TEST_CASE("normalize") {
  EnvGuard g(nullptr);
  CHECK(run_cli({"normalize", "pq"}).out == "1 ↦ (0,0)\n");
  CHECK(run_cli({"normalize", "q^2p^3"}).out == "q^2p^3 ↦ (2,3)\n");
  CHECK(run_cli({"normalize", "pqqp"}).out == "qp ↦ (1,1)\n");
  auto r = run_cli({"normalize", "pqqp", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["normal_form"] == "qp");
  CHECK(element_from_json(j["element"]) == Element(1, 1));
  r = run_cli({"normalize", "pxq"});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
}

TEST_CASE("apply and compose") {
  EnvGuard g(nullptr);
  CHECK(run_cli({"apply", "--domain", "omega", "e[2,1]", "(2,3)"}).out
        == "(5,7)\n");
  CHECK(run_cli({"apply", "--domain", "z", "e[0,-4]", "(9,1)"}).out
        == "(-4,-4)\n");
  CHECK(run_cli({"apply", "--domain", "omega", "e[1,0]", "(3,3)"}).out
        == "(3,3)\n");
  CHECK(run_cli({"apply", "e[0,-4]", "(9,1)"}).status == 2);

  CHECK(run_cli({"compose", "e[2,1]", "e[3,2]"}).out == "e[6,5] ↦ (5,6)\n");
  CHECK(run_cli({"compose", "e[1,0]", "e[7,3]"}).out == "e[7,3] ↦ (3,7)\n");
  CHECK(run_cli({"compose", "--domain", "z", "e[1,5]", "e[1,-5]"}).out
        == "e[1,0] ↦ (0,1)\n");
  auto r = run_cli({"compose", "e[2,1]", "e[3,2]", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(endo_from_json(j["endo"]) == Endo(6, 5));
  CHECK(sd_element_from_json(j["semidirect"]) == SdElement(5, 6));
}

TEST_CASE("classify") {
  EnvGuard g(nullptr);
  auto     r = run_cli({"classify", "--kind", "monoid", "--bound", "6"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("e[0,0]\ne[1,0]\ne[2,0]\ne[3,0]\ne[4,0]\ne[5,0]\n", 0) == 0);

  r = run_cli({"classify", "--kind", "semigroup", "--bound", "5", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  std::vector<Endo> got;
  for (auto const& e : j["endos"]) {
    got.push_back(endo_from_json(e));
  }
  CHECK(got == expected_semigroup_endos(5));
  CHECK(j["anomalies"].empty());

  r = run_cli({"classify", "--kind", "monoid", "--bound", "4", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["composition_table"]
        == nlohmann::json::parse("[[0,0,0,0],[0,1,2,3],[0,2,4,6],[0,3,6,9]]"));

  r = run_cli({"classify", "--domain", "z", "--kind", "semigroup"});
  CHECK(r.status == 2);
  CHECK(r.err.find("not finitely generated") != std::string::npos);
}

TEST_CASE("verify") {
  EnvGuard g(nullptr);
  auto r = run_cli({"verify", "thm-2.6", "--params", "10", "--format", "json"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["claim"] == "thm-2.6");
  CHECK(j[0]["verdict"] == "pass");
  CHECK(j[0]["counterexample"].is_null());
  CHECK(j[0]["cases_checked"].get<int>() > 0);
  CHECK(j[0]["window"]["param_bound"] == 10);

  r = run_cli({"verify", "nonsuch"});
  CHECK(r.status == 2);
  CHECK(r.err.find("unknown claim") != std::string::npos);
  CHECK(r.out.empty());

  r = run_cli({"verify", "order-closed-form", "--elements", "5", "--witness-bound", "3"});
  CHECK(r.status == 2);
  CHECK(r.err.find("too small") != std::string::npos);

  r = run_cli({"verify", "prop-3.5", "--elements", "3", "--params", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("PASS  prop-3.5", 0) == 0);
  CHECK(r.out.find("note:") != std::string::npos);

  r = run_cli({"verify", "units", "--params", "4", "--format", "csv"});
  CHECK(r.out.rfind("claim,verdict,cases_checked", 0) == 0);
}

TEST_CASE("verify all is deterministic") {
  EnvGuard   g(nullptr);
  auto const a = run_cli({"verify", "all", "--elements", "4", "--params", "4",
                          "--format", "json"});
  auto const b = run_cli({"verify", "all", "--elements", "4", "--params", "4",
                          "--format", "json"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out).size() == claim_ids().size());
}

TEST_CASE("table") {
  EnvGuard g(nullptr);
  auto     r = run_cli({"table", "sd-product", "--bound", "3", "--format", "csv"});
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string        line;
  std::getline(lines, line);
  CHECK(line == "a1,k1,a2,k2,a,k");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
  }
  CHECK(rows == 81);

  CHECK(run_cli({"table", "sd-product", "--bound", "1", "--format", "csv"}).out
        == "a1,k1,a2,k2,a,k\n0,0,0,0,0,0\n");

  // Composition table and product table agree under e[k,a] <-> (a,k).
  auto const endo = nlohmann::json::parse(
      run_cli({"table", "endo-composition", "--bound", "2", "--domain", "omega",
               "--format", "json"})
          .out);
  auto const sd = nlohmann::json::parse(
      run_cli({"table", "sd-product", "--bound", "2", "--format", "json"}).out);
  REQUIRE(endo["rows"].size() == sd["rows"].size());
  for (std::size_t n = 0; n < sd["rows"].size(); ++n) {
    auto const& e = endo["rows"][n];
    auto const& s = sd["rows"][n];
    CHECK(e[0] == s[1]);
    CHECK(e[1] == s[0]);
    CHECK(e[2] == s[3]);
    CHECK(e[3] == s[2]);
    CHECK(e[4] == s[5]);
    CHECK(e[5] == s[4]);
  }
  CHECK(run_cli({"table", "nonsuch"}).status == 2);
}

TEST_CASE("default format from the environment") {
  {
    EnvGuard g("json");
    CHECK(run_cli({"mul", "(0,1)", "(1,0)"}).out
          == "{\"domain\":\"omega\",\"i\":0,\"j\":0}\n");
    CHECK(run_cli({"mul", "(0,1)", "(1,0)", "--format", "human"}).out == "(0,0)\n");
  }
  {
    EnvGuard g("yaml");
    CHECK(run_cli({"mul", "(0,1)", "(1,0)"}).status == 2);
  }
}

TEST_CASE("help") {
  auto const r = run_cli({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("verify") != std::string::npos);
  CHECK(run_cli({}).status == 2);
}
