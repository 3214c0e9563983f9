#include "bicyclic/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "bicyclic/words.hpp"

namespace bicyclic::cli {

  namespace {

    Int parse_int(std::string const& text, std::string_view what) {
      std::string_view digits = text;
      if (!digits.empty() && digits.front() == '+') {
        digits.remove_prefix(1);
      }
      Int        value = 0;
      auto const res
          = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (res.ec != std::errc() || res.ptr != digits.data() + digits.size()) {
        throw ParseError("integer out of range in " + std::string(what));
      }
      return value;
    }

    std::string const& domain_name(Domain d) {
      static std::string const omega = "omega", zed = "z";
      return d == Domain::omega ? omega : zed;
    }

    Int json_int(nlohmann::json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
        throw ParseError(std::string("json: missing integer field \"") + key
                         + "\"");
      }
      return j.at(key).get<Int>();
    }

    Domain json_domain(nlohmann::json const& j) {
      if (!j.is_object() || !j.contains("domain") || !j.at("domain").is_string()) {
        throw ParseError("json: missing string field \"domain\"");
      }
      return parse_domain(j.at("domain").get<std::string>());
    }

    // Small CSV/human table writer.
    struct Table {
      std::vector<std::string>              columns;
      std::vector<std::vector<std::string>> rows;

      void write(std::ostream& out, OutputFormat fmt) const {
        if (fmt == OutputFormat::csv) {
          write_csv_row(out, columns);
          for (auto const& r : rows) {
            write_csv_row(out, r);
          }
          return;
        }
        std::vector<std::size_t> width(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
          width[c] = columns[c].size();
          for (auto const& r : rows) {
            width[c] = std::max(width[c], r[c].size());
          }
        }
        auto line = [&](std::vector<std::string> const& r) {
          for (std::size_t c = 0; c < r.size(); ++c) {
            out << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(width[c]))
                << r[c];
          }
          out << '\n';
        };
        line(columns);
        for (auto const& r : rows) {
          line(r);
        }
      }

      static void write_csv_row(std::ostream& out,
                                std::vector<std::string> const& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
          out << (c == 0 ? "" : ",");
          if (r[c].find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char ch : r[c]) {
              quoted += ch;
              if (ch == '"') {
                quoted += '"';
              }
            }
            out << quoted << '"';
          } else {
            out << r[c];
          }
        }
        out << '\n';
      }
    };

    std::string counterexample_text(VerificationReport const& r) {
      if (!r.counterexample) {
        return {};
      }
      std::string text;
      for (auto const& v : r.counterexample->inputs) {
        text += (text.empty() ? "" : " ") + to_string(v);
      }
      return text;
    }

    // Everything a subcommand needs once options are parsed.
    struct Context {
      OutputFormat  format;
      Domain        domain;
      std::ostream& out;
      std::ostream& err;
    };

    int cmd_mul(Context const& ctx, std::string const& x, std::string const& y) {
      Element const r = multiply(parse_element(x, ctx.domain),
                                 parse_element(y, ctx.domain));
      switch (ctx.format) {
        case OutputFormat::json: ctx.out << to_json(r).dump() << '\n'; break;
        case OutputFormat::csv:
          ctx.out << "i,j\n" << r.i() << ',' << r.j() << '\n';
          break;
        default: ctx.out << to_string(r) << '\n';
      }
      return success;
    }

    int cmd_normalize(Context const& ctx, std::string const& text) {
      NormalForm const nf = normalize(parse_word(text));
      Element const    x  = to_element(nf);
      switch (ctx.format) {
        case OutputFormat::json:
          ctx.out << nlohmann::json{{"normal_form", to_string(nf)},
                                    {"element", to_json(x)}}
                         .dump()
                  << '\n';
          break;
        case OutputFormat::csv:
          ctx.out << "normal_form,i,j\n"
                  << to_string(nf) << ',' << x.i() << ',' << x.j() << '\n';
          break;
        default: ctx.out << to_string(nf) << " ↦ " << to_string(x) << '\n';
      }
      return success;
    }

    int cmd_apply(Context const& ctx, std::string const& e, std::string const& x) {
      Element const r = apply(parse_endo(e, ctx.domain), parse_element(x, ctx.domain));
      switch (ctx.format) {
        case OutputFormat::json: ctx.out << to_json(r).dump() << '\n'; break;
        case OutputFormat::csv:
          ctx.out << "i,j\n" << r.i() << ',' << r.j() << '\n';
          break;
        default: ctx.out << to_string(r) << '\n';
      }
      return success;
    }

    int cmd_compose(Context const&     ctx,
                    std::string const& f,
                    std::string const& g) {
      Endo const      phi = compose(parse_endo(f, ctx.domain), parse_endo(g, ctx.domain));
      SdElement const s   = iso_to_sd(phi);
      switch (ctx.format) {
        case OutputFormat::json:
          ctx.out << nlohmann::json{{"endo", to_json(phi)}, {"semidirect", to_json(s)}}
                         .dump()
                  << '\n';
          break;
        case OutputFormat::csv:
          ctx.out << "k,a,sd_a,sd_k\n"
                  << phi.k() << ',' << phi.a() << ',' << s.a() << ',' << s.k()
                  << '\n';
          break;
        default: ctx.out << to_string(phi) << " ↦ " << to_string(s) << '\n';
      }
      return success;
    }

    int cmd_classify(Context const&     ctx,
                     std::string const& kind_text,
                     Int                bound,
                     bool               unconstrained) {
      if (ctx.domain != Domain::omega) {
        ctx.err << "classify: B_Z is not finitely generated, so its "
                   "endomorphisms cannot be enumerated by generator images; "
                   "use `verify prop-3.5` instead\n";
        return usage_error;
      }
      if (bound < 1) {
        throw PreconditionError("--bound must be >= 1");
      }
      bool const monoid = kind_text == "monoid";
      Window     w;
      w.element_bound = bound;
      ClassifyOptions const opts{unconstrained, multiply};
      auto const result = monoid ? classify_monoid_endos(w, opts)
                                 : classify_semigroup_endos(w, opts);
      std::optional<std::vector<std::vector<Endo>>> table;
      if (monoid) {
        table = induced_composition_table(result.endos, w);
      }

      if (ctx.format == OutputFormat::json) {
        nlohmann::json doc{{"kind", kind_text},
                           {"bound", bound},
                           {"unconstrained", unconstrained},
                           {"candidates", result.candidates},
                           {"endos", nlohmann::json::array()},
                           {"anomalies", nlohmann::json::array()}};
        for (auto const& phi : result.endos) {
          doc["endos"].push_back(to_json(phi));
        }
        for (auto const& g : result.anomalies) {
          doc["anomalies"].push_back(
              {{"of_p", to_json(g.of_p)}, {"of_q", to_json(g.of_q)}});
        }
        if (table) {
          auto& rows = doc["composition_table"] = nlohmann::json::array();
          for (auto const& row : *table) {
            auto& r = rows.emplace_back(nlohmann::json::array());
            for (auto const& phi : row) {
              r.push_back(phi.k());
            }
          }
        }
        ctx.out << doc.dump() << '\n';
      } else if (ctx.format == OutputFormat::csv) {
        ctx.out << "k,a\n";
        for (auto const& phi : result.endos) {
          ctx.out << phi.k() << ',' << phi.a() << '\n';
        }
      } else {
        for (auto const& phi : result.endos) {
          ctx.out << to_string(phi) << '\n';
        }
        for (auto const& g : result.anomalies) {
          ctx.out << "anomaly: (0,1) -> " << to_string(g.of_p) << ", (1,0) -> "
                  << to_string(g.of_q) << '\n';
        }
        if (table) {
          ctx.out << "composition (row after column), by k:\n";
          Table t;
          t.columns.push_back("k");
          for (auto const& phi : result.endos) {
            t.columns.push_back(std::to_string(phi.k()));
          }
          for (std::size_t r = 0; r < table->size(); ++r) {
            auto& row = t.rows.emplace_back();
            row.push_back(std::to_string(result.endos[r].k()));
            for (auto const& phi : (*table)[r]) {
              row.push_back(std::to_string(phi.k()));
            }
          }
          t.write(ctx.out, OutputFormat::human);
        }
      }
      return result.anomalies.empty() ? success : verification_failed;
    }

    int cmd_verify(Context const&     ctx,
                   std::string const& claim,
                   Window const&      w,
                   std::optional<Int> witness_bound) {
      std::vector<std::string_view> ids;
      if (claim == "all") {
        ids = claim_ids();
      } else {
        ids.push_back(claim);
      }
      ClaimOptions opts;
      opts.witness_bound = witness_bound;
      std::vector<VerificationReport> reports;
      for (auto id : ids) {
        reports.push_back(verify_claim(id, w, opts));
      }

      bool all_pass = true;
      for (auto const& r : reports) {
        all_pass = all_pass && r.passed();
      }
      if (ctx.format == OutputFormat::json) {
        auto doc = nlohmann::json::array();
        for (auto const& r : reports) {
          doc.push_back(to_json(r));
        }
        ctx.out << doc.dump() << '\n';
      } else if (ctx.format == OutputFormat::csv) {
        Table t;
        t.columns = {"claim",
                     "verdict",
                     "cases_checked",
                     "element_bound",
                     "param_bound",
                     "power_bound",
                     "counterexample",
                     "detail"};
        for (auto const& r : reports) {
          t.rows.push_back({r.claim,
                            r.passed() ? "pass" : "fail",
                            std::to_string(r.cases_checked),
                            std::to_string(r.window.element_bound),
                            std::to_string(r.window.param_bound),
                            std::to_string(r.window.power_bound),
                            counterexample_text(r),
                            r.counterexample ? r.counterexample->detail : ""});
        }
        t.write(ctx.out, OutputFormat::csv);
      } else {
        for (auto const& r : reports) {
          ctx.out << (r.passed() ? "PASS" : "FAIL") << "  " << std::left
                  << std::setw(18) << r.claim << std::right
                  << " cases=" << r.cases_checked
                  << "  window: elements=" << r.window.element_bound
                  << " params=" << r.window.param_bound
                  << " powers=" << r.window.power_bound << '\n';
          if (r.counterexample) {
            ctx.out << "      counterexample: " << counterexample_text(r) << '\n'
                    << "      detail: " << r.counterexample->detail << '\n';
          }
          if (!r.note.empty()) {
            ctx.out << "      note: " << r.note << '\n';
          }
        }
      }
      return all_pass ? success : verification_failed;
    }

    std::vector<SdElement> table_box(Domain d, Int bound) {
      Int const lo = d == Domain::omega ? 0 : -(bound - 1);
      std::vector<SdElement> out;
      for (Int a = lo; a < bound; ++a) {
        for (Int k = 0; k < bound; ++k) {
          out.emplace_back(a, k, d);
        }
      }
      return out;
    }

    int cmd_table(Context const& ctx, std::string const& what, Int bound) {
      if (bound < 1) {
        throw PreconditionError("--bound must be >= 1");
      }
      auto const box = table_box(ctx.domain, bound);
      Table      t;
      auto       s   = [](Int v) { return std::to_string(v); };
      if (what == "sd-product") {
        t.columns = {"a1", "k1", "a2", "k2", "a", "k"};
        for (auto const& u : box) {
          for (auto const& v : box) {
            SdElement const r = sd_multiply(u, v);
            t.rows.push_back(
                {s(u.a()), s(u.k()), s(v.a()), s(v.k()), s(r.a()), s(r.k())});
          }
        }
      } else {
        t.columns = {"phi_k", "phi_a", "psi_k", "psi_a", "k", "a"};
        for (auto const& u : box) {
          for (auto const& v : box) {
            Endo const phi = iso_from_sd(u);
            Endo const psi = iso_from_sd(v);
            Endo const r   = compose(phi, psi);
            t.rows.push_back({s(phi.k()),
                              s(phi.a()),
                              s(psi.k()),
                              s(psi.a()),
                              s(r.k()),
                              s(r.a())});
          }
        }
      }
      if (ctx.format == OutputFormat::json) {
        nlohmann::json doc{{"table", what},
                           {"domain", domain_name(ctx.domain)},
                           {"bound", bound},
                           {"columns", t.columns},
                           {"rows", nlohmann::json::array()}};
        for (auto const& r : t.rows) {
          auto& row = doc["rows"].emplace_back(nlohmann::json::array());
          for (auto const& cell : r) {
            row.push_back(std::stoll(cell));
          }
        }
        ctx.out << doc.dump() << '\n';
      } else {
        t.write(ctx.out, ctx.format);
      }
      return success;
    }

  }  // namespace

  OutputFormat parse_format(std::string_view text) {
    if (text == "human") {
      return OutputFormat::human;
    } else if (text == "json") {
      return OutputFormat::json;
    } else if (text == "csv") {
      return OutputFormat::csv;
    }
    throw ParseError("unknown output format \"" + std::string(text)
                     + "\" (expected human, json or csv)");
  }

  Domain parse_domain(std::string_view text) {
    if (text == "omega") {
      return Domain::omega;
    } else if (text == "z") {
      return Domain::zed;
    }
    throw ParseError("unknown domain \"" + std::string(text)
                     + "\" (expected omega or z)");
  }

  Element parse_element(std::string_view text, Domain d) {
    static std::regex const re(
        R"(^\s*\(\s*([+-]?[0-9]+)\s*,\s*([+-]?[0-9]+)\s*\)\s*$)");
    std::string const s(text);
    std::smatch       m;
    if (!std::regex_match(s, m, re)) {
      throw ParseError("malformed element literal \"" + s
                       + "\" (expected \"(i,j)\")");
    }
    return Element(parse_int(m[1], s), parse_int(m[2], s), d);
  }

  Endo parse_endo(std::string_view text, Domain d) {
    static std::regex const re(
        R"(^\s*e\s*\[\s*([+-]?[0-9]+)\s*,\s*([+-]?[0-9]+)\s*\]\s*$)");
    std::string const s(text);
    std::smatch       m;
    if (!std::regex_match(s, m, re)) {
      throw ParseError("malformed endomorphism literal \"" + s
                       + "\" (expected \"e[k,a]\")");
    }
    return Endo(parse_int(m[1], s), parse_int(m[2], s), d);
  }

  nlohmann::json to_json(Element const& x) {
    return {{"domain", domain_name(x.domain())}, {"i", x.i()}, {"j", x.j()}};
  }

  nlohmann::json to_json(Endo const& phi) {
    return {{"domain", domain_name(phi.domain())}, {"k", phi.k()}, {"a", phi.a()}};
  }

  nlohmann::json to_json(SdElement const& s) {
    return {{"domain", domain_name(s.domain())}, {"a", s.a()}, {"k", s.k()}};
  }

  nlohmann::json to_json(Window const& w) {
    return {{"element_bound", w.element_bound},
            {"param_bound", w.param_bound},
            {"power_bound", w.power_bound}};
  }

  nlohmann::json to_json(Value const& v) {
    return std::visit(
        [](auto const& x) -> nlohmann::json {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Int>) {
            return x;
          } else if constexpr (std::is_same_v<T, Word>) {
            return {{"word", to_string(x)}};
          } else {
            return to_json(x);
          }
        },
        v);
  }

  nlohmann::json to_json(VerificationReport const& r) {
    nlohmann::json j{{"claim", r.claim},
                     {"verdict", r.passed() ? "pass" : "fail"},
                     {"counterexample", nullptr},
                     {"cases_checked", r.cases_checked},
                     {"window", to_json(r.window)}};
    if (r.counterexample) {
      auto inputs = nlohmann::json::array();
      for (auto const& v : r.counterexample->inputs) {
        inputs.push_back(to_json(v));
      }
      j["counterexample"]
          = {{"inputs", inputs}, {"detail", r.counterexample->detail}};
    }
    if (!r.note.empty()) {
      j["note"] = r.note;
    }
    return j;
  }

  Element element_from_json(nlohmann::json const& j) {
    return Element(json_int(j, "i"), json_int(j, "j"), json_domain(j));
  }

  Endo endo_from_json(nlohmann::json const& j) {
    return Endo(json_int(j, "k"), json_int(j, "a"), json_domain(j));
  }

  SdElement sd_element_from_json(nlohmann::json const& j) {
    return SdElement(json_int(j, "a"), json_int(j, "k"), json_domain(j));
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Exact arithmetic, endomorphisms and brute-force checks for "
                 "the bicyclic monoid B_omega and the extended bicyclic "
                 "semigroup B_Z.",
                 "bicyclic"};
    app.require_subcommand(1);

    std::string format_text;
    std::string domain_text = "omega";
    auto add_common = [&](CLI::App* sub, bool with_domain) {
      sub->add_option("--format", format_text, "human | json | csv")
          ->check(CLI::IsMember({"human", "json", "csv"}));
      if (with_domain) {
        sub->add_option("--domain", domain_text, "omega | z (default omega)")
            ->check(CLI::IsMember({"omega", "z"}));
      }
    };

    std::string x_text, y_text;
    auto*       mul = app.add_subcommand("mul", "Multiply two elements (i,j)");
    add_common(mul, true);
    mul->add_option("x", x_text, "left factor, e.g. \"(0,1)\"")->required();
    mul->add_option("y", y_text, "right factor")->required();

    std::string word_text;
    auto*       norm = app.add_subcommand(
        "normalize", "Reduce a word over {p,q} modulo pq = 1");
    add_common(norm, false);
    norm->add_option("word", word_text, "e.g. \"pqqp\" or \"q^2p^3\"")
        ->required();

    std::string endo_text, endo2_text;
    auto*       app_cmd
        = app.add_subcommand("apply", "Apply e[k,a] : (m,n) -> (km+a, kn+a)");
    add_common(app_cmd, true);
    app_cmd->add_option("endo", endo_text, "e.g. \"e[2,1]\"")->required();
    app_cmd->add_option("x", x_text, "element")->required();

    auto* comp = app.add_subcommand(
        "compose",
        "Compose two endomorphisms; the second argument is applied first");
    add_common(comp, true);
    comp->add_option("phi", endo_text, "applied second")->required();
    comp->add_option("psi", endo2_text, "applied first")->required();

    std::string kind_text = "semigroup";
    Int         bound     = 8;
    bool        unconstrained = false;
    auto*       classify = app.add_subcommand(
        "classify", "Enumerate endomorphisms of B_omega by generator images");
    add_common(classify, true);
    classify->add_option("--kind", kind_text, "monoid | semigroup")
        ->check(CLI::IsMember({"monoid", "semigroup"}));
    classify->add_option("--bound", bound, "element window [0,N)");
    classify->add_flag("--unconstrained",
                       unconstrained,
                       "search the image of (1,0) independently");

    std::string        claim;
    Window             window;
    std::optional<Int> witness_bound;
    auto*              verify = app.add_subcommand(
        "verify", "Run brute-force checks of a claim, or of all claims");
    add_common(verify, false);
    verify->add_option("claim", claim, "claim identifier or \"all\"")
        ->required();
    verify->add_option("--elements", window.element_bound, "element bound");
    verify->add_option("--params", window.param_bound, "parameter bound");
    verify->add_option("--powers", window.power_bound, "exponent bound");
    verify->add_option("--witness-bound",
                       witness_bound,
                       "idempotent search bound for the order check");

    std::string what;
    Int         table_bound = 3;
    auto*       table = app.add_subcommand(
        "table", "Emit the endomorphism composition or semidirect product table");
    add_common(table, true);
    table->add_option("what", what, "endo-composition | sd-product")
        ->required()
        ->check(CLI::IsMember({"endo-composition", "sd-product"}));
    table->add_option("--bound", table_bound, "parameters range over [0,N)");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return success;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    }

    try {
      OutputFormat format = OutputFormat::human;
      if (char const* env = std::getenv(default_format_env);
          env != nullptr && *env != '\0') {
        format = parse_format(env);
      }
      if (!format_text.empty()) {
        format = parse_format(format_text);
      }
      Context const ctx{format, parse_domain(domain_text), out, err};

      if (mul->parsed()) {
        return cmd_mul(ctx, x_text, y_text);
      } else if (norm->parsed()) {
        return cmd_normalize(ctx, word_text);
      } else if (app_cmd->parsed()) {
        return cmd_apply(ctx, endo_text, x_text);
      } else if (comp->parsed()) {
        return cmd_compose(ctx, endo_text, endo2_text);
      } else if (classify->parsed()) {
        return cmd_classify(ctx, kind_text, bound, unconstrained);
      } else if (verify->parsed()) {
        return cmd_verify(ctx, claim, window, witness_bound);
      } else if (table->parsed()) {
        return cmd_table(ctx, what, table_bound);
      }
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    }
    return usage_error;
  }

}  // namespace bicyclic::cli
