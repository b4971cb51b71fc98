#pragma once

#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "check.hpp"

namespace flexmeadow {

namespace detail {

inline std::string iso_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline const char* status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const std::string& model_name,
                                          const std::vector<Report>& reports,
                                          std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["model"] = model_name;
  auto arr = nlohmann::ordered_json::array();
  for (const Report& r : reports) {
    nlohmann::ordered_json e;
    e["law"] = r.law_id;
    e["catalog"] = r.catalog;
    e["status"] = detail::status_str(r.status);
    e["samples"] = r.samples;
    e["effective_samples"] = r.effective;
    if (r.ce) {
      nlohmann::ordered_json ce;
      auto binds = nlohmann::ordered_json::object();
      for (const auto& [v, lit] : r.ce->bindings) binds[v] = lit;
      ce["bindings"] = binds;
      ce["lhs"] = r.ce->lhs;
      ce["rhs"] = r.ce->rhs;
      e["counterexample"] = ce;
    } else {
      e["counterexample"] = nullptr;
    }
    arr.push_back(std::move(e));
  }
  j["results"] = std::move(arr);
  j["seed"] = seed;
  j["timestamp"] = detail::iso_utc_now();
  return j;
}

inline void print_reports(std::ostream& out, const std::vector<Report>& reports) {
  std::size_t pass = 0, fail = 0, error = 0;
  for (const Report& r : reports) {
    out << r.law_id << " [" << r.catalog << "] "
        << (r.status == Status::Fail ? "FAIL" : detail::status_str(r.status))
        << "  samples=" << r.samples << " effective=" << r.effective;
    if (r.status == Status::Error) out << "  (" << r.error_message << ")";
    out << "\n";
    if (r.ce) {
      out << "  at:";
      bool first = true;
      for (const auto& [v, lit] : r.ce->bindings) {
        out << (first ? " " : ", ") << v << " = " << lit;
        first = false;
      }
      out << "\n  lhs: " << r.ce->lhs << "\n  rhs: " << r.ce->rhs << "\n";
    }
    if (r.status == Status::Pass) ++pass;
    else if (r.status == Status::Fail) ++fail;
    else ++error;
  }
  out << "summary: " << pass << " pass, " << fail << " fail, " << error
      << " error\n";
}

namespace detail {

inline std::vector<Law> gather_laws(const std::vector<std::string>& catalogs) {
  std::vector<Law> laws;
  for (const std::string& c : catalogs) {
    const auto& names = all_catalog_names();
    if (std::find(names.begin(), names.end(), c) != names.end()) {
      auto cat = catalog(c);
      laws.insert(laws.end(), cat.begin(), cat.end());
    } else if (std::ifstream f(c); f) {
      auto cat = load_laws(f, c);
      laws.insert(laws.end(), cat.begin(), cat.end());
    } else {
      throw UnknownCatalog("unknown catalog '" + c +
                           "' (not a built-in catalog or a readable law file)");
    }
  }
  return laws;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{
      "exact checker for meadow-style axiom systems over external numbers "
      "and finite carriers"};
  app.name("meadow");
  app.require_subcommand(0, 1);

  bool list_axioms = false;
  app.add_flag("--list-axioms", list_axioms,
               "list the built-in law catalogs and exit");

  // check
  auto* c = app.add_subcommand("check", "check law catalogs against a model");
  std::string c_model;
  c->add_option("--model", c_model,
                "external | ffp:<p> | ffp-common:<p> | rhat-common | "
                "rat-involutive")
      ->required();
  std::vector<std::string> c_catalogs;
  c->add_option("--catalog", c_catalogs,
                "built-in catalog name or law file path (repeatable)")
      ->required();
  std::uint64_t c_samples = 10000;
  auto* samples_opt =
      c->add_option("--samples", c_samples, "random samples per law")
          ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000000}))
          ->capture_default_str();
  std::uint64_t c_seed = 0;
  c->add_option("--seed", c_seed, "random seed")->capture_default_str();
  bool c_exhaustive = false;
  c->add_flag("--exhaustive", c_exhaustive,
              "check every assignment (finite models only)")
      ->excludes(samples_opt);
  std::string c_json;
  c->add_option("--json", c_json, "write a JSON report to this path");

  // eval
  auto* e = app.add_subcommand("eval", "evaluate a term in a model");
  std::string e_model;
  e->add_option("--model", e_model, "model name")->required();
  std::string e_term;
  e->add_option("term", e_term, "term to evaluate")->required();
  std::vector<std::string> e_binds;
  e->add_option("--bind", e_binds, "variable binding 'x=<literal>' (repeatable)");

  // decompose
  auto* d = app.add_subcommand(
      "decompose", "factor a neutrix as r*I with I idempotent");
  std::string d_neutrix;
  d->add_option("neutrix", d_neutrix, "neutrix literal")->required();

  // quotient
  auto* q = app.add_subcommand(
      "quotient", "set quotient A/B = { x : x*B inside A } of external numbers");
  std::string q_a, q_b;
  q->add_option("A", q_a, "external number literal")->required();
  q->add_option("B", q_b, "external number literal")->required();

  std::vector<const char*> argv;
  argv.push_back("meadow");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::CallForAllHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::ParseError& pe) {
    err << "error: " << pe.what() << "\n";
    return 2;
  }

  try {
    if (list_axioms) {
      for (const std::string& name : all_catalog_names()) {
        out << "catalog " << name << ":\n";
        for (const Law& law : catalog(name)) out << "  " << render_law(law) << "\n";
      }
      return 0;
    }

    if (c->parsed()) {
      AnyModel model = make_model(c_model);
      std::vector<Law> laws = detail::gather_laws(c_catalogs);
      Strategy strategy;
      if (c_exhaustive)
        strategy = ExhaustiveStrategy{};
      else
        strategy = RandomStrategy{c_samples, c_seed};
      std::vector<Report> reports = std::visit(
          [&](const auto& m) {
            if (c_exhaustive && !has_enumerate<std::decay_t<decltype(m)>>)
              throw UsageError("model '" + m.name() +
                               "' is infinite; --exhaustive requires a finite "
                               "model");
            return check_suite(m, laws, strategy);
          },
          model);
      out << "model: " << c_model << "\n";
      if (c_exhaustive)
        out << "strategy: exhaustive\n";
      else
        out << "strategy: random samples=" << c_samples << " seed=" << c_seed
            << "\n";
      print_reports(out, reports);
      if (!c_json.empty()) {
        std::ofstream jf(c_json);
        if (!jf) throw UsageError("cannot write JSON report to '" + c_json + "'");
        jf << report_json(c_model, reports, c_seed).dump(2) << "\n";
      }
      bool any_error = false, any_fail = false;
      for (const Report& r : reports) {
        if (r.status == Status::Error) any_error = true;
        if (r.status == Status::Fail) any_fail = true;
      }
      return any_error ? 2 : any_fail ? 1 : 0;
    }

    if (e->parsed()) {
      AnyModel model = make_model(e_model);
      TermPtr t = parse_term(e_term);
      std::visit(
          [&](const auto& m) {
            using V = typename std::decay_t<decltype(m)>::value_type;
            std::map<std::string, V> env;
            for (const std::string& b : e_binds) {
              std::size_t eq = b.find('=');
              if (eq == std::string::npos)
                throw UsageError("bad --bind '" + b +
                                 "' (expected var=<literal>)");
              std::string var = detail::trim(b.substr(0, eq));
              std::string lit = detail::trim(b.substr(eq + 1));
              if (var.empty())
                throw UsageError("bad --bind '" + b + "' (empty variable)");
              env.insert_or_assign(var, m.parse(lit));
            }
            out << m.print(eval_term(m, t, env)) << "\n";
          },
          model);
      return 0;
    }

    if (d->parsed()) {
      auto [r, idem] = decompose(parse_neutrix(d_neutrix));
      out << "r = " << print_field_elem(r) << ", I = " << print_neutrix(idem)
          << "\n";
      return 0;
    }

    if (q->parsed()) {
      QuotientResult res = set_quotient(parse_ext(q_a), parse_ext(q_b));
      if (res)
        out << print_ext(*res) << "\n";
      else
        out << "empty\n";
      return 0;
    }

    err << "error: expected a subcommand (check, eval, decompose, quotient) "
           "or --list-axioms\n";
    err << app.help();
    return 2;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
}

inline int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace flexmeadow
