#pragma once

// Command dispatch for the radkit tool: parse radical expressions and group
// specs, run engine/oracle operations, emit text or JSON reports.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 domain/parse error,
// 3 resource error.

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "radkit/engine.hpp"
#include "radkit/extension.hpp"
#include "radkit/minpoly.hpp"

namespace radkit::cli {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Options {
  bool rational_base = true;
  Int characteristic = 0;
  bool emit_json = false;
  uint64_t seed = 0x5eedbeef;
  int jobs = 1;
  long max_degree = 64;
};

struct Outcome {
  int exit_code = 0;
  json report;
};

namespace detail {

inline json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

inline json rat_json(const Rat& v) {
  if (is_integer(v) && num(v).fits_slong_p()) return json(num(v).get_si());
  return json(num(v).get_str() + "/" + den(v).get_str());
}

inline json poly_json(const Poly& f) {
  json coeffs = json::array();
  for (const Rat& c : f.c) coeffs.push_back(rat_json(c));
  return coeffs;
}

inline json cyclo_json(const CycloElement& e) {
  json out;
  out["conductor"] = (long)e.conductor;
  json coeffs = json::array();
  for (const Rat& c : e.coeffs) coeffs.push_back(rat_json(c));
  out["coefficients"] = coeffs;
  return out;
}

inline json kneser_json(const KneserVerdict& v) {
  json out;
  out["holds"] = v.holds;
  json viol = json::array();
  for (const Int& q : v.odd_violations) viol.push_back(int_json(q));
  out["oddViolations"] = viol;
  out["specialCase"] = v.special_case;
  return out;
}

inline json degree_report_json(const DegreeReport& rep) {
  json out;
  out["total"] = int_json(rep.total);
  out["index"] = int_json(rep.index);
  out["conductor"] = int_json(rep.conductor);
  out["cyclotomicDegree"] = int_json(rep.cyclotomic_degree);
  out["composition"] = rep.composition;
  out["kneser"] = kneser_json(rep.kneser);
  json per = json::object();
  for (const auto& pr : rep.per_prime) {
    json entry;
    entry["factor"] = int_json(pr.factor);
    entry["branch"] = pr.branch;
    entry["tau"] = pr.tau;
    entry["epsilon"] = pr.epsilon;
    entry["indexEll"] = int_json(pr.index_ell);
    entry["indexEntangled"] = int_json(pr.index_entangled);
    per[pr.ell.get_str()] = entry;
  }
  out["perPrime"] = per;
  return out;
}

inline Rat parse_rational_arg(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw domain_error("not a rational number: " + s);
  }
}

inline Int parse_int_arg(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw domain_error("not an integer: " + s);
  }
}

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  // drop pure-whitespace tails (e.g. trailing comma)
  while (!parts.empty() &&
         parts.back().find_first_not_of(" \t") == std::string::npos)
    parts.pop_back();
  return parts;
}

inline std::vector<Radical> parse_group_spec(const std::string& spec) {
  std::vector<Radical> gens;
  if (spec.find_first_not_of(" \t") == std::string::npos) return gens;
  for (const std::string& part : split_csv(spec)) gens.push_back(Radical::parse(part));
  return gens;
}

inline FiniteFieldGroup parse_ff_group_spec(const Int& p, const std::string& spec) {
  Int e = p - 1;
  if (spec.find_first_not_of(" \t") != std::string::npos) {
    for (const std::string& part : split_csv(spec)) {
      std::string t = part;
      t.erase(0, t.find_first_not_of(" \t"));
      t.erase(t.find_last_not_of(" \t") + 1);
      Int order = parse_int_arg(t);
      if (order < 1) throw domain_error("orders must be positive");
      e = lcm(e, order);
    }
  }
  return ff_group(p, e);
}

inline json group_json(const RadicalGroup& g) {
  json gens = json::array();
  for (const Radical& r : g.generators()) gens.push_back(r.format());
  return gens;
}

}  // namespace detail

// Run one command; never throws, folds errors into the outcome.
inline Outcome run_command(const std::vector<std::string>& args,
                           const Options& opt) {
  Outcome out;
  json& rep = out.report;
  rep["schemaVersion"] = kSchemaVersion;
  rep["status"] = "ok";
  try {
    if (args.empty()) throw domain_error("no command given");
    const std::string& verb = args[0];
    rep["verb"] = verb;
    auto need = [&](size_t n) {
      if (args.size() != n + 1)
        throw domain_error(verb + ": expected " + std::to_string(n) + " argument(s)");
    };

    if (verb == "degree") {
      need(1);
      rep["provenance"] = "engine";
      if (opt.rational_base) {
        auto g = RadicalGroup::make(BaseField::Q(), detail::parse_group_spec(args[1]));
        rep["payload"] = detail::degree_report_json(total_degree(g));
      } else {
        auto g = detail::parse_ff_group_spec(opt.characteristic, args[1]);
        rep["payload"] = detail::degree_report_json(total_degree(g));
      }
    } else if (verb == "index") {
      need(1);
      rep["provenance"] = "engine";
      if (opt.rational_base) {
        auto g = RadicalGroup::make(BaseField::Q(), detail::parse_group_spec(args[1]));
        rep["payload"] = {{"index", detail::int_json(g.index())}};
      } else {
        auto g = detail::parse_ff_group_spec(opt.characteristic, args[1]);
        rep["payload"] = {{"index", detail::int_json(exact_div(g.e, g.p - 1))}};
      }
    } else if (verb == "entangle") {
      if (args.size() != 2 && args.size() != 3)
        throw domain_error("entangle: expected <ell> [expression]");
      rep["provenance"] = "engine";
      Int ell = detail::parse_int_arg(args[1]);
      BaseField base = opt.rational_base ? BaseField::Q() : BaseField::Fp(opt.characteristic);
      auto gens = entangled_generators(base, ell);
      auto params = entanglement_params(base, ell);
      json payload;
      json core = json::array();
      for (const Radical& r : gens.core) core.push_back(r.format());
      payload["generators"] = core;
      payload["allSquareRoots"] = gens.all_square_roots;
      payload["everything"] = gens.everything;
      payload["t"] = params.t ? json(*params.t) : json("infinity");
      if (params.w) payload["w"] = *params.w;
      payload["branch"] = params.branch;
      if (args.size() == 3) {
        Radical r = Radical::parse(args[2]);
        payload["query"] = r.format();
        payload["member"] = gens.member(r);
      }
      rep["payload"] = payload;
    } else if (verb == "minpoly") {
      need(1);
      rep["provenance"] = "oracle";
      Radical r = Radical::parse(args[1]);
      Poly m = radical_minpoly(r, opt.max_degree);
      rep["payload"] = {{"expression", r.format()},
                        {"degree", m.degree()},
                        {"coefficients", detail::poly_json(m)}};
    } else if (verb == "check-kneser") {
      need(1);
      rep["provenance"] = "engine";
      if (opt.rational_base) {
        auto g = RadicalGroup::make(BaseField::Q(), detail::parse_group_spec(args[1]));
        rep["payload"] = detail::kneser_json(kneser_condition(g));
      } else {
        auto g = detail::parse_ff_group_spec(opt.characteristic, args[1]);
        rep["payload"] = detail::kneser_json(kneser_condition(g));
      }
    } else if (verb == "check-abelian") {
      need(2);
      rep["provenance"] = "engine";
      Rat a = detail::parse_rational_arg(args[1]);
      Int n = detail::parse_int_arg(args[2]);
      auto res = schinzel_abelian(a, n);
      json payload;
      payload["abelian"] = res.abelian;
      if (res.witness) {
        payload["witness"] = {{"m", detail::int_json(res.witness->first)},
                              {"b", detail::rat_json(res.witness->second)}};
      }
      rep["payload"] = payload;
    } else if (verb == "irreducible") {
      need(2);
      rep["provenance"] = "engine";
      Rat a = detail::parse_rational_arg(args[1]);
      Int n = detail::parse_int_arg(args[2]);
      rep["payload"] = {{"irreducible", lang_irreducible(a, n)}};
    } else if (verb == "gauss") {
      need(1);
      rep["provenance"] = "engine";
      Int p = detail::parse_int_arg(args[1]);
      CycloElement g = gauss_sum(p);
      CycloElement sq = cyclo_mul(g, g);
      Int value = fmod(p, 4) == 1 ? p : -p;
      bool check = sq == cyclo_rational(g.conductor, Rat(value));
      json payload = detail::cyclo_json(g);
      payload["square"] = detail::int_json(value);
      payload["squareVerified"] = check;
      rep["payload"] = payload;
    } else if (verb == "express") {
      need(1);
      rep["provenance"] = "engine";
      Radical r = Radical::parse(args[1]);
      auto e = cyclotomic_expression(r);
      json payload;
      payload["expression"] = r.format();
      payload["expressible"] = e.has_value();
      if (e) payload["value"] = detail::cyclo_json(e->second);
      rep["payload"] = payload;
    } else if (verb == "subfields") {
      need(1);
      rep["provenance"] = "engine";
      auto g = RadicalGroup::make(BaseField::Q(), detail::parse_group_spec(args[1]));
      auto res = subfields(g);
      json payload;
      payload["applicable"] = res.applicable;
      if (!res.applicable) {
        payload["reason"] = res.reason;
      } else {
        json fields = json::array();
        for (const auto& [sub, deg] : res.fields) {
          fields.push_back({{"generators", detail::group_json(sub)},
                            {"index", detail::int_json(sub.index())},
                            {"degree", detail::int_json(deg)}});
        }
        payload["fields"] = fields;
      }
      rep["payload"] = payload;
    } else if (verb == "verify") {
      need(1);
      rep["provenance"] = "both";
      auto gens = detail::parse_group_spec(args[1]);
      auto g = RadicalGroup::make(BaseField::Q(), gens);
      DegreeReport engine_rep = total_degree(g);
      Int oracle = compositum_degree(gens, opt.seed, opt.max_degree);
      bool equal = engine_rep.total == oracle;
      json payload;
      payload["engine"] = detail::degree_report_json(engine_rep);
      payload["oracle"] = {{"compositumDegree", detail::int_json(oracle)}};
      if (gens.size() == 1) {
        Poly m = radical_minpoly(gens[0], opt.max_degree);
        payload["oracle"]["minpoly"] = detail::poly_json(m);
        equal = equal && Int(m.degree()) == engine_rep.total;
      }
      payload["equal"] = equal;
      rep["payload"] = payload;
      if (!equal) {
        rep["status"] = "mismatch";
        out.exit_code = 1;
      }
    } else if (verb == "ff") {
      need(2);
      rep["provenance"] = "engine";
      Int p = detail::parse_int_arg(args[1]);
      Int e = detail::parse_int_arg(args[2]);
      auto g = ff_group(p, e);
      json payload = detail::degree_report_json(total_degree(g));
      auto params2 = entanglement_params(BaseField::Fp(p), 2);
      payload["entanglement"] = {
          {"t", params2.t ? json(*params2.t) : json("infinity")},
          {"w", params2.w ? json(*params2.w) : json()}};
      rep["payload"] = payload;
    } else {
      throw domain_error("unknown verb: " + verb);
    }
  } catch (const parse_error& e) {
    rep["status"] = "error";
    rep["error"] = {{"kind", "parse"}, {"message", e.what()}, {"offset", e.offset}};
    out.exit_code = 2;
  } catch (const resource_error& e) {
    rep["status"] = "error";
    rep["error"] = {{"kind", "resource"}, {"message", e.what()}};
    out.exit_code = 3;
  } catch (const domain_error& e) {
    rep["status"] = "error";
    rep["error"] = {{"kind", "domain"}, {"message", e.what()}};
    out.exit_code = 2;
  }
  return out;
}

// minimal shell-like splitting: whitespace separates, quotes group
inline std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_quote = false;
  char quote = 0;
  bool have = false;
  for (char ch : line) {
    if (in_quote) {
      if (ch == quote) {
        in_quote = false;
      } else {
        cur += ch;
      }
      continue;
    }
    if (ch == '"' || ch == '\'') {
      in_quote = true;
      quote = ch;
      have = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (have) {
        out.push_back(cur);
        cur.clear();
        have = false;
      }
      continue;
    }
    cur += ch;
    have = true;
  }
  if (have) out.push_back(cur);
  return out;
}

struct BatchSummary {
  long ok = 0, mismatch = 0, error = 0;
  int exit_code = 0;
};

using CommandRunner =
    std::function<Outcome(const std::vector<std::string>&, const Options&)>;

// Newline-delimited commands, '#' comments; per-line reports in input order
// plus a summary. jobs > 1 runs lines concurrently, output stays ordered.
inline BatchSummary run_batch(std::istream& in, const Options& opt,
                              std::ostream& os,
                              const CommandRunner& runner = run_command) {
  std::vector<std::vector<std::string>> commands;
  std::vector<std::string> raw;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto args = split_command_line(line);
    if (args.empty()) continue;
    commands.push_back(args);
    raw.push_back(line);
  }
  std::vector<Outcome> results(commands.size());
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < commands.size(); ++i) results[i] = runner(commands[i], opt);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= commands.size()) break;
          results[i] = runner(commands[i], opt);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  BatchSummary summary;
  for (size_t i = 0; i < results.size(); ++i) {
    const json& rep = results[i].report;
    std::string status = rep.value("status", "error");
    if (status == "ok")
      ++summary.ok;
    else if (status == "mismatch")
      ++summary.mismatch;
    else
      ++summary.error;
    if (opt.emit_json) {
      os << rep.dump() << "\n";
    } else {
      os << "[" << (i + 1) << "] " << status << ": " << raw[i] << "\n";
    }
  }
  json sj = {{"summary",
              {{"ok", summary.ok}, {"mismatch", summary.mismatch},
               {"error", summary.error}}}};
  if (opt.emit_json)
    os << sj.dump() << "\n";
  else
    os << "summary: " << summary.ok << " ok, " << summary.mismatch
       << " mismatch, " << summary.error << " error\n";
  if (summary.mismatch > 0)
    summary.exit_code = 1;
  else if (summary.error > 0)
    summary.exit_code = 2;
  return summary;
}

// human-readable rendering of a report
inline void print_text(const json& rep, std::ostream& os) {
  std::string status = rep.value("status", "error");
  if (status == "error") {
    os << "error: " << rep["error"]["message"].get<std::string>() << "\n";
    return;
  }
  const json& p = rep["payload"];
  std::string verb = rep.value("verb", "");
  if (verb == "degree" || verb == "ff") {
    os << "total degree: " << p["total"] << "\n";
    os << "index:        " << p["index"] << "\n";
    os << "conductor:    " << p["conductor"] << "\n";
    os << "kneser holds: " << (p["kneser"]["holds"].get<bool>() ? "yes" : "no") << "\n";
    for (auto& [ell, entry] : p["perPrime"].items())
      os << "  ell = " << ell << ": factor " << entry["factor"] << " ("
         << entry["branch"].get<std::string>() << ")\n";
  } else if (verb == "verify") {
    os << "engine total:  " << p["engine"]["total"] << "\n";
    os << "oracle degree: " << p["oracle"]["compositumDegree"] << "\n";
    os << "equal: " << (p["equal"].get<bool>() ? "yes" : "NO") << "\n";
  } else {
    os << p.dump(2) << "\n";
  }
}

inline int run_main(int argc, char** argv) {
  CLI::App app{"radkit: exact degrees and entanglement of radical extensions"};
  Options opt;
  std::string base = "q";
  std::vector<std::string> args;
  app.add_option("--base", base, "base field: q (default) or fp:<p>");
  app.add_flag("--json", opt.emit_json, "emit machine-readable JSON reports");
  app.add_option("--seed", opt.seed, "seed for randomized oracle steps");
  app.add_option("--jobs", opt.jobs, "parallel workers for batch runs");
  app.add_option("--max-degree", opt.max_degree, "oracle degree bound");
  app.add_option("command", args,
                 "verb and arguments: degree | index | entangle | minpoly | "
                 "check-kneser | check-abelian | irreducible | gauss | "
                 "express | subfields | verify | ff | batch <file>");
  CLI11_PARSE(app, argc, argv);

  if (base != "q") {
    if (base.rfind("fp:", 0) != 0) {
      std::cerr << "error: --base must be q or fp:<p>\n";
      return 2;
    }
    opt.rational_base = false;
    try {
      opt.characteristic = Int(base.substr(3));
    } catch (const std::invalid_argument&) {
      std::cerr << "error: bad characteristic\n";
      return 2;
    }
  }
  if (!args.empty() && args[0] == "batch") {
    if (args.size() != 2) {
      std::cerr << "error: batch requires exactly one file argument\n";
      return 2;
    }
    std::ifstream in(args[1]);
    if (!in) {
      std::cerr << "error: cannot open " << args[1] << "\n";
      return 2;
    }
    return run_batch(in, opt, std::cout).exit_code;
  }
  Outcome out = run_command(args, opt);
  if (opt.emit_json) {
    std::cout << out.report.dump(2) << "\n";
  } else {
    print_text(out.report, std::cout);
  }
  return out.exit_code;
}

}  // namespace radkit::cli
