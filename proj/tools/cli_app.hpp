#pragma once

// Command-line front end: JSON files in, one JSON report out.
//
// Exit codes: 0 success, 1 invalid input (with {"error", "detail"}),
// 2 a verification suite reported failing properties.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "partent/partent.hpp"
#include "partent/verify/suites.hpp"

#ifndef PARTENT_VERSION
#define PARTENT_VERSION "0.0.0"
#endif

namespace partent::cli {

using json = nlohmann::json;

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

inline json error_object(const Error& e) {
  json j{{"error", std::string(to_string(e.code()))}, {"detail", e.what()}};
  if (!e.indices().empty()) j["indices"] = e.indices();
  return j;
}

struct Options {
  std::string spec, algebra, a, b, v, w, lambda, profile, metric = "d", suite, output;
  int grid = 16;
  int trials = 100;
  std::uint64_t seed = 7;
  bool timing = false;
};

inline json dispatch(const std::string& command, const Options& o, int& exit_code) {
  using namespace json_io;
  json r;
  if (command == "entropy") {
    const EntropySpec spec = spec_from_json(read_json(o.spec));
    r["value"] = eval_entropy(spec, algebra_from_json(read_json(o.algebra)));
  } else if (command == "join") {
    const Algebra a = algebra_from_json(read_json(o.a));
    r["algebra"] = to_json(join(a, algebra_from_json(read_json(o.b))));
  } else if (command == "independent") {
    const Algebra a = algebra_from_json(read_json(o.a));
    r["independent"] = is_independent(a, algebra_from_json(read_json(o.b)));
  } else if (command == "independent-profile") {
    const Algebra a = algebra_from_json(read_json(o.a));
    r["algebra"] = to_json(independent_with_profile(a, profile_from_json(read_json(o.profile))));
  } else if (command == "distance") {
    const Algebra a = algebra_from_json(read_json(o.a));
    const Algebra b = algebra_from_json(read_json(o.b));
    if (o.metric != "d" && o.metric != "D") throw Error(ErrorCode::MalformedInput, "--metric must be d or D");
    const Rat value = o.metric == "d" ? distance_d(a, b) : distance_D(a, b);
    r["metric"] = o.metric;
    r["value"] = value.str();
    r["value_float"] = value.to_double();
  } else if (command == "delta") {
    const EntropySpec spec = spec_from_json(read_json(o.spec));
    const MSet v = mset_from_json(read_json(o.v));
    const SwapPair p{v, mset_from_json(read_json(o.w))};
    if (o.lambda.empty()) {
      r = to_json(partent::delta(spec, p));
    } else {
      const Rat lambda = Rat::parse(o.lambda);
      DeltaResult d = delta_lambda(spec, p, lambda);
      d.crosscheck_residual = std::abs(delta_lambda(spec, p, lambda * lambda).value - 2.0 * d.value);
      r = to_json(d);
    }
  } else if (command == "extract") {
    r["grid"] = to_json(extract_measure(spec_from_json(read_json(o.spec)), o.grid));
  } else if (command == "decompose") {
    r = to_json(decompose(spec_from_json(read_json(o.spec)), o.grid, o.trials, o.seed));
    r["seed"] = o.seed;
    r["rng"] = std::string(Rng::kName);
  } else if (command == "verify") {
    const auto report = verify::run_suite(o.suite, o.trials, o.seed);
    json props = json::array();
    for (const auto& c : report.checks)
      props.push_back({{"name", c.name},
                       {"max_deviation", c.max_deviation},
                       {"tolerance", c.tolerance},
                       {"samples", c.samples},
                       {"passed", c.passed()}});
    r["suite"] = report.suite;
    r["trials"] = report.trials;
    r["seed"] = report.seed;
    r["rng"] = std::string(Rng::kName);
    r["passed"] = report.passed();
    r["properties"] = std::move(props);
    if (!report.passed()) {
      json failing = json::array();
      for (const auto& c : report.checks)
        if (!c.passed()) failing.push_back(c.name);
      r["failing"] = std::move(failing);
      exit_code = 2;
    }
  }
  r["command"] = command;
  r["version"] = PARTENT_VERSION;
  return r;
}

/// Runs one command. The report (or error object) goes to `out` unless --output names a file.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Additive partition entropies on [0,1): evaluation, transport increments, measure recovery"};
  app.require_subcommand(1, 1);
  Options o;

  auto file = [](CLI::App* sub, const char* flag, std::string& target, const char* what) {
    return sub->add_option(flag, target, what)->required();
  };
  auto spec_flag = [&](CLI::App* sub) {
    return sub->add_option("--spec,--entropy", o.spec, "entropy spec JSON file")->required();
  };

  auto* entropy = app.add_subcommand("entropy", "evaluate an entropy on an algebra");
  spec_flag(entropy);
  file(entropy, "--algebra", o.algebra, "algebra JSON file");

  auto* join_cmd = app.add_subcommand("join", "join of two algebras");
  file(join_cmd, "--a", o.a, "algebra JSON file");
  file(join_cmd, "--b", o.b, "algebra JSON file");

  auto* indep = app.add_subcommand("independent", "exact independence test");
  file(indep, "--a", o.a, "algebra JSON file");
  file(indep, "--b", o.b, "algebra JSON file");

  auto* prof = app.add_subcommand("independent-profile", "algebra independent of --a with the given atom measures");
  file(prof, "--a", o.a, "algebra JSON file");
  file(prof, "--profile", o.profile, "profile JSON file {\"weights\": [\"p/q\", ...]}");

  auto* dist = app.add_subcommand("distance", "pseudometric d or D between algebras");
  file(dist, "--a", o.a, "algebra JSON file");
  file(dist, "--b", o.b, "algebra JSON file");
  dist->add_option("--metric", o.metric, "d or D")->check(CLI::IsMember({"d", "D"}));

  auto* del = app.add_subcommand("delta", "entropy increment of exchanging --v and --w");
  spec_flag(del);
  file(del, "--v", o.v, "set JSON file");
  file(del, "--w", o.w, "set JSON file");
  del->add_option("--lambda", o.lambda, "atom ratio p/q (default: Delta(V,W) at 2)");

  auto* ext = app.add_subcommand("extract", "recover the signed measure on an n-cell grid");
  spec_flag(ext);
  ext->add_option("--grid", o.grid, "grid size (power of two)");

  auto* dec = app.add_subcommand("decompose", "split an entropy into L_m plus an atom-measure-only part");
  spec_flag(dec);
  dec->add_option("--grid", o.grid, "grid size (power of two)");
  dec->add_option("--trials", o.trials, "random pairs per check");
  dec->add_option("--seed", o.seed, "generator seed");

  auto* ver = app.add_subcommand("verify", "run a property suite");
  ver->add_option("--suite", o.suite, "suite name")->required();
  ver->add_option("--trials", o.trials, "trials");
  ver->add_option("--seed", o.seed, "generator seed");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--output", o.output, "write the report here instead of stdout");
    sub->add_flag("--timing", o.timing, "include elapsed milliseconds in the report");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << json_io::dump(json{{"error", "usage"}, {"detail", e.what()}}) << '\n';
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  int exit_code = 0;
  json report;
  const auto start = std::chrono::steady_clock::now();
  try {
    report = dispatch(command, o, exit_code);
  } catch (const Error& e) {
    report = error_object(e);
    exit_code = 1;
  } catch (const std::exception& e) {
    report = json{{"error", "internal"}, {"detail", e.what()}};
    exit_code = 1;
  }
  if (o.timing && exit_code != 1)
    report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string text = json_io::dump(report) + "\n";
  if (o.output.empty() || exit_code == 1) {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "cannot write " << o.output << '\n';
      return 1;
    }
    f << text;
  }
  return exit_code;
}

}  // namespace partent::cli
