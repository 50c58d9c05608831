#include "pstr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "pstr/acceptance.hpp"
#include "pstr/generators.hpp"
#include "pstr/graph_io.hpp"

namespace pstr {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string format;
  int p = 1;
  int workers = 1;
  std::optional<double> time_limit;
  bool stats = false;
  std::uint64_t seed = 0;
  std::string labels;
  bool with_solver = false;
  int trials = 0;
  std::optional<double> xi;
  std::string name;
  std::string params;
  bool check = false;
  std::string x3c;
  std::string variant = "bipartite";
  std::string out;
  std::string out_format;
  std::string suite;
  std::string algorithm = "exact";
};

Graph load_graph(const Options& o) {
  if (auto spec = parse_family_keyword(o.graph)) return generate(*spec);
  const std::string text = read_text_file(o.graph);
  const GraphFormat fmt = o.format.empty() ? detect_format(text) : *format_from_name(o.format);
  return parse_graph(text, fmt);
}

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  cfg.worker_count = o.workers;
  if (o.time_limit) cfg.time_limit = std::chrono::duration<double>(*o.time_limit);
  cfg.algorithm = o.algorithm == "naive" ? Algorithm::naive : Algorithm::b0_enumeration;
  return cfg;
}

void echo_solver(Json& j, const Options& o) {
  // Worker count and time limit never change a proven result; echoing them
  // would break byte-identical output across worker counts.
  if (!o.stats) return;
  j["workers"] = o.workers;
  j["time_limit"] = o.time_limit ? Json(*o.time_limit) : Json(nullptr);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError("bad integer list '" + text + "'");
    out.push_back(value);
  }
  return out;
}

Json run_solve(const Options& o) {
  const Graph g = load_graph(o);
  const SolveResult r = solve(g, o.p, solver_config(o));
  Json j;
  j["command"] = "solve";
  j["graph"] = o.graph;
  j["n"] = g.order();
  j["m"] = g.size();
  j["p"] = o.p;
  j["model_class"] = std::string(model_class_name(classify_p(g, o.p)));
  j["algorithm"] = o.algorithm;
  echo_solver(j, o);
  j.update(to_json(r, o.stats));
  return j;
}

Json run_validate(const Options& o) {
  const Graph g = load_graph(o);
  const LabelFunction f = parse_labels(read_text_file(o.labels));
  Json j;
  j["command"] = "validate";
  j["graph"] = o.graph;
  j["p"] = o.p;
  j["labels"] = to_json(f);
  j.update(to_json(validate(g, o.p, f)));
  return j;
}

Json run_bounds(const Options& o) {
  const Graph g = load_graph(o);
  Json j;
  j["command"] = "bounds";
  j["graph"] = o.graph;
  j["p"] = o.p;
  j["with_solver"] = o.with_solver;
  echo_solver(j, o);
  j["metrics"] = to_json(metrics(g));
  j.update(to_json(bounds_report(g, o.p, o.with_solver, solver_config(o)), o.stats));
  return j;
}

Json run_heuristic(const Options& o) {
  const Graph g = load_graph(o);
  const TrialStats s = randomized_construction(g, o.p, o.trials, o.seed, o.xi);
  int valid = 0;
  for (int t = 0; t < o.trials; ++t) {
    valid += validate(g, o.p, random_trial(g, o.p, s.xi, o.seed, t)).valid ? 1 : 0;
  }
  Json j;
  j["command"] = "heuristic";
  j["graph"] = o.graph;
  j["p"] = o.p;
  j.update(to_json(s));
  j["valid_trials"] = valid;
  j["tightened_weight"] = tighten(g, o.p, s.best).weight();
  return j;
}

Json run_family(const Options& o) {
  const std::vector<int> a = parse_int_list(o.params);
  const std::size_t want = o.name == "universal" ? 1 : 2;
  if (a.size() != want) {
    throw UsageError("family " + o.name + " takes " + std::to_string(want) + " parameter(s)");
  }
  FamilyValue v;
  FamilySpec spec;
  if (o.name == "kbip") {
    v = value_complete_bipartite(a[0], a[1], o.p);
    spec = family::CompleteBipartite{a[0], a[1]};
  } else if (o.name == "bistar") {
    v = value_bistar(a[0], a[1], o.p);
    spec = family::DoubleStar{a[0], a[1]};
  } else {
    v = value_universal(a[0], o.p);
    spec = family::Star{a[0]};
  }
  Json j;
  j["command"] = "family";
  j.update(to_json(v));
  if (o.check) {
    const SolveResult r = solve_exact(generate(spec), o.p, solver_config(o));
    j["check_graph"] = describe(spec);
    j["exact"] = r.value;
    j["matches"] = v.applicable && r.value == v.value;
  }
  return j;
}

X3CInstance load_x3c(const Options& o) { return parse_x3c(read_text_file(o.x3c)); }

Json run_reduce(const Options& o) {
  const X3CInstance inst = load_x3c(o);
  const ReductionResult res = build_reduction(inst, o.p, *variant_from_name(o.variant));
  Json j;
  j["command"] = "reduce";
  j["instance"] = to_json(inst);
  j.update(to_json(res));
  const auto cover = x3c_has_exact_cover(inst);
  j["has_cover"] = cover.has_value();
  if (cover) {
    const LabelFunction f = proof_labeling(res, *cover);
    j["proof_labels"] = to_json(f);
    j["proof_weight"] = f.weight();
    j["proof_valid"] = validate(res.graph, o.p, f).valid;
  }
  if (!o.out.empty()) {
    GraphFormat fmt = GraphFormat::edgelist;
    if (!o.out_format.empty()) {
      fmt = *format_from_name(o.out_format);
    } else if (std::filesystem::path(o.out).extension() == ".col") {
      fmt = GraphFormat::dimacs;
    }
    std::ofstream file(o.out);
    if (!file) throw std::runtime_error("cannot write " + o.out);
    file << write_graph(res.graph, fmt);
    j["out"] = o.out;
    j["out_format"] = std::string(format_name(fmt));
  }
  return j;
}

Json run_x3c_solve(const Options& o) {
  const X3CInstance inst = load_x3c(o);
  const auto cover = x3c_has_exact_cover(inst);
  Json j;
  j["command"] = "x3c-solve";
  j["q"] = inst.q;
  j["t"] = inst.clauses.size();
  j["has_cover"] = cover.has_value();
  j["cover"] = cover ? Json(*cover) : Json(nullptr);
  return j;
}

Json run_verify(const Options& o) {
  const X3CInstance inst = load_x3c(o);
  const EquivalenceReport r =
      verify_reduction_equivalence(inst, o.p, *variant_from_name(o.variant), solver_config(o));
  Json j;
  j["command"] = "verify-reduction";
  j["p"] = o.p;
  j["variant"] = o.variant;
  echo_solver(j, o);
  j.update(to_json(r));
  return j;
}

void report_progress(const acceptance::Outcome& out) {
  std::cerr << acceptance::format_line(out) << '\n';
}

Json run_bench(const Options& o, std::string& text) {
  const auto outcomes = acceptance::run_all(report_progress);
  Json j;
  j["command"] = "bench";
  j["suite"] = o.suite;
  Json rows = Json::array();
  int failed = 0;
  for (const auto& c : outcomes) {
    Json row = {{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}};
    if (o.stats) row["seconds"] = c.seconds;
    rows.push_back(std::move(row));
    failed += c.passed ? 0 : 1;
    text += acceptance::format_line(c) + '\n';
  }
  j["criteria"] = std::move(rows);
  j["all_passed"] = failed == 0;
  text += std::to_string(outcomes.size() - failed) + "/" + std::to_string(outcomes.size()) +
          " criteria passed\n";
  if (failed) j["error"] = std::to_string(failed) + " acceptance criteria failed";
  return j;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string payload_text(const Json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (key == "entries") {
      out += "entries:\n";
      for (const auto& e : value) {
        out += "  " + e["name"].get<std::string>() + " (" + e["direction"].get<std::string>() +
               "): " + scalar_text(e["value"]) +
               (e["applicable"].get<bool>() ? "" : " [not applicable: " +
                                                       e["reason"].get<std::string>() + "]") +
               '\n';
      }
      continue;
    }
    if (value.is_object()) {
      out += key + ":\n";
      for (const auto& [k, v] : value.items()) out += "  " + k + ": " + scalar_text(v) + '\n';
      continue;
    }
    out += key + ": " + scalar_text(value) + '\n';
  }
  return out;
}

void add_graph_options(CLI::App* sub, Options& o) {
  sub->add_option("graph,--graph", o.graph, "graph file or keyword (robertson, path:5, ...)")
      ->required();
  sub->add_option("--format", o.format, "input format (default: detect)")
      ->check(CLI::IsMember({"dimacs", "edgelist"}));
  sub->add_option("--p", o.p, "strength parameter p")->required()->check(CLI::PositiveNumber);
}

void add_solver_options(CLI::App* sub, Options& o) {
  sub->add_option("--workers", o.workers, "solver threads")->check(CLI::PositiveNumber);
  sub->add_option("--time-limit", o.time_limit, "seconds before returning the incumbent")
      ->check(CLI::PositiveNumber);
}

}  // namespace

std::string CommandResult::render() const {
  std::string s = as_json ? payload.dump(2) : text;
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

CommandResult dispatch(const std::vector<std::string>& args) {
  CommandResult result;
  result.as_json = std::find(args.begin(), args.end(), "--json") != args.end();

  Options o;
  CLI::App app{"p-strong Roman domination toolkit", "pstr"};
  app.require_subcommand(1);
  app.add_flag("--json", result.as_json, "print the JSON payload");
  app.add_flag("--stats", o.stats, "add timing and search counters");
  app.add_option("--seed", o.seed, "random seed (default 0)");
  app.fallthrough();

  auto* solve_cmd = app.add_subcommand("solve", "exact value and witness");
  add_graph_options(solve_cmd, o);
  add_solver_options(solve_cmd, o);
  solve_cmd->add_option("--algorithm", o.algorithm, "exact (zero-set search) or naive")
      ->check(CLI::IsMember({"exact", "naive"}));

  auto* validate_cmd = app.add_subcommand("validate", "check a labelling");
  add_graph_options(validate_cmd, o);
  validate_cmd->add_option("--labels", o.labels, "label file")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds");
  add_graph_options(bounds_cmd, o);
  add_solver_options(bounds_cmd, o);
  bounds_cmd->add_flag("--with-solver", o.with_solver, "also solve exactly");

  auto* heuristic_cmd = app.add_subcommand("heuristic", "randomized construction");
  add_graph_options(heuristic_cmd, o);
  heuristic_cmd->add_option("--trials", o.trials, "number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  heuristic_cmd->add_option("--xi", o.xi, "inclusion probability")->check(CLI::Range(0.0, 1.0));

  auto* family_cmd = app.add_subcommand("family", "closed-form family values");
  family_cmd->add_option("--name", o.name)->required()->check(
      CLI::IsMember({"kbip", "bistar", "universal"}));
  family_cmd->add_option("--params", o.params, "a,b (n for universal)")->required();
  family_cmd->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);
  family_cmd->add_flag("--check", o.check, "compare with the exact solver");

  auto* reduce_cmd = app.add_subcommand("reduce", "build the gadget graph of an X3C instance");
  reduce_cmd->add_option("--x3c", o.x3c)->required();
  reduce_cmd->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);
  reduce_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"bipartite", "chordal"}));
  reduce_cmd->add_option("--out", o.out, "write the graph here");
  reduce_cmd->add_option("--out-format", o.out_format)->check(
      CLI::IsMember({"dimacs", "edgelist"}));

  auto* x3c_cmd = app.add_subcommand("x3c-solve", "exact cover by backtracking");
  x3c_cmd->add_option("--x3c", o.x3c)->required();

  auto* verify_cmd = app.add_subcommand("verify-reduction", "solve the gadget graph exactly");
  verify_cmd->add_option("--x3c", o.x3c)->required();
  verify_cmd->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"bipartite", "chordal"}));
  add_solver_options(verify_cmd, o);

  auto* bench_cmd = app.add_subcommand("bench", "acceptance suite");
  bench_cmd->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"paper"}));

  std::string command = args.empty() ? "" : args.front();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    result.text = subs.empty() ? app.help() : subs.front()->help();
    result.payload = {{"command", command}, {"help", result.text}};
    result.as_json = false;
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    result.payload = {{"command", command}, {"error", e.what()}};
    result.text = std::string("usage error: ") + e.what() + "\n";
    return result;
  }

  command = app.get_subcommands().front()->get_name();
  try {
    std::string text;
    if (command == "solve") {
      result.payload = run_solve(o);
    } else if (command == "validate") {
      result.payload = run_validate(o);
    } else if (command == "bounds") {
      result.payload = run_bounds(o);
    } else if (command == "heuristic") {
      result.payload = run_heuristic(o);
    } else if (command == "family") {
      result.payload = run_family(o);
    } else if (command == "reduce") {
      result.payload = run_reduce(o);
    } else if (command == "x3c-solve") {
      result.payload = run_x3c_solve(o);
    } else if (command == "verify-reduction") {
      result.payload = run_verify(o);
    } else {
      result.payload = run_bench(o, text);
    }
    if (result.payload.contains("error")) result.exit_code = kExitFailure;
    result.text = text.empty() ? payload_text(result.payload) : text;
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.payload = {{"command", command}, {"error", e.what()}};
    result.text = std::string("usage error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kExitFailure;
    result.payload = {{"command", command}, {"error", e.what()}};
    result.text = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace pstr
