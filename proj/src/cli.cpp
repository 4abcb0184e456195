#include "rkit/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "rkit/cpp.hpp"
#include "rkit/fixtures.hpp"
#include "rkit/inject.hpp"
#include "rkit/parser.hpp"
#include "rkit/planner.hpp"
#include "rkit/robustness.hpp"

#ifndef RKIT_VERSION
#define RKIT_VERSION "0.0.0"
#endif

namespace rkit {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

/// Error that maps directly to an exit code.
struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitParse, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw Failure{kExitParse, "cannot write " + path};
  o << text;
}

std::string rational_json(const Rational& r) { return to_fraction_string(r); }

class Report {
 public:
  explicit Report(std::string command) : start_(std::chrono::steady_clock::now()) {
    doc_["command"] = std::move(command);
    doc_["inputs"] = json::array();
    doc_["verdict"] = nullptr;
    doc_["metrics"] = json::object();
    doc_["tool_version"] = RKIT_VERSION;
  }

  /// Reads an input file and records its hash.
  std::string input(const std::string& path) {
    std::string text = read_file(path);
    doc_["inputs"].push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return text;
  }
  void generated_input(const std::string& name, const std::string& text) {
    doc_["inputs"].push_back({{"path", name}, {"sha256", sha256_hex(text)}});
  }

  json& metrics() { return doc_["metrics"]; }
  json& details() { return doc_["details"]; }
  void verdict(const std::string& v) { doc_["verdict"] = v; }

  void emit(std::ostream& out) {
    doc_["metrics"]["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    out << doc_.dump(2) << "\n";
  }

 private:
  json doc_;
  std::chrono::steady_clock::time_point start_;
};

struct Loaded {
  IncompleteDomain domain;
  ProblemSpec problem;
  GroundModel model;
};

IncompleteDomain load_domain(Report& report, const std::string& path, std::ostream& err) {
  IncompleteDomain domain = parse_domain(report.input(path), path);
  auto diagnostics = validate_domain(domain);
  for (const auto& d : diagnostics)
    err << path << ": " << (d.is_error() ? "error" : "warning") << " [" << d.code << "] " << d.message << "\n";
  if (has_errors(diagnostics)) throw Failure{kExitSemantic, "domain " + path + " failed validation"};
  return domain;
}

Loaded load(Report& report, const std::string& domain_path, const std::string& problem_path, std::ostream& err,
            bool prune = false) {
  Loaded l;
  l.domain = load_domain(report, domain_path, err);
  l.problem = parse_problem(report.input(problem_path), l.domain, problem_path);
  GroundOptions options;
  options.prune_unreachable = prune;
  l.model = ground(l.domain, l.problem, options);
  for (const auto& w : l.model.warnings) err << "warning: " << w << "\n";
  report.metrics()["K"] = l.model.num_vars();
  return l;
}

std::optional<Rational> parse_rho(const std::string& text) {
  auto r = parse_rational(text);
  if (!r || *r <= 0 || *r > 1) throw Failure{kExitSemantic, "rho must be a number in (0,1], got " + text};
  return r;
}

std::vector<int> parse_int_range(const std::string& text) {
  // "1..3", "2" or "1,2,5"
  std::vector<int> out;
  auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
      for (int i = lo; i <= hi; ++i) out.push_back(i);
    } else {
      std::stringstream s(text);
      std::string item;
      while (std::getline(s, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw Failure{kExitParse, "malformed integer range " + text};
  }
  return out;
}

std::vector<Rational> parse_rho_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(*parse_rho(item));
  if (out.empty()) throw Failure{kExitParse, "empty rho list"};
  return out;
}

json plan_json(const Plan& plan) {
  json steps = json::array();
  for (const auto& s : plan.steps) steps.push_back(to_string(s));
  return steps;
}

json ids_json(const GroundModel& model, const std::vector<int>& ids) {
  json out = json::array();
  for (int f : ids) out.push_back(model.fluent_name(f));
  return out;
}

json items_json(const GroundModel& model, const std::vector<PossibleItem>& items) {
  json out = json::array();
  for (const auto& i : items) out.push_back({{"fluent", model.fluent_name(i.fluent)}, {"var", i.var}});
  return out;
}

// ---------------------------------------------------------------- commands

struct Common {
  std::string domain, problem, plan;
};

int cmd_ground(const Common& c, bool prune, std::ostream& out, std::ostream& err) {
  Report report("ground");
  Loaded l = load(report, c.domain, c.problem, err, prune);
  json actions = json::array();
  for (const auto& a : l.model.actions)
    actions.push_back({{"label", a.label()},
                       {"pre", ids_json(l.model, a.pre)},
                       {"add", ids_json(l.model, a.add)},
                       {"del", ids_json(l.model, a.del)},
                       {"poss_pre", items_json(l.model, a.poss_pre)},
                       {"poss_add", items_json(l.model, a.poss_add)},
                       {"poss_del", items_json(l.model, a.poss_del)}});
  json vars = json::array();
  for (const auto& v : l.model.vars)
    vars.push_back({{"id", v.id}, {"key", v.key}, {"symbol", v.symbol}, {"weight", rational_json(v.weight)}});
  report.verdict("grounded");
  report.metrics()["fluents"] = l.model.num_fluents();
  report.metrics()["actions"] = l.model.actions.size();
  report.details() = {{"actions", actions}, {"vars", vars}};
  report.emit(out);
  return kExitOk;
}

struct AssessFlags {
  double epsilon = 0.02, delta = 0.01;
  std::uint64_t seed = 0;
  int cap = kDefaultEnumerationCap;
  bool ledger = false, sampled = false;
};

int cmd_assess(const Common& c, const AssessFlags& f, std::ostream& out, std::ostream& err) {
  Report report("assess");
  Loaded l = load(report, c.domain, c.problem, err);
  ResolvedPlan plan = resolve_plan(parse_plan(report.input(c.plan), c.plan), l.model);
  const bool exact = !f.sampled && l.model.num_vars() <= static_cast<std::size_t>(f.cap);
  if (exact) {
    ExactOptions options;
    options.cap = f.cap;
    options.ledger = f.ledger;
    auto r = assess_exact(l.model, plan, options);
    report.verdict("exact");
    report.metrics()["R"] = rational_json(r.value);
    report.metrics()["R_decimal"] = to_double(r.value);
    report.metrics()["valid"] = r.successes > 0;
    report.metrics()["completions"] = r.total;
    if (f.ledger) {
      json ledger = json::array();
      for (const auto& e : r.ledger)
        ledger.push_back({{"completion", e.completion},
                          {"probability", rational_json(e.probability)},
                          {"success", e.success},
                          {"first_failed_step", e.first_failed_step}});
      report.details()["ledger"] = ledger;
    }
  } else {
    auto r = assess_sampled(l.model, plan, f.epsilon, f.delta, f.seed);
    report.verdict("sampled");
    report.metrics()["R_estimate"] = r.sampled.estimate;
    report.metrics()["half_width"] = r.sampled.half_width;
    report.metrics()["confidence"] = r.sampled.confidence;
    report.metrics()["samples"] = r.total;
    report.metrics()["successes"] = r.successes;
    report.metrics()["seed"] = f.seed;
  }
  report.metrics()["plan_length"] = plan.steps.size();
  report.emit(out);
  return kExitOk;
}

Rational rho_or_problem(const std::string& flag, const ProblemSpec& problem, const Rational& fallback) {
  if (!flag.empty()) return *parse_rho(flag);
  return problem.rho.value_or(fallback);
}

int cmd_compile(const Common& c, const std::string& rho_flag, std::string output, std::ostream& out,
                std::ostream& err) {
  Report report("compile");
  Loaded l = load(report, c.domain, c.problem, err);
  Rational rho = rho_or_problem(rho_flag, l.problem, Rational(1));
  CppProblem compiled = compile(l.model, rho);
  if (output.empty()) output = l.model.problem_name + ".ppddl";
  write_file(output, serialize_ppddl(compiled).combined());
  std::size_t effects = 0;
  for (const auto& a : compiled.actions) effects += a.effects.size();
  report.verdict("compiled");
  report.metrics()["rho"] = rational_json(rho);
  report.metrics()["actions"] = compiled.actions.size();
  report.metrics()["conditional_effects"] = effects;
  report.metrics()["hidden_fluents"] = 2 * compiled.hidden.size();
  report.details()["output"] = output;
  report.emit(out);
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& rho_flag, std::ostream& out, std::ostream& err) {
  Report report("verify");
  Loaded l = load(report, c.domain, c.problem, err);
  ResolvedPlan plan = resolve_plan(parse_plan(report.input(c.plan), c.plan), l.model);
  Rational rho = rho_or_problem(rho_flag, l.problem, Rational(1));
  auto t = check_theorem1(l.model, plan, rho);
  auto mismatch = compare_trajectories(l.model, compile(l.model, rho), plan);
  const bool ok = t.equal && !mismatch;
  report.verdict(ok ? "equal" : "mismatch");
  report.metrics()["R"] = rational_json(t.lhs);
  report.metrics()["goal_probability"] = rational_json(t.rhs);
  report.metrics()["rho"] = rational_json(rho);
  report.metrics()["meets_rho"] = t.meets_threshold;
  if (mismatch)
    report.details()["trajectory_mismatch"] = {
        {"completion", mismatch->completion}, {"step", mismatch->step}, {"detail", mismatch->detail}};
  report.emit(out);
  return ok ? kExitOk : kExitCheckFailed;
}

struct PlanFlags {
  std::string rho;
  bool max = false;
  double budget_secs = 60;
  std::uint64_t node_cap = 1'000'000;
  std::uint64_t seed = 0;
  std::string output;
};

std::string cell_verdict(Verdict v) {
  switch (v) {
    case Verdict::Plan:
      return "plan";
    case Verdict::Infeasible:
      return "⊥";
    case Verdict::BudgetExhausted:
      return "--";
  }
  return "--";
}

int cmd_plan(const Common& c, const PlanFlags& f, std::ostream& out, std::ostream& err) {
  Report report("plan");
  Loaded l = load(report, c.domain, c.problem, err, true);
  Budget budget{f.budget_secs, f.node_cap};
  report.metrics()["seed"] = f.seed;
  std::optional<ResolvedPlan> found;
  int code = kExitOk;
  if (f.max) {
    auto r = synthesize_max(l.model, budget);
    report.verdict(r.plan ? "plan" : (r.optimal ? "⊥" : "--"));
    report.metrics()["R"] = rational_json(r.robustness);
    report.metrics()["upper_bound"] = rational_json(r.upper_bound);
    report.metrics()["optimal"] = r.optimal;
    report.metrics()["rounds"] = r.rounds;
    report.metrics()["nodes"] = r.expanded;
    json sweep = json::array();
    for (const auto& s : r.sweep) sweep.push_back(rational_json(s));
    report.details()["incumbents"] = sweep;
    found = r.plan;
    if (!r.plan && !r.optimal) code = kExitBudget;
  } else {
    if (f.rho.empty() && !l.problem.rho) throw Failure{kExitSemantic, "plan needs --rho or a (:rho ...) in the problem"};
    Rational rho = rho_or_problem(f.rho, l.problem, Rational(1));
    auto r = synthesize(l.model, Threshold{rho, false}, budget);
    report.verdict(cell_verdict(r.verdict));
    report.metrics()["rho"] = rational_json(rho);
    report.metrics()["upper_bound"] = rational_json(r.upper_bound);
    report.metrics()["nodes"] = r.expanded;
    report.metrics()["generated"] = r.generated;
    if (r.verdict == Verdict::Plan) {
      report.metrics()["R"] = rational_json(r.robustness);
      found = r.plan;
    }
    if (r.certificate)
      report.details()["certificate"] = {
          {"kind", r.certificate->kind == InfeasibilityCertificate::Kind::UpperBound ? "upper-bound" : "exhausted-search"},
          {"bound", rational_json(r.certificate->bound)}};
    if (r.verdict == Verdict::BudgetExhausted) code = kExitBudget;
  }
  if (found) {
    Plan plan = to_plan(*found, l.model);
    std::string path = f.output.empty() ? l.model.problem_name + ".out.plan" : f.output;
    write_file(path, serialize_plan(plan));
    report.metrics()["plan_length"] = plan.steps.size();
    report.details()["plan"] = plan_json(plan);
    report.details()["output"] = path;
  }
  report.emit(out);
  return code;
}

int cmd_inject(const std::string& domain_path, const std::string& problem_path, int m, std::uint64_t seed,
               std::string output, std::string problem_output, std::ostream& out, std::ostream& err) {
  Report report("inject");
  IncompleteDomain domain = load_domain(report, domain_path, err);
  Injection inj = inject_incompleteness(domain, m, seed);
  if (output.empty())
    output = fs::path(domain_path).stem().string() + "-inj-m" + std::to_string(m) + "-s" + std::to_string(seed) + ".ipddl";
  std::string text = serialize_domain(inj.domain);
  write_file(output, text);
  report.details()["output"] = output;
  if (!problem_path.empty()) {
    ProblemSpec problem = parse_problem(report.input(problem_path), domain, problem_path);
    if (problem_output.empty()) problem_output = fs::path(output).replace_extension(".ipprob").string();
    write_file(problem_output, serialize_problem(with_injected_init(problem, inj.propositions)));
    report.details()["problem_output"] = problem_output;
  }
  report.verdict("injected");
  report.metrics()["M"] = m;
  report.metrics()["seed"] = seed;
  report.metrics()["output_sha256"] = sha256_hex(text);
  report.details()["propositions"] = inj.propositions;
  report.emit(out);
  return kExitOk;
}

struct SweepFlags {
  std::string rho = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::string logistics_m;
  double budget_secs = 60;
  std::uint64_t node_cap = 1'000'000;
  std::string csv = "sweep.csv";
};

int cmd_sweep(const Common& c, const SweepFlags& f, std::ostream& out, std::ostream& err) {
  Report report("sweep");
  struct Column {
    std::string name;
    GroundModel model;
  };
  std::vector<Column> columns;
  if (!f.logistics_m.empty()) {
    for (int m : parse_int_range(f.logistics_m)) {
      ProblemText text = make_mini_logistics(m);
      report.generated_input("mini-logistics-m" + std::to_string(m) + ".ipddl", text.domain);
      report.generated_input("mini-logistics-m" + std::to_string(m) + ".ipprob", text.problem);
      IncompleteDomain d = parse_domain(text.domain);
      ProblemSpec p = parse_problem(text.problem, d);
      columns.push_back({"m=" + std::to_string(m), ground(d, p, {true})});
    }
  } else {
    if (c.domain.empty() || c.problem.empty()) throw Failure{kExitParse, "sweep needs a domain and problem or --logistics-m"};
    Loaded l = load(report, c.domain, c.problem, err, true);
    columns.push_back({l.model.problem_name, std::move(l.model)});
  }
  const auto rhos = parse_rho_list(f.rho);
  Budget budget{f.budget_secs, f.node_cap};

  std::ostringstream csv;
  csv << "rho";
  for (const auto& col : columns) csv << "," << col.name;
  csv << "\n";
  json rows = json::array();
  json bounds = json::object();
  bool any_budget = false;
  for (const auto& col : columns) bounds[col.name] = rational_json(robustness_upper_bound(col.model));
  for (const auto& rho : rhos) {
    csv << to_compact_string(rho);
    json row = {{"rho", rational_json(rho)}, {"cells", json::object()}};
    for (const auto& col : columns) {
      auto r = synthesize(col.model, Threshold{rho, false}, budget);
      std::string cell;
      json detail = {{"verdict", cell_verdict(r.verdict)}, {"nodes", r.expanded}, {"seconds", r.seconds}};
      if (r.verdict == Verdict::Plan) {
        char t[32];
        std::snprintf(t, sizeof t, "%.2f", r.seconds);
        cell = std::to_string(r.plan.steps.size()) + "/" + t;
        detail["length"] = r.plan.steps.size();
        detail["R"] = rational_json(r.robustness);
      } else {
        cell = cell_verdict(r.verdict);
        any_budget |= r.verdict == Verdict::BudgetExhausted;
      }
      detail["cell"] = cell;
      csv << "," << cell;
      row["cells"][col.name] = detail;
    }
    csv << "\n";
    rows.push_back(row);
  }
  write_file(f.csv, csv.str());
  report.verdict(any_budget ? "partial" : "complete");
  report.details() = {{"csv", f.csv}, {"upper_bounds", bounds}, {"rows", rows}};
  report.emit(out);
  return kExitOk;
}

int cmd_gen_logistics(int m, const std::string& dir, std::ostream& out) {
  Report report("gen-logistics");
  ProblemText text = make_mini_logistics(m);
  fs::create_directories(dir);
  const std::string stem = (fs::path(dir) / ("logistics-m" + std::to_string(m))).string();
  write_file(stem + ".ipddl", text.domain);
  write_file(stem + ".ipprob", text.problem);
  report.verdict("generated");
  report.details()["outputs"] = {stem + ".ipddl", stem + ".ipprob"};
  report.emit(out);
  return kExitOk;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toolkit for planning with incomplete STRIPS domain models", "rkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RKIT_VERSION);

  Common common;
  auto positional = [&](CLI::App* sub, bool with_plan) {
    sub->add_option("domain", common.domain, "incomplete domain (.ipddl)")->required();
    sub->add_option("problem", common.problem, "problem (.ipprob)")->required();
    if (with_plan) sub->add_option("plan", common.plan, "plan (.plan)")->required();
  };

  bool prune = false;
  auto* ground_cmd = app.add_subcommand("ground", "ground a problem and dump actions and realization variables");
  positional(ground_cmd, false);
  ground_cmd->add_flag("--prune", prune, "drop actions unreachable in every completion");

  AssessFlags af;
  auto* assess_cmd = app.add_subcommand("assess", "robustness of a plan (exact, or sampled above the cap)");
  positional(assess_cmd, true);
  assess_cmd->add_option("--epsilon", af.epsilon, "sampling half-width");
  assess_cmd->add_option("--delta", af.delta, "sampling failure probability");
  assess_cmd->add_option("--seed", af.seed, "sampling seed");
  assess_cmd->add_option("--cap", af.cap, "largest K assessed exactly");
  assess_cmd->add_flag("--ledger", af.ledger, "include per-completion outcomes");
  assess_cmd->add_flag("--sampled", af.sampled, "sample even when K is below the cap");

  std::string rho_flag, output;
  auto* compile_cmd = app.add_subcommand("compile", "compile to a conformant probabilistic PPDDL problem");
  positional(compile_cmd, false);
  compile_cmd->add_option("--rho", rho_flag, "goal probability threshold");
  compile_cmd->add_option("-o,--output", output, "output path (default <problem>.ppddl)");

  auto* verify_cmd = app.add_subcommand("verify", "check R(plan) against the compiled plan's goal probability");
  positional(verify_cmd, true);
  verify_cmd->add_option("--rho", rho_flag, "goal probability threshold");

  PlanFlags pf;
  auto* plan_cmd = app.add_subcommand("plan", "synthesize a plan with robustness >= rho");
  positional(plan_cmd, false);
  plan_cmd->add_option("--rho", pf.rho, "robustness threshold (default: the problem's :rho)");
  plan_cmd->add_flag("--max", pf.max, "search for a maximally robust plan");
  plan_cmd->add_option("--budget-secs", pf.budget_secs, "wall-clock budget");
  plan_cmd->add_option("--node-cap", pf.node_cap, "expansion budget");
  plan_cmd->add_option("--seed", pf.seed, "recorded in the report; search is deterministic");
  plan_cmd->add_option("-o,--output", pf.output, "plan output path (default <problem>.out.plan)");

  std::string inject_domain, inject_problem, problem_output;
  int inject_m = 0;
  std::uint64_t inject_seed = 0;
  auto* inject_cmd = app.add_subcommand("inject", "add M random incomplete propositions to a domain");
  inject_cmd->add_option("domain", inject_domain, "domain (.ipddl or plain STRIPS)")->required();
  inject_cmd->add_option("--m", inject_m, "number of fresh propositions")->required();
  inject_cmd->add_option("--seed", inject_seed, "random seed");
  inject_cmd->add_option("--problem", inject_problem, "problem whose initial state receives the new propositions");
  inject_cmd->add_option("-o,--output", output, "domain output path");
  inject_cmd->add_option("--problem-output", problem_output, "problem output path");

  SweepFlags sf;
  auto* sweep_cmd = app.add_subcommand("sweep", "plan over a grid of rho values (and mini-logistics sizes)");
  sweep_cmd->add_option("domain", common.domain, "incomplete domain (.ipddl)");
  sweep_cmd->add_option("problem", common.problem, "problem (.ipprob)");
  sweep_cmd->add_option("--rho", sf.rho, "comma-separated thresholds");
  sweep_cmd->add_option("--logistics-m", sf.logistics_m, "mini-logistics sizes, e.g. 1..3");
  sweep_cmd->add_option("--budget-secs", sf.budget_secs, "wall-clock budget per cell");
  sweep_cmd->add_option("--node-cap", sf.node_cap, "expansion budget per cell");
  sweep_cmd->add_option("--csv", sf.csv, "CSV table output path");

  int gen_m = 1;
  std::string gen_dir = ".";
  auto* gen_cmd = app.add_subcommand("gen-logistics", "write the mini-logistics fixture for a given m");
  gen_cmd->add_option("m", gen_m, "robots per city")->required();
  gen_cmd->add_option("-d,--dir", gen_dir, "output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << RKIT_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rkit: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*ground_cmd) return cmd_ground(common, prune, out, err);
    if (*assess_cmd) return cmd_assess(common, af, out, err);
    if (*compile_cmd) return cmd_compile(common, rho_flag, output, out, err);
    if (*verify_cmd) return cmd_verify(common, rho_flag, out, err);
    if (*plan_cmd) return cmd_plan(common, pf, out, err);
    if (*inject_cmd)
      return cmd_inject(inject_domain, inject_problem, inject_m, inject_seed, output, problem_output, out, err);
    if (*sweep_cmd) return cmd_sweep(common, sf, out, err);
    if (*gen_cmd) return cmd_gen_logistics(gen_m, gen_dir, out);
  } catch (const Failure& f) {
    err << "rkit: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "rkit: " << e.what() << "\n";
    return e.kind() == ParseError::Kind::Syntax ? kExitParse : kExitSemantic;
  } catch (const ResolutionError& e) {
    err << "rkit: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const GroundingError& e) {
    err << "rkit: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const EnumerationCapExceeded& e) {
    err << "rkit: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const CompileError& e) {
    err << "rkit: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::invalid_argument& e) {
    err << "rkit: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitParse;
}

}  // namespace rkit
