#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "selrec/demo.hpp"
#include "selrec/harness.hpp"
#include "selrec/spector.hpp"

namespace {

using namespace selrec;

// Exit codes: 0 success, 1 a check or verification failed, 2 an instance
// failed to parse or validate, 3 an evaluation ran out of fuel.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInstance = 2;
constexpr int kOutOfFuel = 3;

bool parse_range(const std::string& text, long& from, long& to) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return false;
  try {
    from = std::stol(text.substr(0, dots));
    to = std::stol(text.substr(dots + 2));
  } catch (...) {
    return false;
  }
  return from >= 0 && to >= from;
}

int run_check(const SuiteConfig& cfg) {
  SuiteResult res = run_suite(cfg);
  std::cout << res.summary;
  if (!cfg.report_path.empty()) std::cout << "report written to " << cfg.report_path << "\n";
  return res.pass ? kOk : kCheckFailed;
}

int run_eval(const std::string& recursor, const std::string& path, const std::string& indices,
             long long fuel_flag, long depth_flag) {
  InstanceSpec spec = parse_instance_file(path);
  if (fuel_flag >= 0) spec.fuel = fuel_flag;
  if (depth_flag > 0) spec.depth = depth_flag;
  validate_instance(spec);
  if (!known_recursor(recursor))
    throw ValidationError("recursor", "unknown recursor: " + recursor);

  InstanceFamilies fam = build_families(spec);
  auto fuel = make_fuel(fam.fuel_budget);
  if (recursor_returns_seq(recursor)) {
    long from = 0;
    long to = fam.depth - 1;
    if (!indices.empty() && !parse_range(indices, from, to))
      throw ValidationError("indices", "expected a range of the form A..B, got: " + indices);
    Seq<Value> alpha = eval_seq_recursor(recursor, fam, fuel);
    for (long i = from; i <= to; ++i)
      std::cout << "alpha(" << i << ") = " << alpha.at(i).code << "\n";
  } else {
    Result r = eval_result_recursor(recursor, fam, fuel);
    std::cout << "result = " << r.code << "\n";
  }
  std::cout << "fuel used: " << fuel_used(fuel) << "\n";
  return kOk;
}

int run_solve(const std::string& path) {
  InstanceSpec spec = parse_instance_file(path);
  validate_instance(spec);
  InstanceFamilies fam = build_families(spec);
  auto fuel = make_fuel(fam.fuel_budget);
  SpectorSolution sol =
      solve_spector_equations(fam.sel_at, fam.outcome, fam.omega, spec.x_card, fuel);
  std::cout << "n = " << sol.n << "\n";
  std::cout << "alpha = " << seq_prefix_string(sol.alpha, sol.n + 3) << "\n";
  std::cout << "p =";
  for (const auto& r : sol.p_table) std::cout << " " << r.code;
  std::cout << "\n";
  SpectorReport rep = verify_spector(sol, fam.sel_at, fam.outcome, fam.omega, fuel);
  for (const auto& c : rep.checks)
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.lhs << " vs " << c.rhs
              << ")\n";
  std::cout << (rep.pass ? "solution verified" : "verification failed") << "\n";
  return rep.pass ? kOk : kCheckFailed;
}

int run_demo(const std::string& kind, long depth, unsigned long long seed) {
  if (kind == "game") {
    GameReport g = demo_game(depth, seed);
    std::cout << render_game(g);
    return g.matches_oracle ? kOk : kCheckFailed;
  }
  SearchReport r = demo_search(depth, seed);
  std::cout << render_search(r);
  return r.agrees ? kOk : kCheckFailed;
}

int run_validate(const std::string& path) {
  InstanceSpec spec = parse_instance_file(path);
  validate_instance(spec);
  std::cout << "valid instance: x_card=" << spec.x_card << " r_card=" << spec.r_card
            << " start=" << path_to_string(spec.start) << " outcome_modulus="
            << spec.outcome.modulus << " omega_modulus=" << spec.omega.modulus
            << " omega_bound=" << spec.omega.bound << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"products of selection functions and the bar recursions they define"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  auto* check = app.add_subcommand("check", "run a verification suite over seeded instances");
  check->add_option("--suite", cfg.suite, "all, seqcore, selection, barrec, spector, interdef")
      ->check(CLI::IsMember({"all", "seqcore", "selection", "barrec", "spector", "interdef"}));
  check->add_option("--seeds", cfg.seeds, "number of seeded instances")
      ->check(CLI::PositiveNumber);
  check->add_option("--depth", cfg.depth, "comparison depth for sequence outputs")
      ->envname("SELREC_DEPTH")
      ->check(CLI::PositiveNumber);
  check->add_option("--fuel", cfg.fuel, "unfolding budget per evaluation")
      ->envname("SELREC_FUEL")
      ->check(CLI::PositiveNumber);
  check->add_option("--report", cfg.report_path, "write the JSON report to this path");

  std::string recursor;
  std::string eval_path;
  std::string indices;
  long long eval_fuel = -1;
  long eval_depth = -1;
  auto* eval = app.add_subcommand("eval", "evaluate one recursor on an instance file");
  eval->add_option("--recursor", recursor,
                   "eps, epq, EPS, EPQ, ips, IPS, mbr, MBR, MBRprime, SBR, BR, or a derived "
                   "form such as EPQ_via_IPS")
      ->required();
  eval->add_option("--instance", eval_path, "instance file")->required();
  eval->add_option("--indices", indices, "range A..B of positions to print");
  eval->add_option("--fuel", eval_fuel, "override the instance's fuel budget")
      ->envname("SELREC_FUEL");
  eval->add_option("--depth", eval_depth, "override the instance's print depth")
      ->envname("SELREC_DEPTH");

  std::string solve_path;
  auto* solve = app.add_subcommand("solve-spector", "solve the equation system on an instance");
  solve->add_option("--instance", solve_path, "instance file")->required();

  std::string demo_kind;
  long demo_depth = 3;
  unsigned long long demo_seed = 7;
  auto* demo = app.add_subcommand("demo", "worked examples: game play and sequence search");
  demo->add_option("kind", demo_kind, "game or search")
      ->required()
      ->check(CLI::IsMember({"game", "search"}));
  demo->add_option("--depth", demo_depth, "game depth / predicate width")
      ->check(CLI::Range(1l, 10l));
  demo->add_option("--seed", demo_seed, "payoff / predicate seed");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "parse and validate an instance file");
  validate->add_option("--instance", validate_path, "instance file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(cfg);
    if (eval->parsed()) return run_eval(recursor, eval_path, indices, eval_fuel, eval_depth);
    if (solve->parsed()) return run_solve(solve_path);
    if (demo->parsed()) return run_demo(demo_kind, demo_depth, demo_seed);
    if (validate->parsed()) return run_validate(validate_path);
  } catch (const selrec::ParseError& e) {
    std::cerr << "unreadable instance: " << e.what() << "\n";
    return kBadInstance;
  } catch (const selrec::ValidationError& e) {
    std::cerr << "invalid instance (" << e.field << "): " << e.what() << "\n";
    return kBadInstance;
  } catch (const selrec::FuelExhausted&) {
    std::cerr << "fuel exhausted before the evaluation finished\n";
    return kOutOfFuel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
