// Acceptance gate: one line per criterion, each with its time budget pinned.
// Exits nonzero if any criterion fails its check or its budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "selrec/demo.hpp"
#include "selrec/harness.hpp"

using namespace selrec;

namespace {

struct Gate {
  int total = 0;
  int passed = 0;

  void run(const std::string& name, double budget_s,
           const std::function<bool(std::string&)>& body) {
    ++total;
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= budget_s;
    if (ok && in_budget) ++passed;
    std::printf("criterion %d: %s  %-44s  %6.2fs of %.0fs%s%s\n", total,
                ok && in_budget ? "PASS" : "FAIL", name.c_str(), secs, budget_s,
                detail.empty() ? "" : "  ", detail.c_str());
    if (ok && !in_budget) std::printf("  (check passed but exceeded its time budget)\n");
    std::fflush(stdout);
  }
};

bool report_mod_timing(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  auto j = nlohmann::ordered_json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) return false;
  j.erase("elapsed_ms");
  out = j.dump();
  return true;
}

}  // namespace

int main() {
  Gate gate;

  gate.run("boolean product homomorphism, exhaustive", 1.0, [](std::string& detail) {
    return selection_homomorphism_exhaustive(&detail);
  });

  gate.run("restart invariance and pointwise unfolding", 30.0, [](std::string& detail) {
    long violations = 0;
    for (long seed = 1; seed <= 100; ++seed) {
      InstanceFamilies fam = build_families(random_instance(seed));
      violations += static_cast<long>(check_restart_invariance(seed, fam, 10, 20).size());
      violations += static_cast<long>(check_pointwise_unfolding(seed, fam, 10).size());
    }
    std::ostringstream out;
    out << "100 seeds, prefixes to 10, depth 20, " << violations << " violations";
    detail = out.str();
    return violations == 0;
  });

  gate.run("stopping equations solved and verified", 30.0, [](std::string& detail) {
    long bad = 0;
    std::string first;
    for (long seed = 1; seed <= 100; ++seed) {
      InstanceFamilies fam = build_families(random_instance(seed));
      std::string d;
      if (!check_spector_instance(fam, &d)) {
        ++bad;
        if (first.empty()) first = "seed " + std::to_string(seed) + ": " + d;
      }
      if (!check_attainment_witness(fam, &d)) {
        ++bad;
        if (first.empty()) first = "seed " + std::to_string(seed) + ": " + d;
      }
    }
    detail = bad == 0 ? "100 seeds, all equations hold" : first;
    return bad == 0;
  });

  gate.run("all translation cells match native schemes", 300.0, [](std::string& detail) {
    auto instances = seeded_instances(50);
    std::string failing;
    for (const auto& cell : matrix_cells()) {
      CheckReport rep = check_cell(cell, instances, 20, 100000);
      if (!rep.pass()) {
        if (!failing.empty()) failing += ", ";
        failing += cell;
      }
    }
    if (failing.empty()) {
      detail = "11 cells, 50 seeds each, depth 20";
      return true;
    }
    detail = "disagreeing cells: " + failing;
    return false;
  });

  gate.run("unfenced quantifier recursion always exhausts fuel", 10.0,
           [](std::string& detail) {
             for (long long fuel : {100LL, 10000LL, 100000LL}) {
               if (!ipq_diverges_at_fuel(fuel)) {
                 detail = "terminated at fuel " + std::to_string(fuel);
                 return false;
               }
             }
             detail = "budgets 1e2, 1e4, 1e5";
             return true;
           });

  gate.run("stopping points agree with naive scans", 10.0, [](std::string& detail) {
    return chi_exhaustive_check(&detail);
  });

  gate.run("game and search demos match their oracles", 10.0, [](std::string& detail) {
    for (long depth = 1; depth <= 4; ++depth) {
      for (unsigned long long seed = 1; seed <= 20; ++seed) {
        if (!demo_game(depth, seed).matches_oracle) {
          detail = "game depth " + std::to_string(depth) + " seed " + std::to_string(seed);
          return false;
        }
      }
    }
    for (long modulus = 0; modulus <= 4; ++modulus) {
      for (unsigned long long seed = 1; seed <= 20; ++seed) {
        if (!demo_search(modulus, seed).agrees) {
          detail = "search modulus " + std::to_string(modulus) + " seed " +
                   std::to_string(seed);
          return false;
        }
      }
    }
    detail = "80 games, 100 searches";
    return true;
  });

  gate.run("check runs are reproducible up to timing", 120.0, [](std::string& detail) {
    const std::string bin = SELREC_BIN_PATH;
    const std::string base = "\"" + bin + "\" check --suite all --seeds 5 --depth 15";
    int rc1 = std::system((base + " --report acceptance_report_a.json > /dev/null").c_str());
    int rc2 = std::system((base + " --report acceptance_report_b.json > /dev/null").c_str());
    if (rc1 != 0 || rc2 != 0) {
      detail = "check run exited nonzero";
      return false;
    }
    std::string a, b;
    if (!report_mod_timing("acceptance_report_a.json", a) ||
        !report_mod_timing("acceptance_report_b.json", b)) {
      detail = "report unreadable";
      return false;
    }
    std::remove("acceptance_report_a.json");
    std::remove("acceptance_report_b.json");
    detail = "two full runs, reports identical minus elapsed_ms";
    return a == b;
  });

  std::printf("acceptance: %d of %d criteria passed\n", gate.passed, gate.total);
  return gate.passed == gate.total ? 0 : 1;
}
