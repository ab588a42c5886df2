#pragma once

#include <functional>
#include <string>
#include <vector>

#include "selrec/families.hpp"
#include "selrec/fuel.hpp"
#include "selrec/instance.hpp"

namespace selrec {

struct SeededInstance {
  long seed = 0;
  InstanceSpec spec;
};

std::vector<SeededInstance> seeded_instances(long count, const RandomParams& params = {});

// One extensional disagreement between a derived recursor and its native
// counterpart, or an error raised while evaluating either side.
struct CellFailure {
  long seed = 0;
  long index = -1;  // -1 for result-valued recursors and for errors
  std::string expected;
  std::string got;
};

struct CheckReport {
  std::string derived;
  std::string native;
  long instances = 0;
  std::vector<CellFailure> failures;
  long long fuel_used = 0;

  bool pass() const { return failures.empty(); }
};

// Canonical order of the derived/native cells exercised by `check`.
const std::vector<std::string>& matrix_cells();
std::string native_of_cell(const std::string& derived);

bool known_recursor(const std::string& name);
bool recursor_returns_seq(const std::string& name);

// Evaluate a recursor by name on an instance. Sequence-valued names return
// the full stream; result-valued names return a single result.
Seq<Value> eval_seq_recursor(const std::string& name, const InstanceFamilies& fam,
                             FuelHandle fuel);
Result eval_result_recursor(const std::string& name, const InstanceFamilies& fam,
                            FuelHandle fuel);

CheckReport check_cell(const std::string& derived, const std::vector<SeededInstance>& instances,
                       long depth, long long fuel_override = -1);

// Same comparison loop with caller-supplied evaluators; used to show the
// harness actually detects disagreements.
using SeqEval = std::function<Seq<Value>(const InstanceFamilies&, FuelHandle)>;
CheckReport compare_seq_evals(const std::string& derived, const std::string& native,
                              const std::vector<SeededInstance>& instances, const SeqEval& lhs,
                              const SeqEval& rhs, long depth, long long fuel_override = -1);

// Property checks reused by the suite runner, the unit tests and the
// acceptance gate. The first three return the violations found (empty =
// pass); the rest report pass/fail plus a short detail string.

// Restarting the explicit product from any of its own prefixes reproduces
// the same stream.
std::vector<CellFailure> check_restart_invariance(long seed, const InstanceFamilies& fam,
                                                  long i_max, long depth);
// Every entry equals one manual unfolding step at its position.
std::vector<CellFailure> check_pointwise_unfolding(long seed, const InstanceFamilies& fam,
                                                   long i_max);
// Each recursion scheme agrees with one unfolding of its own equation.
std::vector<CellFailure> defining_equation_failures(long seed, const InstanceFamilies& fam,
                                                    long depth);
bool check_spector_instance(const InstanceFamilies& fam, std::string* detail);
// The stream, the predicates handed to each selection, and the attained
// outcome fit together position by position.
bool check_attainment_witness(const InstanceFamilies& fam, std::string* detail);
bool chi_exhaustive_check(std::string* detail);
bool selection_homomorphism_exhaustive(std::string* detail);
bool ipq_diverges_at_fuel(long long fuel_amount);

struct SuiteConfig {
  std::string suite = "all";  // all | seqcore | selection | barrec | spector | interdef
  long seeds = 25;
  long depth = 20;
  long long fuel = kDefaultFuel;
  std::string report_path;  // empty = do not write a file
};

struct SuiteResult {
  bool pass = false;
  std::string report_text;  // JSON document, also written to report_path if set
  std::string summary;      // human-readable one-line-per-check text
};

SuiteResult run_suite(const SuiteConfig& config);

}  // namespace selrec
