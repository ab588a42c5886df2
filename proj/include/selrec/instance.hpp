#pragma once

#include <string>
#include <vector>

#include "selrec/domain.hpp"
#include "selrec/errors.hpp"

namespace selrec {

// Serializable description of one finite problem instance: cardinalities,
// the start position, one family of each functional kind, and the outcome,
// length and stopping tables every recursor draws from.

// Family indexing kinds. "argmin" ignores banks and uses the canonical
// least-result selection at every position. "table" picks a bank by position
// (or path length) modulo the bank count. "parity" picks by path length plus
// the sum of the codes on the path, so equal-length paths can differ.
enum class FamilyKind { Argmin, Table, Parity };

std::string family_kind_name(FamilyKind k);
FamilyKind family_kind_from_name(const std::string& name, const std::string& field);

// One bank of a skewed family: a head table keyed by the predicate graph,
// and a short emission pattern in which -1 stands for the chosen head.
struct SkewedBank {
  std::vector<int> table;
  std::vector<int> prefix;
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Argmin;
  std::vector<std::vector<int>> banks;  // selection/quantifier tables
};

struct SkewedFamilySpec {
  FamilyKind kind = FamilyKind::Argmin;
  std::vector<SkewedBank> banks;
};

struct OutcomeSpec {
  long modulus = 0;
  std::vector<int> table;  // result codes, indexed by the first `modulus` values
};

struct LengthSpec {
  bool identity = true;
  std::vector<long> table;  // by result code, when not identity
};

struct OmegaSpec {
  long modulus = 0;
  long bound = 0;
  std::vector<long> table;  // indexed like OutcomeSpec, values <= bound
};

struct InstanceSpec {
  int x_card = 2;
  int r_card = 2;
  Path<Value> start;
  bool start_was_index = false;  // document gave a bare index; path is zeros
  FamilySpec selection_family;
  FamilySpec quantifier_family;
  SkewedFamilySpec skewed_family;
  OutcomeSpec outcome;
  LengthSpec length;
  OmegaSpec omega;
  long long fuel = 100000;
  long depth = 20;
};

// Throws ParseError on malformed text, ValidationError (naming the field) on
// schema or invariant breaches.
InstanceSpec parse_instance(const std::string& text);
InstanceSpec parse_instance_file(const std::string& path);

// Re-checks every invariant of an in-memory spec; throws ValidationError.
void validate_instance(const InstanceSpec& spec);

std::string serialize_instance(const InstanceSpec& spec);

struct RandomParams {
  int x_card_max = 3;
  int r_card_max = 3;
  long outcome_modulus_max = 3;
  long omega_modulus_max = 3;
  long omega_bound_max = 4;
  long length_value_max = 4;
  long start_len_max = 2;
  long long fuel = 100000;
  long depth = 20;
};

// Deterministic in the seed; output always passes validate_instance.
InstanceSpec random_instance(unsigned long long seed, const RandomParams& params = {});

}  // namespace selrec
