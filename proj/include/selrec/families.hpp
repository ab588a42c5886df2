#pragma once

#include <memory>

#include "selrec/functionals.hpp"
#include "selrec/instance.hpp"

namespace selrec {

// Executable functionals built from an InstanceSpec. Families are keyed by
// the full predicate graph, so two predicates that agree pointwise are
// treated identically; that is what makes extensional comparison of derived
// and native recursors meaningful.
struct InstanceFamilies {
  std::shared_ptr<const InstanceSpec> spec;
  PosFamily<Selection<Value, Result>> sel_at;
  PathFamily<Value, Selection<Value, Result>> sel_on;
  PosFamily<Quantifier<Value, Result>> quant_at;
  PathFamily<Value, Quantifier<Value, Result>> quant_on;
  PosFamily<SkewedSelection<Value, Result>> skew_at;
  PathFamily<Value, SkewedSelection<Value, Result>> skew_on;
  // Selections scoring whole sequences through the instance outcome; the
  // path-bounded recursion consumes these.
  PathFamily<Value, Selection<Value, Seq<Value>>> seqsel_on;
  Outcome<Value, Result> outcome;
  LengthFn<Result> length;
  OmegaFn<Value> omega;
  Path<Value> start;
  long start_index = 0;
  long long fuel_budget = 100000;
  long depth = 20;
};

InstanceFamilies build_families(const InstanceSpec& spec);

// Canonical selection: the value whose result code is least, least value on
// ties. Total and deterministic for any finite cardinality.
Selection<Value, Result> argmin_selection(int x_card);

// Boolean search selection: picks code 1 when the predicate maps it to a
// nonzero result, code 0 otherwise.
Selection<Value, Result> hilbert_selection();

long max_length_value(const InstanceSpec& spec);

}  // namespace selrec
