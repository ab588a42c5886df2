#pragma once

#include "selrec/domain.hpp"
#include "selrec/fuel.hpp"
#include "selrec/functionals.hpp"
#include "selrec/seq.hpp"

// Each function below reconstructs one recursion scheme from another one,
// taking exactly the data the reconstructed scheme would take. All of them
// are extensionally interchangeable with the native scheme of the same
// shape; the harness checks that on seeded instances.

namespace selrec {

// Explicit selection product from its quantifier form, run at sequences as
// the inner result type.
Seq<Value> eps_via_epq(long n, PosFamily<Selection<Value, Result>> sel,
                       LengthFn<Result> len, Outcome<Value, Result> q,
                       FuelHandle fuel);

// Dependent explicit product from the position-indexed one. The inner ground
// type is "next value as a function of the history"; outputs are decoded by
// instantiating each entry along the decoded prefix.
Seq<Value> eps_dep_via_eps(Path<Value> s, PathFamily<Value, Selection<Value, Result>> sel,
                           LengthFn<Result> len, Outcome<Value, Result> q,
                           FuelHandle fuel);

// Dependent explicit quantifier product by running the path-bounded
// quantifier recursion with the outcome's length as stopping functional.
Result epq_dep_via_br(Path<Value> s, PathFamily<Value, Quantifier<Value, Result>> quant,
                      LengthFn<Result> len, Outcome<Value, Result> q, int r_card,
                      FuelHandle fuel);

// Path-bounded selection recursion from the dependent explicit product,
// pairing every sequence with its stopping value.
Seq<Value> sbr_via_eps_dep(Path<Value> s, PathFamily<Value, Selection<Value, Seq<Value>>> sel,
                           OmegaFn<Value> omega, FuelHandle fuel);

// Dependent implicit product from the position-indexed one; same decoding as
// eps_dep_via_eps.
Seq<Value> ips_dep_via_ips(Path<Value> s, PathFamily<Value, Selection<Value, Result>> sel,
                           Outcome<Value, Result> q, FuelHandle fuel);

// Dependent skewed product from the position-indexed one. Inner ground
// elements carry a flag and a history-reading tail emitter.
Seq<Value> mbr_dep_via_mbr(Path<Value> s, PathFamily<Value, SkewedSelection<Value, Result>> sel,
                           Outcome<Value, Result> q, FuelHandle fuel);

// Prefix-emitting skewed recursion from the dependent one and back.
Seq<Value> mbr_prefix_via_mbr_dep(Path<Value> s,
                                  PathFamily<Value, SkewedSelection<Value, Result>> sel,
                                  Outcome<Value, Result> q_full, FuelHandle fuel);
Seq<Value> mbr_dep_via_mbr_prefix(Path<Value> s,
                                  PathFamily<Value, SkewedSelection<Value, Result>> sel,
                                  Outcome<Value, Result> q, FuelHandle fuel);

// Skewed product from implicit selection products over rows of flagged
// values: injected singletons keep the flag, selected tails drop it, and the
// flattening reads the first dropped row to the end.
Seq<Value> mbr_via_ips(long n, PosFamily<SkewedSelection<Value, Result>> sel,
                       Outcome<Value, Result> q, FuelHandle fuel);

// Dependent implicit product from the dependent skewed one, with nonempty
// chunks of values as the inner ground type.
Seq<Value> ips_dep_via_mbr_dep(Path<Value> s, PathFamily<Value, Selection<Value, Result>> sel,
                               Outcome<Value, Result> q, FuelHandle fuel);

// Dependent explicit quantifier product from the dependent implicit
// selection product, over values tagged with either a ground value or an
// early result.
Result epq_dep_via_ips_dep(Path<Value> s, PathFamily<Value, Quantifier<Value, Result>> quant,
                           LengthFn<Result> len, Outcome<Value, Result> q, int r_card,
                           FuelHandle fuel);

}  // namespace selrec
