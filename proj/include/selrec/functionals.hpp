#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "selrec/errors.hpp"
#include "selrec/seq.hpp"

namespace selrec {

template <class X, class R>
using Predicate = std::function<R(const X&)>;

// A selection function picks a point of X given a way of scoring points.
template <class X, class R>
using Selection = std::function<X(const Predicate<X, R>&)>;

// A generalized quantifier turns a scoring of points into a result directly.
template <class X, class R>
using Quantifier = std::function<R(const Predicate<X, R>&)>;

// Skewed selection: picks a whole tail of later points, not just one.
template <class X, class R>
using SkewedSelection = std::function<Seq<X>(const Predicate<X, R>&)>;

template <class R>
using LengthFn = std::function<long(const R&)>;

// Family of functionals indexed by position.
template <class F>
using PosFamily = std::function<F(long)>;

// Family of functionals indexed by the path of choices made so far.
template <class X, class F>
using PathFamily = std::function<F(const Path<X>&)>;

// Outcome functional on infinite sequences. A declared modulus d means the
// value depends only on entries at indices < d; instance-backed outcomes
// honour it exactly, derived ones may leave it unset.
template <class X, class R>
struct Outcome {
  std::function<R(const Seq<X>&)> eval;
  std::optional<long> modulus;
};

// Restrictions hold their base outcome and the fixed entries behind shared
// pointers. Recursors stack thousands of them, and the fixed entries can be
// closures that themselves hold earlier restrictions, so a by-value capture
// of either would copy chains of chains; behind shared nodes every copy of a
// restricted outcome is constant-size.
template <class X, class R>
Outcome<X, R> restrict_outcome(const Outcome<X, R>& q, Path<X> s) {
  auto held = std::make_shared<const Outcome<X, R>>(q);
  auto fixed = std::make_shared<const Path<X>>(std::move(s));
  Outcome<X, R> out;
  out.eval = [held, fixed](const Seq<X>& beta) { return held->eval(prepend(*fixed, beta)); };
  if (q.modulus) {
    long d = *q.modulus - static_cast<long>(fixed->size());
    out.modulus = d > 0 ? d : 0;
  }
  return out;
}

template <class X, class R>
Outcome<X, R> restrict1(const Outcome<X, R>& q, X x) {
  auto held = std::make_shared<const Outcome<X, R>>(q);
  auto fixed = std::make_shared<const X>(std::move(x));
  Outcome<X, R> out;
  out.eval = [held, fixed](const Seq<X>& beta) { return held->eval(cons(*fixed, beta)); };
  if (q.modulus) {
    long d = *q.modulus - 1;
    out.modulus = d > 0 ? d : 0;
  }
  return out;
}

// Stopping functional with a declared modulus and a declared bound on its
// values. eval checks the bound on every call.
template <class X>
struct OmegaFn {
  std::function<long(const Seq<X>&)> raw;
  long modulus = 0;
  long bound = 0;

  long eval(const Seq<X>& alpha) const {
    long v = raw(alpha);
    if (v > bound)
      throw ContractViolation("omega value " + std::to_string(v) +
                              " exceeds declared bound " + std::to_string(bound));
    return v;
  }
};

template <class X>
OmegaFn<X> restrict_omega(const OmegaFn<X>& w, Path<X> s) {
  OmegaFn<X> out;
  out.raw = [w, s](const Seq<X>& beta) { return w.raw(prepend(s, beta)); };
  long d = w.modulus - static_cast<long>(s.size());
  out.modulus = d > 0 ? d : 0;
  out.bound = w.bound;
  return out;
}

}  // namespace selrec
