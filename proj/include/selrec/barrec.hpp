#pragma once

#include <utility>

#include "selrec/fuel.hpp"
#include "selrec/functionals.hpp"
#include "selrec/seq.hpp"

// Recursion schemes over an infinite product of a fixed ground type X with
// outcomes in R. Position-indexed schemes take the next index n; dependent
// ones take the path of choices made so far. Schemes returning a Seq are
// demand-driven: one fuel tick is paid per node, when that node is first
// forced. Schemes returning a bare R evaluate eagerly.

namespace selrec {

// Explicitly controlled product of selection functions. Stops once the
// outcome of the all-zero extension has length below the position.
template <class X, class R>
Seq<X> eps(long n, PosFamily<Selection<X, R>> sel, LengthFn<R> len,
           Outcome<X, R> q, X zero, FuelHandle fuel) {
  return Seq<X>::defer([=]() -> Seq<X> {
    tick(fuel);
    if (len(q.eval(Seq<X>::constant(zero))) < n) return Seq<X>::constant(zero);
    auto tail_for = [=](const X& x) {
      return eps<X, R>(n + 1, sel, len, restrict1(q, x), zero, fuel);
    };
    Predicate<X, R> p = [=](const X& x) {
      return restrict1(q, x).eval(tail_for(x));
    };
    X c = sel(n)(p);
    return cons(c, tail_for(c));
  });
}

// Quantifier form of the same recursion.
template <class X, class R>
R epq(long n, PosFamily<Quantifier<X, R>> quant, LengthFn<R> len,
      Outcome<X, R> q, X zero, FuelHandle fuel) {
  tick(fuel);
  R base = q.eval(Seq<X>::constant(zero));
  if (len(base) < n) return base;
  return quant(n)([=](const X& x) {
    return epq<X, R>(n + 1, quant, len, restrict1(q, x), zero, fuel);
  });
}

// Dependent variants: the family sees the finished prefix.
template <class X, class R>
Seq<X> eps_dep(Path<X> s, PathFamily<X, Selection<X, R>> sel, LengthFn<R> len,
               Outcome<X, R> q, X zero, FuelHandle fuel) {
  return Seq<X>::defer([=]() -> Seq<X> {
    tick(fuel);
    if (len(q.eval(Seq<X>::constant(zero))) < static_cast<long>(s.size()))
      return Seq<X>::constant(zero);
    auto tail_for = [=](const X& x) {
      return eps_dep<X, R>(extend(s, x), sel, len, restrict1(q, x), zero, fuel);
    };
    Predicate<X, R> p = [=](const X& x) {
      return restrict1(q, x).eval(tail_for(x));
    };
    X c = sel(s)(p);
    return cons(c, tail_for(c));
  });
}

template <class X, class R>
R epq_dep(Path<X> s, PathFamily<X, Quantifier<X, R>> quant, LengthFn<R> len,
          Outcome<X, R> q, X zero, FuelHandle fuel) {
  tick(fuel);
  R base = q.eval(Seq<X>::constant(zero));
  if (len(base) < static_cast<long>(s.size())) return base;
  return quant(s)([=](const X& x) {
    return epq_dep<X, R>(extend(s, x), quant, len, restrict1(q, x), zero, fuel);
  });
}

// Implicitly controlled product: no stopping test. Terminates per read as
// long as the outcome has a finite modulus; total values may still demand
// unbounded work, which the fuel budget converts into FuelExhausted.
template <class X, class R>
Seq<X> ips(long n, PosFamily<Selection<X, R>> sel, Outcome<X, R> q, FuelHandle fuel) {
  return Seq<X>::defer([=]() -> Seq<X> {
    tick(fuel);
    auto tail_for = [=](const X& x) {
      return ips<X, R>(n + 1, sel, restrict1(q, x), fuel);
    };
    Predicate<X, R> p = [=](const X& x) {
      return restrict1(q, x).eval(tail_for(x));
    };
    X c = sel(n)(p);
    return cons(c, tail_for(c));
  });
}

template <class X, class R>
Seq<X> ips_dep(Path<X> s, PathFamily<X, Selection<X, R>> sel, Outcome<X, R> q,
               FuelHandle fuel) {
  return Seq<X>::defer([=]() -> Seq<X> {
    tick(fuel);
    auto tail_for = [=](const X& x) {
      return ips_dep<X, R>(extend(s, x), sel, restrict1(q, x), fuel);
    };
    Predicate<X, R> p = [=](const X& x) {
      return restrict1(q, x).eval(tail_for(x));
    };
    X c = sel(s)(p);
    return cons(c, tail_for(c));
  });
}

// Quantifier form of the implicit product, taken literally. It has no value
// for most quantifier families; it exists to witness that, so there is no
// shortcut for constant outcomes.
template <class X, class R>
R ipq_naive(long n, PosFamily<Quantifier<X, R>> quant, Outcome<X, R> q,
            FuelHandle fuel) {
  tick(fuel);
  return quant(n)([=](const X& x) {
    return ipq_naive<X, R>(n + 1, quant, restrict1(q, x), fuel);
  });
}

// Iterated skewed product: the selection at each position picks the whole
// remaining tail at once.
template <class X, class R>
Seq<X> mbr(long n, PosFamily<SkewedSelection<X, R>> sel, Outcome<X, R> q,
           FuelHandle fuel) {
  return Seq<X>::defer([=]() -> Seq<X> {
    tick(fuel);
    Predicate<X, R> p = [=](const X& x) {
      auto qx = restrict1(q, x);
      return qx.eval(mbr<X, R>(n + 1, sel, qx, fuel));
    };
    return sel(n)(p);
  });
}

template <class X, class R>
Seq<X> mbr_dep(Path<X> s, PathFamily<X, SkewedSelection<X, R>> sel, Outcome<X, R> q,
               FuelHandle fuel) {
  return Seq<X>::defer([=]() -> Seq<X> {
    tick(fuel);
    Predicate<X, R> p = [=](const X& x) {
      auto qx = restrict1(q, x);
      return qx.eval(mbr_dep<X, R>(extend(s, x), sel, qx, fuel));
    };
    return sel(s)(p);
  });
}

// Prefix-emitting variant of the dependent skewed product: the outcome stays
// fixed on whole sequences and the growing prefix is re-emitted each round.
template <class X, class R>
Seq<X> mbr_prefix(Path<X> s, PathFamily<X, SkewedSelection<X, R>> sel,
                  Outcome<X, R> q_full, FuelHandle fuel) {
  // The prefix must be readable without running the selection: probes from
  // enclosing levels read only finitely deep, and once the prefix covers the
  // outcome's modulus those reads stay inside it. Deferring the emission
  // grounds the regress there.
  Seq<X> emitted = Seq<X>::defer([=]() -> Seq<X> {
    tick(fuel);
    Predicate<X, R> p = [=](const X& x) {
      return q_full.eval(mbr_prefix<X, R>(extend(s, x), sel, q_full, fuel));
    };
    return sel(s)(p);
  });
  return prepend(s, emitted);
}

// Path-bounded recursion on a stopping functional, selection form. The
// selections here score candidate continuations by the sequences they lead
// to. Eager: the stopping bound keeps the call tree finite.
template <class X>
Seq<X> sbr(Path<X> s, PathFamily<X, Selection<X, Seq<X>>> sel, OmegaFn<X> omega,
           X zero, FuelHandle fuel) {
  tick(fuel);
  Seq<X> padded = overwrite(s, Seq<X>::constant(zero));
  if (omega.eval(padded) < static_cast<long>(s.size())) return padded;
  Predicate<X, Seq<X>> p = [=](const X& x) {
    return sbr<X>(extend(s, x), sel, omega, zero, fuel);
  };
  X c = sel(s)(p);
  return sbr<X>(extend(s, c), sel, omega, zero, fuel);
}

// Quantifier form over a fixed whole-sequence outcome.
template <class X, class R>
R br(Path<X> s, PathFamily<X, Quantifier<X, R>> quant, OmegaFn<X> omega,
     Outcome<X, R> q_full, X zero, FuelHandle fuel) {
  tick(fuel);
  Seq<X> padded = overwrite(s, Seq<X>::constant(zero));
  if (omega.eval(padded) < static_cast<long>(s.size())) return q_full.eval(padded);
  return quant(s)([=](const X& x) {
    return br<X, R>(extend(s, x), quant, omega, q_full, zero, fuel);
  });
}

}  // namespace selrec
