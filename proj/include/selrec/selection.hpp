#pragma once

#include <memory>
#include <vector>

#include "selrec/functionals.hpp"
#include "selrec/seq.hpp"

namespace selrec {

// The quantifier a selection function attains: apply p to the chosen point.
// Monoid homomorphism with respect to the products below.
template <class X, class R>
Quantifier<X, R> sel_to_quant(Selection<X, R> eps) {
  return [eps](const Predicate<X, R>& p) { return p(eps(p)); };
}

// Products consume predicates over short paths; a pair is a two-entry path.

template <class X, class R>
Quantifier<Path<X>, R> prod_quant(Quantifier<X, R> phi, Quantifier<X, R> psi) {
  return [phi, psi](const Predicate<Path<X>, R>& p) {
    return phi([psi, p](const X& x) {
      return psi([p, x](const X& y) { return p(Path<X>{x, y}); });
    });
  };
}

template <class X, class R>
Quantifier<Path<X>, R> dep_prod_quant(Quantifier<X, R> phi,
                                      std::function<Quantifier<X, R>(const X&)> psi) {
  return [phi, psi](const Predicate<Path<X>, R>& p) {
    return phi([psi, p](const X& x) {
      return psi(x)([p, x](const X& y) { return p(Path<X>{x, y}); });
    });
  };
}

template <class X, class R>
Selection<Path<X>, R> prod_sel(Selection<X, R> eps, Selection<X, R> delta) {
  return [eps, delta](const Predicate<Path<X>, R>& p) -> Path<X> {
    auto b = [delta, p](const X& x) -> X {
      return delta([p, x](const X& y) { return p(Path<X>{x, y}); });
    };
    X a = eps([p, b](const X& x) { return p(Path<X>{x, b(x)}); });
    return Path<X>{a, b(a)};
  };
}

template <class X, class R>
Selection<Path<X>, R> dep_prod_sel(Selection<X, R> eps,
                                   std::function<Selection<X, R>(const X&)> delta) {
  return [eps, delta](const Predicate<Path<X>, R>& p) -> Path<X> {
    auto b = [delta, p](const X& x) -> X {
      return delta(x)([p, x](const X& y) { return p(Path<X>{x, y}); });
    };
    X a = eps([p, b](const X& x) { return p(Path<X>{x, b(x)}); });
    return Path<X>{a, b(a)};
  };
}

// Selections whose points are whole sequences.
template <class X, class R>
using SeqSelection = Selection<Seq<X>, R>;

// Skewed product: the left factor sees only the head coordinate but chooses
// the entire sequence; the head of the returned Seq with its tail forms the
// product pair.
template <class X, class R>
SeqSelection<X, R> skewed_prod(SkewedSelection<X, R> eps, SeqSelection<X, R> delta) {
  return [eps, delta](const Predicate<Seq<X>, R>& p) -> Seq<X> {
    auto b = [delta, p](const X& x) -> Seq<X> {
      return delta([p, x](const Seq<X>& beta) { return p(cons(x, beta)); });
    };
    return eps([p, b](const X& x) { return p(cons(x, b(x))); });
  };
}

template <class X, class R>
SeqSelection<X, R> dep_skewed_prod(SkewedSelection<X, R> eps,
                                   std::function<SeqSelection<X, R>(const X&)> delta) {
  return [eps, delta](const Predicate<Seq<X>, R>& p) -> Seq<X> {
    auto b = [delta, p](const X& x) -> Seq<X> {
      return delta(x)([p, x](const Seq<X>& beta) { return p(cons(x, beta)); });
    };
    return eps([p, b](const X& x) { return p(cons(x, b(x))); });
  };
}

namespace detail {

template <class X, class R>
Path<X> finite_prod_from(const std::shared_ptr<const std::vector<Selection<X, R>>>& sels,
                         size_t k, const Predicate<Path<X>, R>& p) {
  if (k == sels->size()) return Path<X>{};
  auto b = [sels, k, p](const X& x) -> Path<X> {
    Predicate<Path<X>, R> px = [p, x](const Path<X>& t) {
      Path<X> full{x};
      full.insert(full.end(), t.begin(), t.end());
      return p(full);
    };
    return finite_prod_from(sels, k + 1, px);
  };
  X a = (*sels)[k]([b, p](const X& x) {
    Path<X> full{x};
    Path<X> t = b(x);
    full.insert(full.end(), t.begin(), t.end());
    return p(full);
  });
  Path<X> out{a};
  Path<X> t = b(a);
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

}  // namespace detail

// Right-nested fold of binary products; a two-element list coincides with
// prod_sel on two-entry paths.
template <class X, class R>
Selection<Path<X>, R> finite_prod(std::vector<Selection<X, R>> sels) {
  auto shared = std::make_shared<const std::vector<Selection<X, R>>>(std::move(sels));
  return [shared](const Predicate<Path<X>, R>& p) {
    return detail::finite_prod_from(shared, 0, p);
  };
}

}  // namespace selrec
