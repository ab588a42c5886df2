#pragma once

#include <functional>
#include <string>
#include <vector>

#include "selrec/domain.hpp"
#include "selrec/fuel.hpp"
#include "selrec/functionals.hpp"
#include "selrec/seq.hpp"

namespace selrec {

// Zeroes out a sequence from the first point where omega fires on a
// zero-extended initial segment; unchanged before that.
template <class X>
Seq<X> alpha_omega(const OmegaFn<X>& omega, Seq<X> alpha, X zero) {
  return Seq<X>::from_fn([omega, alpha, zero](long i) {
    for (long k = 0; k <= i + 1; ++k) {
      if (omega.eval(init_seg_zero(alpha, k, zero)) < k) return zero;
    }
    return alpha.at(i);
  });
}

// Least n with omega(zero-extended initial segment of length n) < n. The
// scan is capped by omega applied to the zeroed-out sequence above, which
// serves as the proven upper bound; the declared bound of omega is
// cross-checked on the way.
template <class X>
long chi(const OmegaFn<X>& omega, const Seq<X>& alpha, X zero) {
  long limit = omega.eval(alpha_omega(omega, alpha, zero)) + 1;
  for (long n = 0; n <= limit; ++n) {
    if (omega.eval(init_seg_zero(alpha, n, zero)) < n) {
      if (n > omega.bound + 1)
        throw ContractViolation("stopping point " + std::to_string(n) +
                                " exceeds declared bound " + std::to_string(omega.bound));
      return n;
    }
  }
  throw SearchFailed("no stopping point within " + std::to_string(limit));
}

// Offset variant: least i with omega(zero-extended initial segment of
// length i) < i + k, searched below the stopping point of omega with k
// subtracted (cut-off).
template <class X>
long chi_plus(long k, const OmegaFn<X>& omega, const Seq<X>& alpha, X zero) {
  if (k == 0) return chi(omega, alpha, zero);
  OmegaFn<X> cut;
  cut.raw = [omega, k](const Seq<X>& beta) {
    long v = omega.eval(beta);
    return v > k ? v - k : 0;
  };
  cut.modulus = omega.modulus;
  cut.bound = omega.bound > k ? omega.bound - k : 0;
  long cap = chi(cut, alpha, zero);
  for (long i = 0; i <= cap; ++i) {
    if (omega.eval(init_seg_zero(alpha, i, zero)) < i + k) return i;
  }
  throw SearchFailed("no offset stopping point within " + std::to_string(cap));
}

// A point alpha, a position n and a predicate p with: n is the value of the
// stopping functional at alpha, alpha(n) is what the n-th selection picks
// under p, and p at alpha(n) gives the outcome of alpha itself.
struct SpectorSolution {
  long n = 0;
  Seq<Value> alpha = zero_seq();
  std::vector<Result> p_table;  // indexed by Value code
};

struct EquationCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct SpectorReport {
  std::vector<EquationCheck> checks;
  bool pass = false;
};

SpectorSolution solve_spector_equations(const PosFamily<Selection<Value, Result>>& sel,
                                        const Outcome<Value, Result>& q,
                                        const OmegaFn<Value>& omega, int x_card,
                                        FuelHandle fuel);

SpectorReport verify_spector(const SpectorSolution& sol,
                             const PosFamily<Selection<Value, Result>>& sel,
                             const Outcome<Value, Result>& q,
                             const OmegaFn<Value>& omega, FuelHandle fuel);

// The recursion's own output together with the predicates its unfolding
// applies the selections to, exposed position by position.
struct MainWitness {
  Seq<Value> alpha = zero_seq();
  std::function<Predicate<Value, Result>(long)> p_at;
};

MainWitness main_spec_witness(const PosFamily<Selection<Value, Result>>& sel,
                              const LengthFn<Result>& len,
                              const Outcome<Value, Result>& q, FuelHandle fuel);

}  // namespace selrec
