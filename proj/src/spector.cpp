#include "selrec/spector.hpp"

#include <algorithm>
#include <utility>

#include "selrec/barrec.hpp"

namespace selrec {

namespace {

using RN = std::pair<Result, long>;

std::optional<long> merged_modulus(const Outcome<Value, Result>& q,
                                   const OmegaFn<Value>& omega) {
  if (!q.modulus) return std::nullopt;
  return std::max(*q.modulus, omega.modulus);
}

}  // namespace

SpectorSolution solve_spector_equations(const PosFamily<Selection<Value, Result>>& sel,
                                        const Outcome<Value, Result>& q,
                                        const OmegaFn<Value>& omega, int x_card,
                                        FuelHandle fuel) {
  // Pair the outcome with the stopping functional and run the explicitly
  // controlled product with the stopping value as length.
  PosFamily<Selection<Value, RN>> sel2 = [sel](long n) {
    return Selection<Value, RN>([sel, n](const Predicate<Value, RN>& p) {
      return sel(n)([p](const Value& x) { return p(x).first; });
    });
  };
  Outcome<Value, RN> q2{
      [q, omega](const Seq<Value>& a) { return RN{q.eval(a), omega.eval(a)}; },
      merged_modulus(q, omega)};
  LengthFn<RN> len2 = [](const RN& r) { return r.second; };

  SpectorSolution sol;
  sol.alpha = eps<Value, RN>(0, sel2, len2, q2, zero_value(), fuel);
  sol.n = omega.eval(sol.alpha);

  Path<Value> t = init_seg(sol.alpha, sol.n);
  for (int cx = 0; cx < x_card; ++cx) {
    auto qtx = restrict_outcome(q2, extend(t, Value{cx}));
    Seq<Value> tail = eps<Value, RN>(sol.n + 1, sel2, len2, qtx, zero_value(), fuel);
    sol.p_table.push_back(qtx.eval(tail).first);
  }
  return sol;
}

SpectorReport verify_spector(const SpectorSolution& sol,
                             const PosFamily<Selection<Value, Result>>& sel,
                             const Outcome<Value, Result>& q,
                             const OmegaFn<Value>& omega, FuelHandle) {
  SpectorReport report;
  Predicate<Value, Result> p = [&sol](const Value& x) {
    return sol.p_table.at(static_cast<size_t>(x.code));
  };

  long omega_alpha = omega.eval(sol.alpha);
  report.checks.push_back({"n = omega(alpha)", std::to_string(sol.n),
                           std::to_string(omega_alpha), sol.n == omega_alpha});

  Value picked = sel(sol.n)(p);
  Value at_n = sol.alpha.at(sol.n);
  report.checks.push_back({"alpha(n) = sel_n(p)", std::to_string(at_n.code),
                           std::to_string(picked.code), at_n == picked});

  Result lhs = sol.p_table.at(static_cast<size_t>(at_n.code));
  Result rhs = q.eval(sol.alpha);
  report.checks.push_back({"p(alpha(n)) = q(alpha)", std::to_string(lhs.code),
                           std::to_string(rhs.code), lhs == rhs});

  report.pass = true;
  for (const auto& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

MainWitness main_spec_witness(const PosFamily<Selection<Value, Result>>& sel,
                              const LengthFn<Result>& len,
                              const Outcome<Value, Result>& q, FuelHandle fuel) {
  MainWitness w;
  w.alpha = eps<Value, Result>(0, sel, len, q, zero_value(), fuel);
  Seq<Value> alpha = w.alpha;
  w.p_at = [sel, len, q, alpha, fuel](long n) {
    return Predicate<Value, Result>([sel, len, q, alpha, fuel, n](const Value& x) {
      auto qtx = restrict_outcome(q, extend(init_seg(alpha, n), x));
      return qtx.eval(eps<Value, Result>(n + 1, sel, len, qtx, zero_value(), fuel));
    });
  };
  return w;
}

}  // namespace selrec
