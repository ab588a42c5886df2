#include "selrec/harness.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "selrec/barrec.hpp"
#include "selrec/bigstack.hpp"
#include "selrec/interdef.hpp"
#include "selrec/selection.hpp"
#include "selrec/spector.hpp"

namespace selrec {

using json = nlohmann::ordered_json;

std::vector<SeededInstance> seeded_instances(long count, const RandomParams& params) {
  std::vector<SeededInstance> out;
  out.reserve(static_cast<size_t>(count));
  for (long seed = 1; seed <= count; ++seed)
    out.push_back({seed, random_instance(static_cast<unsigned long long>(seed), params)});
  return out;
}

const std::vector<std::string>& matrix_cells() {
  static const std::vector<std::string> cells = {
      "eps_via_epq",      "EPS_via_eps", "EPQ_via_BR", "SBR_via_EPS",
      "IPS_via_ips",      "MBR_via_mbr", "MBRprime_via_MBR", "MBR_via_MBRprime",
      "mbr_via_ips",      "IPS_via_MBR", "EPQ_via_IPS"};
  return cells;
}

std::string native_of_cell(const std::string& derived) {
  auto pos = derived.find("_via_");
  if (pos == std::string::npos) return derived;
  return derived.substr(0, pos);
}

bool recursor_returns_seq(const std::string& name) {
  return !(name == "epq" || name == "EPQ" || name == "BR" || name == "EPQ_via_BR" ||
           name == "EPQ_via_IPS");
}

bool known_recursor(const std::string& name) {
  static const std::vector<std::string> natives = {"eps", "epq", "EPS", "EPQ", "ips", "IPS",
                                                   "mbr", "MBR", "MBRprime", "SBR", "BR"};
  for (const auto& n : natives)
    if (n == name) return true;
  for (const auto& c : matrix_cells())
    if (c == name) return true;
  return false;
}

Seq<Value> eval_seq_recursor(const std::string& name, const InstanceFamilies& fam,
                             FuelHandle fuel) {
  if (name == "eps")
    return eps<Value, Result>(fam.start_index, fam.sel_at, fam.length, fam.outcome,
                              zero_value(), fuel);
  if (name == "EPS")
    return eps_dep<Value, Result>(fam.start, fam.sel_on, fam.length, fam.outcome,
                                  zero_value(), fuel);
  if (name == "ips")
    return ips<Value, Result>(fam.start_index, fam.sel_at, fam.outcome, fuel);
  if (name == "IPS") return ips_dep<Value, Result>(fam.start, fam.sel_on, fam.outcome, fuel);
  if (name == "mbr")
    return mbr<Value, Result>(fam.start_index, fam.skew_at, fam.outcome, fuel);
  if (name == "MBR") return mbr_dep<Value, Result>(fam.start, fam.skew_on, fam.outcome, fuel);
  if (name == "MBRprime")
    return mbr_prefix<Value, Result>(fam.start, fam.skew_on, fam.outcome, fuel);
  if (name == "SBR") return sbr<Value>(fam.start, fam.seqsel_on, fam.omega, zero_value(), fuel);
  if (name == "eps_via_epq")
    return eps_via_epq(fam.start_index, fam.sel_at, fam.length, fam.outcome, fuel);
  if (name == "EPS_via_eps")
    return eps_dep_via_eps(fam.start, fam.sel_on, fam.length, fam.outcome, fuel);
  if (name == "SBR_via_EPS") return sbr_via_eps_dep(fam.start, fam.seqsel_on, fam.omega, fuel);
  if (name == "IPS_via_ips") return ips_dep_via_ips(fam.start, fam.sel_on, fam.outcome, fuel);
  if (name == "MBR_via_mbr") return mbr_dep_via_mbr(fam.start, fam.skew_on, fam.outcome, fuel);
  if (name == "MBRprime_via_MBR")
    return mbr_prefix_via_mbr_dep(fam.start, fam.skew_on, fam.outcome, fuel);
  if (name == "MBR_via_MBRprime")
    return mbr_dep_via_mbr_prefix(fam.start, fam.skew_on, fam.outcome, fuel);
  if (name == "mbr_via_ips")
    return mbr_via_ips(fam.start_index, fam.skew_at, fam.outcome, fuel);
  if (name == "IPS_via_MBR")
    return ips_dep_via_mbr_dep(fam.start, fam.sel_on, fam.outcome, fuel);
  throw std::invalid_argument("not a sequence-valued recursor: " + name);
}

Result eval_result_recursor(const std::string& name, const InstanceFamilies& fam,
                            FuelHandle fuel) {
  if (name == "epq")
    return epq<Value, Result>(fam.start_index, fam.quant_at, fam.length, fam.outcome,
                              zero_value(), fuel);
  if (name == "EPQ")
    return epq_dep<Value, Result>(fam.start, fam.quant_on, fam.length, fam.outcome,
                                  zero_value(), fuel);
  if (name == "BR")
    return br<Value, Result>(fam.start, fam.quant_on, fam.omega, fam.outcome, zero_value(),
                             fuel);
  if (name == "EPQ_via_BR")
    return epq_dep_via_br(fam.start, fam.quant_on, fam.length, fam.outcome, fam.spec->r_card,
                          fuel);
  if (name == "EPQ_via_IPS")
    return epq_dep_via_ips_dep(fam.start, fam.quant_on, fam.length, fam.outcome,
                               fam.spec->r_card, fuel);
  throw std::invalid_argument("not a result-valued recursor: " + name);
}

CheckReport compare_seq_evals(const std::string& derived, const std::string& native,
                              const std::vector<SeededInstance>& instances, const SeqEval& lhs,
                              const SeqEval& rhs, long depth, long long fuel_override) {
  CheckReport report;
  report.derived = derived;
  report.native = native;
  for (const auto& inst : instances) {
    ++report.instances;
    InstanceFamilies fam = build_families(inst.spec);
    long long budget = fuel_override >= 0 ? fuel_override : fam.fuel_budget;
    auto fa = make_fuel(budget);
    auto fb = make_fuel(budget);
    try {
      Seq<Value> got = lhs(fam, fa);
      Seq<Value> want = rhs(fam, fb);
      for (long i = 0; i < depth; ++i) {
        int g = got.at(i).code;
        int w = want.at(i).code;
        if (g != w) {
          report.failures.push_back({inst.seed, i, std::to_string(w), std::to_string(g)});
          break;
        }
      }
    } catch (const FuelExhausted&) {
      report.failures.push_back({inst.seed, -1, "a value", "FuelExhausted"});
    } catch (const std::exception& e) {
      report.failures.push_back({inst.seed, -1, "a value", std::string("error: ") + e.what()});
    }
    report.fuel_used += fuel_used(fa) + fuel_used(fb);
  }
  return report;
}

CheckReport check_cell(const std::string& derived, const std::vector<SeededInstance>& instances,
                       long depth, long long fuel_override) {
  std::string native = native_of_cell(derived);
  if (recursor_returns_seq(derived)) {
    auto lhs = [derived](const InstanceFamilies& fam, FuelHandle fuel) {
      return eval_seq_recursor(derived, fam, fuel);
    };
    auto rhs = [native](const InstanceFamilies& fam, FuelHandle fuel) {
      return eval_seq_recursor(native, fam, fuel);
    };
    return compare_seq_evals(derived, native, instances, lhs, rhs, depth, fuel_override);
  }
  CheckReport report;
  report.derived = derived;
  report.native = native;
  for (const auto& inst : instances) {
    ++report.instances;
    InstanceFamilies fam = build_families(inst.spec);
    long long budget = fuel_override >= 0 ? fuel_override : fam.fuel_budget;
    auto fa = make_fuel(budget);
    auto fb = make_fuel(budget);
    try {
      Result got = eval_result_recursor(derived, fam, fa);
      Result want = eval_result_recursor(native, fam, fb);
      if (!(got == want))
        report.failures.push_back(
            {inst.seed, -1, std::to_string(want.code), std::to_string(got.code)});
    } catch (const FuelExhausted&) {
      report.failures.push_back({inst.seed, -1, "a value", "FuelExhausted"});
    } catch (const std::exception& e) {
      report.failures.push_back({inst.seed, -1, "a value", std::string("error: ") + e.what()});
    }
    report.fuel_used += fuel_used(fa) + fuel_used(fb);
  }
  return report;
}

std::vector<CellFailure> check_restart_invariance(long seed, const InstanceFamilies& fam,
                                                  long i_max, long depth) {
  std::vector<CellFailure> out;
  try {
    auto fuel = make_fuel(fam.fuel_budget);
    Seq<Value> alpha = eps<Value, Result>(fam.start_index, fam.sel_at, fam.length, fam.outcome,
                                          zero_value(), fuel);
    for (long i = 0; i <= i_max; ++i) {
      Path<Value> t = init_seg(alpha, i);
      auto restarted_fuel = make_fuel(fam.fuel_budget);
      Seq<Value> beta =
          prepend(t, eps<Value, Result>(fam.start_index + i, fam.sel_at, fam.length,
                                        restrict_outcome(fam.outcome, t), zero_value(),
                                        restarted_fuel));
      for (long j = 0; j < depth; ++j) {
        if (alpha.at(j).code != beta.at(j).code) {
          out.push_back({seed, j, std::to_string(alpha.at(j).code),
                         "restart at " + std::to_string(i) + " gives " +
                             std::to_string(beta.at(j).code)});
          break;
        }
      }
    }
  } catch (const std::exception& e) {
    out.push_back({seed, -1, "an evaluation", std::string("error: ") + e.what()});
  }
  return out;
}

std::vector<CellFailure> check_pointwise_unfolding(long seed, const InstanceFamilies& fam,
                                                   long i_max) {
  std::vector<CellFailure> out;
  try {
    long n0 = fam.start_index;
    auto fuel = make_fuel(fam.fuel_budget);
    Seq<Value> alpha = eps<Value, Result>(n0, fam.sel_at, fam.length, fam.outcome, zero_value(),
                                          fuel);
    for (long i = 0; i <= i_max; ++i) {
      Path<Value> t = init_seg(alpha, i);
      auto qt = restrict_outcome(fam.outcome, t);
      Value expected = zero_value();
      if (!(fam.length(qt.eval(zero_seq())) < n0 + i)) {
        auto step_fuel = make_fuel(fam.fuel_budget);
        Predicate<Value, Result> p = [&](const Value& x) {
          auto qtx = restrict1(qt, x);
          return qtx.eval(eps<Value, Result>(n0 + i + 1, fam.sel_at, fam.length, qtx,
                                             zero_value(), step_fuel));
        };
        expected = fam.sel_at(n0 + i)(p);
      }
      if (alpha.at(i).code != expected.code)
        out.push_back(
            {seed, i, std::to_string(expected.code), std::to_string(alpha.at(i).code)});
    }
  } catch (const std::exception& e) {
    out.push_back({seed, -1, "an evaluation", std::string("error: ") + e.what()});
  }
  return out;
}

std::vector<CellFailure> defining_equation_failures(long seed, const InstanceFamilies& fam,
                                                    long depth) {
  std::vector<CellFailure> out;
  const auto& q = fam.outcome;
  long n0 = fam.start_index;
  const Path<Value>& s0 = fam.start;
  auto seq_expect = [&](const std::string& scheme, const Seq<Value>& got,
                        const Seq<Value>& want) {
    for (long j = 0; j < depth; ++j) {
      if (got.at(j).code != want.at(j).code) {
        out.push_back({seed, j, scheme + " unfolds to " + std::to_string(want.at(j).code),
                       std::to_string(got.at(j).code)});
        return;
      }
    }
  };
  auto result_expect = [&](const std::string& scheme, Result got, Result want) {
    if (!(got == want))
      out.push_back({seed, -1, scheme + " unfolds to " + std::to_string(want.code),
                     std::to_string(got.code)});
  };
  auto fresh = [&] { return make_fuel(fam.fuel_budget); };

  try {
    {
      Seq<Value> a =
          eps<Value, Result>(n0, fam.sel_at, fam.length, q, zero_value(), fresh());
      Seq<Value> b = zero_seq();
      if (fam.length(q.eval(zero_seq())) < n0) {
        b = zero_seq();
      } else {
        auto f = fresh();
        Predicate<Value, Result> p = [&](const Value& x) {
          auto qx = restrict1(q, x);
          return qx.eval(
              eps<Value, Result>(n0 + 1, fam.sel_at, fam.length, qx, zero_value(), f));
        };
        Value c = fam.sel_at(n0)(p);
        b = cons(c, eps<Value, Result>(n0 + 1, fam.sel_at, fam.length, restrict1(q, c),
                                       zero_value(), f));
      }
      seq_expect("eps", a, b);
    }
    {
      Result a = epq<Value, Result>(n0, fam.quant_at, fam.length, q, zero_value(), fresh());
      Result base = q.eval(zero_seq());
      Result b;
      if (fam.length(base) < n0) {
        b = base;
      } else {
        auto f = fresh();
        b = fam.quant_at(n0)([&](const Value& x) {
          return epq<Value, Result>(n0 + 1, fam.quant_at, fam.length, restrict1(q, x),
                                    zero_value(), f);
        });
      }
      result_expect("epq", a, b);
    }
    {
      Seq<Value> a =
          eps_dep<Value, Result>(s0, fam.sel_on, fam.length, q, zero_value(), fresh());
      Seq<Value> b = zero_seq();
      if (fam.length(q.eval(zero_seq())) < static_cast<long>(s0.size())) {
        b = zero_seq();
      } else {
        auto f = fresh();
        Predicate<Value, Result> p = [&](const Value& x) {
          auto qx = restrict1(q, x);
          return qx.eval(eps_dep<Value, Result>(extend(s0, x), fam.sel_on, fam.length, qx,
                                                zero_value(), f));
        };
        Value c = fam.sel_on(s0)(p);
        b = cons(c, eps_dep<Value, Result>(extend(s0, c), fam.sel_on, fam.length,
                                           restrict1(q, c), zero_value(), f));
      }
      seq_expect("eps_dep", a, b);
    }
    {
      Result a =
          epq_dep<Value, Result>(s0, fam.quant_on, fam.length, q, zero_value(), fresh());
      Result base = q.eval(zero_seq());
      Result b;
      if (fam.length(base) < static_cast<long>(s0.size())) {
        b = base;
      } else {
        auto f = fresh();
        b = fam.quant_on(s0)([&](const Value& x) {
          return epq_dep<Value, Result>(extend(s0, x), fam.quant_on, fam.length,
                                        restrict1(q, x), zero_value(), f);
        });
      }
      result_expect("epq_dep", a, b);
    }
    {
      Seq<Value> a = ips<Value, Result>(n0, fam.sel_at, q, fresh());
      auto f = fresh();
      Predicate<Value, Result> p = [&](const Value& x) {
        auto qx = restrict1(q, x);
        return qx.eval(ips<Value, Result>(n0 + 1, fam.sel_at, qx, f));
      };
      Value c = fam.sel_at(n0)(p);
      Seq<Value> b = cons(c, ips<Value, Result>(n0 + 1, fam.sel_at, restrict1(q, c), f));
      seq_expect("ips", a, b);
    }
    {
      Seq<Value> a = ips_dep<Value, Result>(s0, fam.sel_on, q, fresh());
      auto f = fresh();
      Predicate<Value, Result> p = [&](const Value& x) {
        auto qx = restrict1(q, x);
        return qx.eval(ips_dep<Value, Result>(extend(s0, x), fam.sel_on, qx, f));
      };
      Value c = fam.sel_on(s0)(p);
      Seq<Value> b =
          cons(c, ips_dep<Value, Result>(extend(s0, c), fam.sel_on, restrict1(q, c), f));
      seq_expect("ips_dep", a, b);
    }
    {
      Seq<Value> a = mbr<Value, Result>(n0, fam.skew_at, q, fresh());
      auto f = fresh();
      Predicate<Value, Result> p = [&](const Value& x) {
        auto qx = restrict1(q, x);
        return qx.eval(mbr<Value, Result>(n0 + 1, fam.skew_at, qx, f));
      };
      Seq<Value> b = fam.skew_at(n0)(p);
      seq_expect("mbr", a, b);
    }
    {
      Seq<Value> a = mbr_dep<Value, Result>(s0, fam.skew_on, q, fresh());
      auto f = fresh();
      Predicate<Value, Result> p = [&](const Value& x) {
        auto qx = restrict1(q, x);
        return qx.eval(mbr_dep<Value, Result>(extend(s0, x), fam.skew_on, qx, f));
      };
      Seq<Value> b = fam.skew_on(s0)(p);
      seq_expect("mbr_dep", a, b);
    }
    {
      Seq<Value> a = mbr_prefix<Value, Result>(s0, fam.skew_on, q, fresh());
      auto f = fresh();
      Predicate<Value, Result> p = [&](const Value& x) {
        return q.eval(mbr_prefix<Value, Result>(extend(s0, x), fam.skew_on, q, f));
      };
      Seq<Value> b = prepend(s0, fam.skew_on(s0)(p));
      seq_expect("mbr_prefix", a, b);
    }
    {
      Seq<Value> a = sbr<Value>(s0, fam.seqsel_on, fam.omega, zero_value(), fresh());
      Seq<Value> padded = overwrite(s0, zero_seq());
      Seq<Value> b = zero_seq();
      if (fam.omega.eval(padded) < static_cast<long>(s0.size())) {
        b = padded;
      } else {
        auto f = fresh();
        Predicate<Value, Seq<Value>> p = [&](const Value& x) {
          return sbr<Value>(extend(s0, x), fam.seqsel_on, fam.omega, zero_value(), f);
        };
        Value c = fam.seqsel_on(s0)(p);
        b = sbr<Value>(extend(s0, c), fam.seqsel_on, fam.omega, zero_value(), f);
      }
      seq_expect("sbr", a, b);
    }
    {
      Result a = br<Value, Result>(s0, fam.quant_on, fam.omega, q, zero_value(), fresh());
      Seq<Value> padded = overwrite(s0, zero_seq());
      Result b;
      if (fam.omega.eval(padded) < static_cast<long>(s0.size())) {
        b = q.eval(padded);
      } else {
        auto f = fresh();
        b = fam.quant_on(s0)([&](const Value& x) {
          return br<Value, Result>(extend(s0, x), fam.quant_on, fam.omega, q, zero_value(), f);
        });
      }
      result_expect("br", a, b);
    }
  } catch (const std::exception& e) {
    out.push_back({seed, -1, "an evaluation", std::string("error: ") + e.what()});
  }
  return out;
}

bool check_spector_instance(const InstanceFamilies& fam, std::string* detail) {
  auto fuel = make_fuel(fam.fuel_budget);
  SpectorSolution sol =
      solve_spector_equations(fam.sel_at, fam.outcome, fam.omega, fam.spec->x_card, fuel);
  SpectorReport rep = verify_spector(sol, fam.sel_at, fam.outcome, fam.omega, fuel);
  if (detail) {
    if (rep.pass) {
      *detail = "n=" + std::to_string(sol.n);
    } else {
      for (const auto& c : rep.checks)
        if (!c.pass) {
          *detail = c.name + ": " + c.lhs + " vs " + c.rhs;
          break;
        }
    }
  }
  return rep.pass;
}

bool check_attainment_witness(const InstanceFamilies& fam, std::string* detail) {
  auto fuel = make_fuel(fam.fuel_budget);
  MainWitness w = main_spec_witness(fam.sel_at, fam.length, fam.outcome, fuel);
  Result attained = fam.outcome.eval(w.alpha);
  long bound = fam.length(attained);
  for (long n = 0; n <= bound; ++n) {
    auto p = w.p_at(n);
    Value picked = fam.sel_at(n)(p);
    if (w.alpha.at(n).code != picked.code) {
      if (detail)
        *detail = "position " + std::to_string(n) + ": stream has " +
                  std::to_string(w.alpha.at(n).code) + ", selection picks " +
                  std::to_string(picked.code);
      return false;
    }
    Result through = p(w.alpha.at(n));
    if (!(through == attained)) {
      if (detail)
        *detail = "position " + std::to_string(n) + ": predicate value " +
                  std::to_string(through.code) + " differs from outcome " +
                  std::to_string(attained.code);
      return false;
    }
  }
  if (detail) *detail = "checked positions 0.." + std::to_string(bound);
  return true;
}

namespace {

// All extensionally distinct boolean selection functions, indexed by the
// truth table of their response to the four boolean predicates.
Selection<Value, Result> bool_selection(int table) {
  return [table](const Predicate<Value, Result>& p) {
    size_t key = tuple_key({p(Value{0}).code, p(Value{1}).code}, 2);
    return Value{(table >> key) & 1};
  };
}

Predicate<Path<Value>, Result> bool_pair_predicate(int table) {
  return [table](const Path<Value>& s) {
    return Result{(table >> (s[0].code * 2 + s[1].code)) & 1};
  };
}

}  // namespace

bool selection_homomorphism_exhaustive(std::string* detail) {
  long checked = 0;
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      auto ea = bool_selection(a);
      auto eb = bool_selection(b);
      auto lhs = sel_to_quant<Path<Value>, Result>(prod_sel<Value, Result>(ea, eb));
      auto rhs = prod_quant<Value, Result>(sel_to_quant<Value, Result>(ea),
                                           sel_to_quant<Value, Result>(eb));
      for (int t = 0; t < 16; ++t) {
        auto p = bool_pair_predicate(t);
        if (!(lhs(p) == rhs(p))) {
          if (detail)
            *detail = "selections " + std::to_string(a) + "," + std::to_string(b) +
                      " disagree on predicate " + std::to_string(t);
          return false;
        }
        ++checked;
      }
    }
  }
  if (detail) *detail = std::to_string(checked) + " selection/selection/predicate combinations";
  return true;
}

bool chi_exhaustive_check(std::string* detail) {
  long checked = 0;
  for (long m = 0; m <= 2; ++m) {
    size_t table_size = pow_card(2, m);
    for (long bound = 0; bound <= 3; ++bound) {
      size_t combos = pow_card(static_cast<int>(bound) + 1, static_cast<long>(table_size));
      for (size_t idx = 0; idx < combos; ++idx) {
        std::vector<long> table(table_size);
        size_t rest = idx;
        for (size_t j = 0; j < table_size; ++j) {
          table[j] = static_cast<long>(rest % static_cast<size_t>(bound + 1));
          rest /= static_cast<size_t>(bound + 1);
        }
        OmegaFn<Value> w;
        w.modulus = m;
        w.bound = bound;
        w.raw = [table, m](const Seq<Value>& alpha) {
          std::vector<int> codes;
          for (long i = 0; i < m; ++i) codes.push_back(alpha.at(i).code);
          return table[tuple_key(codes, 2)];
        };
        for (int a0 = 0; a0 < 2; ++a0) {
          for (int a1 = 0; a1 < 2; ++a1) {
            Seq<Value> alpha = Seq<Value>::from_fn(
                [a0, a1](long i) { return Value{i % 2 == 0 ? a0 : a1}; });
            long naive = -1;
            for (long n = 0; n <= bound + 2; ++n) {
              if (w.eval(init_seg_zero(alpha, n, zero_value())) < n) {
                naive = n;
                break;
              }
            }
            long got = chi(w, alpha, zero_value());
            if (got != naive) {
              if (detail)
                *detail = "stopping point " + std::to_string(got) + " vs naive scan " +
                          std::to_string(naive);
              return false;
            }
            ++checked;
            for (long k = 0; k <= 3; ++k) {
              long n = chi_plus(k, w, alpha, zero_value());
              bool fires = w.eval(init_seg_zero(alpha, n, zero_value())) < n + k;
              bool least = true;
              for (long i = 0; i < n; ++i)
                least = least && !(w.eval(init_seg_zero(alpha, i, zero_value())) < i + k);
              if (!fires || !least) {
                if (detail)
                  *detail = "offset " + std::to_string(k) + " stop " + std::to_string(n) +
                            (fires ? " is not least" : " does not fire");
                return false;
              }
              ++checked;
            }
          }
        }
      }
    }
  }
  if (detail) *detail = std::to_string(checked) + " stopping-point computations";
  return true;
}

bool ipq_diverges_at_fuel(long long fuel_amount) {
  bool diverged = false;
  run_with_large_stack([&] {
    PosFamily<Quantifier<Value, long>> quant = [](long) {
      return Quantifier<Value, long>(
          [](const Predicate<Value, long>& p) { return 1 + p(Value{0}); });
    };
    Outcome<Value, long> q;
    q.eval = [](const Seq<Value>&) { return 0L; };
    q.modulus = 0;
    try {
      long v = ipq_naive<Value, long>(0, quant, q, make_fuel(fuel_amount));
      (void)v;
    } catch (const FuelExhausted&) {
      diverged = true;
    }
  });
  return diverged;
}

namespace {

struct CheckCollector {
  json checks = json::array();
  std::string* summary;
  bool* all_pass;
  std::string suite;

  void run(const std::string& name, const std::function<bool(std::string*)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(&detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("error: ") + e.what();
    }
    json entry;
    entry["name"] = name;
    entry["pass"] = ok;
    entry["detail"] = detail;
    checks.push_back(entry);
    *summary += std::string(ok ? "[PASS] " : "[FAIL] ") + suite + "/" + name +
                (detail.empty() ? "" : " (" + detail + ")") + "\n";
    *all_pass = *all_pass && ok;
  }
};

std::string first_failure_text(const std::vector<CellFailure>& failures) {
  const auto& f = failures.front();
  return "seed " + std::to_string(f.seed) + " index " + std::to_string(f.index) +
         ": expected " + f.expected + ", got " + f.got;
}

bool collect_seeded(const std::vector<SeededInstance>& instances,
                    const std::function<std::vector<CellFailure>(long, const InstanceFamilies&)>&
                        body,
                    std::string* detail) {
  long violations = 0;
  std::string first;
  for (const auto& inst : instances) {
    InstanceFamilies fam = build_families(inst.spec);
    auto failures = body(inst.seed, fam);
    if (!failures.empty()) {
      if (violations == 0) first = first_failure_text(failures);
      violations += static_cast<long>(failures.size());
    }
  }
  if (violations > 0) {
    if (detail) *detail = std::to_string(violations) + " violations; first: " + first;
    return false;
  }
  if (detail) *detail = std::to_string(instances.size()) + " instances";
  return true;
}

json cell_to_json(const CheckReport& report) {
  json c;
  c["derived"] = report.derived;
  c["native"] = report.native;
  c["instances"] = report.instances;
  c["pass"] = report.pass();
  c["fuel_used"] = report.fuel_used;
  c["failures_total"] = report.failures.size();
  json fails = json::array();
  size_t cap = report.failures.size() < 10 ? report.failures.size() : 10;
  for (size_t i = 0; i < cap; ++i) {
    const auto& f = report.failures[i];
    json entry;
    entry["seed"] = f.seed;
    entry["index"] = f.index;
    entry["expected"] = f.expected;
    entry["got"] = f.got;
    fails.push_back(entry);
  }
  c["failures"] = fails;
  return c;
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  json report;
  report["tool"] = "selrec";
  report["suite"] = config.suite;
  report["seeds"] = config.seeds;
  report["depth"] = config.depth;
  report["fuel"] = config.fuel;
  json results = json::array();
  bool all_pass = true;
  std::string summary;
  bool matched = false;
  auto want = [&](const char* s) {
    bool yes = config.suite == "all" || config.suite == s;
    matched = matched || yes;
    return yes;
  };

  RandomParams params;
  params.fuel = config.fuel;
  params.depth = config.depth;
  std::vector<SeededInstance> instances = seeded_instances(config.seeds, params);

  if (want("seqcore")) {
    CheckCollector col{json::array(), &summary, &all_pass, "seqcore"};
    col.run("shift-composition", [](std::string* detail) {
      Seq<Value> alpha =
          Seq<Value>::from_fn([](long i) { return Value{static_cast<int>((i * 7 + 3) % 5)}; });
      for (long i = 0; i < 30; ++i) {
        if (!(shift(shift(alpha, 2), 3).at(i) == alpha.at(i + 5))) return false;
        if (!(shift(alpha, 0).at(i) == alpha.at(i))) return false;
      }
      if (detail) *detail = "30 positions";
      return true;
    });
    col.run("prepend-overwrite", [](std::string* detail) {
      Seq<Value> alpha =
          Seq<Value>::from_fn([](long i) { return Value{static_cast<int>((i * 3 + 1) % 7)}; });
      for (long len = 0; len <= 3; ++len) {
        Path<Value> s;
        for (long k = 0; k < len; ++k) s.push_back(Value{static_cast<int>(9 - k)});
        for (long i = 0; i < 12; ++i) {
          Value pre = prepend(s, alpha).at(i);
          Value want_pre = i < len ? s[static_cast<size_t>(i)] : alpha.at(i - len);
          if (!(pre == want_pre)) return false;
          Value over = overwrite(s, alpha).at(i);
          Value want_over = i < len ? s[static_cast<size_t>(i)] : alpha.at(i);
          if (!(over == want_over)) return false;
        }
        Path<Value> round = init_seg(prepend(s, alpha), len);
        if (!(round == s)) return false;
      }
      if (detail) *detail = "prefix lengths 0..3";
      return true;
    });
    col.run("init-seg-zero", [](std::string* detail) {
      Seq<Value> alpha =
          Seq<Value>::from_fn([](long i) { return Value{static_cast<int>(i % 4 + 1)}; });
      for (long n = 0; n <= 5; ++n) {
        Seq<Value> cutoff = init_seg_zero(alpha, n, zero_value());
        for (long i = 0; i < n + 10; ++i) {
          Value want_v = i < n ? alpha.at(i) : zero_value();
          if (!(cutoff.at(i) == want_v)) return false;
        }
      }
      if (detail) *detail = "cutoffs 0..5";
      return true;
    });
    col.run("memo-single-eval", [](std::string* detail) {
      auto count = std::make_shared<long>(0);
      Seq<Value> alpha = Seq<Value>::from_fn([count](long i) {
        ++*count;
        return Value{static_cast<int>(i % 3)};
      });
      Value first = alpha.at(5);
      Value second = alpha.at(5);
      alpha.at(2);
      if (!(first == second) || *count != 2) return false;
      auto forced = std::make_shared<long>(0);
      Seq<Value> lazy = Seq<Value>::defer([forced]() {
        ++*forced;
        return zero_seq();
      });
      lazy.at(0);
      lazy.at(1);
      if (detail) *detail = "generator calls counted";
      return *forced == 1;
    });
    col.run("modulus-respected", [&](std::string* detail) {
      long used = 0;
      for (const auto& inst : instances) {
        if (used >= 10) break;
        ++used;
        InstanceFamilies fam = build_families(inst.spec);
        auto deepest = std::make_shared<long>(-1);
        fam.outcome.eval(probed(zero_seq(), deepest));
        if (fam.outcome.modulus && *deepest >= *fam.outcome.modulus) return false;
        auto deepest_w = std::make_shared<long>(-1);
        fam.omega.eval(probed(zero_seq(), deepest_w));
        if (*deepest_w >= fam.omega.modulus) return false;
      }
      if (detail) *detail = std::to_string(used) + " instances";
      return true;
    });
    json entry;
    entry["suite"] = "seqcore";
    entry["checks"] = col.checks;
    results.push_back(entry);
  }

  if (want("selection")) {
    CheckCollector col{json::array(), &summary, &all_pass, "selection"};
    col.run("quantifier-homomorphism", selection_homomorphism_exhaustive);
    col.run("dependent-degenerate", [](std::string* detail) {
      for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
          auto plain = prod_sel<Value, Result>(bool_selection(a), bool_selection(b));
          auto dep = dep_prod_sel<Value, Result>(
              bool_selection(a), [b](const Value&) { return bool_selection(b); });
          auto plain_q = prod_quant<Value, Result>(
              sel_to_quant<Value, Result>(bool_selection(a)),
              sel_to_quant<Value, Result>(bool_selection(b)));
          auto dep_q = dep_prod_quant<Value, Result>(
              sel_to_quant<Value, Result>(bool_selection(a)),
              [b](const Value&) { return sel_to_quant<Value, Result>(bool_selection(b)); });
          for (int t = 0; t < 16; ++t) {
            auto p = bool_pair_predicate(t);
            if (!(plain(p) == dep(p))) return false;
            if (!(plain_q(p) == dep_q(p))) return false;
          }
        }
      }
      if (detail) *detail = "constant dependency over all boolean pairs";
      return true;
    });
    col.run("canonical-selections", [](std::string* detail) {
      auto amin = argmin_selection(3);
      for (int t = 0; t < 27; ++t) {
        std::vector<int> table(3);
        int rest = t;
        for (int j = 0; j < 3; ++j) {
          table[static_cast<size_t>(j)] = rest % 3;
          rest /= 3;
        }
        Predicate<Value, Result> p = [&table](const Value& x) {
          return Result{table[static_cast<size_t>(x.code)]};
        };
        int best = 0;
        for (int c = 1; c < 3; ++c)
          if (table[static_cast<size_t>(c)] < table[static_cast<size_t>(best)]) best = c;
        if (amin(p).code != best) return false;
      }
      auto hil = hilbert_selection();
      for (int t = 0; t < 9; ++t) {
        std::vector<int> table = {t % 3, t / 3};
        Predicate<Value, Result> p = [&table](const Value& x) {
          return Result{table[static_cast<size_t>(x.code)]};
        };
        int want_code = table[1] != 0 ? 1 : 0;
        if (hil(p).code != want_code) return false;
      }
      if (detail) *detail = "argmin over 27 tables, search over 9";
      return true;
    });
    col.run("finite-prod-fold", [](std::string* detail) {
      std::vector<Selection<Value, Result>> pool = {argmin_selection(2), hilbert_selection()};
      for (int mask = 0; mask < 8; ++mask) {
        std::vector<Selection<Value, Result>> triple = {
            pool[static_cast<size_t>(mask & 1)], pool[static_cast<size_t>((mask >> 1) & 1)],
            pool[static_cast<size_t>((mask >> 2) & 1)]};
        std::vector<Selection<Value, Result>> tail_pair = {triple[1], triple[2]};
        for (int t = 0; t < 256; ++t) {
          Predicate<Path<Value>, Result> p = [t](const Path<Value>& s) {
            size_t key = tuple_key({s[0].code, s[1].code, s[2].code}, 2);
            return Result{(t >> key) & 1};
          };
          Path<Value> out = finite_prod<Value, Result>(triple)(p);
          if (out.size() != 3) return false;
          auto under = [&p](const Value& head) {
            return Predicate<Path<Value>, Result>([&p, head](const Path<Value>& rest) {
              Path<Value> full{head};
              full.insert(full.end(), rest.begin(), rest.end());
              return p(full);
            });
          };
          Path<Value> rest = finite_prod<Value, Result>(tail_pair)(under(out[0]));
          if (!(rest == Path<Value>{out[1], out[2]})) return false;
          Value head = triple[0]([&](const Value& x) {
            Path<Value> cont = finite_prod<Value, Result>(tail_pair)(under(x));
            Path<Value> full{x};
            full.insert(full.end(), cont.begin(), cont.end());
            return p(full);
          });
          if (!(head == out[0])) return false;
        }
      }
      for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
          std::vector<Selection<Value, Result>> two = {bool_selection(a), bool_selection(b)};
          auto folded = finite_prod<Value, Result>(two);
          auto direct = prod_sel<Value, Result>(bool_selection(a), bool_selection(b));
          for (int t = 0; t < 16; ++t) {
            auto p = bool_pair_predicate(t);
            if (!(folded(p) == direct(p))) return false;
          }
        }
      }
      if (detail) *detail = "fold law on triples, pair coincidence";
      return true;
    });
    json entry;
    entry["suite"] = "selection";
    entry["checks"] = col.checks;
    results.push_back(entry);
  }

  if (want("barrec")) {
    CheckCollector col{json::array(), &summary, &all_pass, "barrec"};
    col.run("restart-invariance", [&](std::string* detail) {
      return collect_seeded(
          instances,
          [&](long seed, const InstanceFamilies& fam) {
            return check_restart_invariance(seed, fam, 10, config.depth);
          },
          detail);
    });
    col.run("pointwise-unfolding", [&](std::string* detail) {
      return collect_seeded(
          instances,
          [](long seed, const InstanceFamilies& fam) {
            return check_pointwise_unfolding(seed, fam, 10);
          },
          detail);
    });
    col.run("defining-equations", [&](std::string* detail) {
      return collect_seeded(
          instances,
          [&](long seed, const InstanceFamilies& fam) {
            return defining_equation_failures(seed, fam, config.depth);
          },
          detail);
    });
    col.run("ipq-divergence", [&](std::string* detail) {
      // Each unfolding is one stack frame, so the probe keeps its budget
      // within what the helper thread's stack can hold.
      long long probe_fuel = config.fuel < 100000 ? config.fuel : 100000;
      if (!ipq_diverges_at_fuel(100)) return false;
      if (!ipq_diverges_at_fuel(probe_fuel)) return false;
      if (detail) *detail = "fuel 100 and fuel " + std::to_string(probe_fuel);
      return true;
    });
    json entry;
    entry["suite"] = "barrec";
    entry["checks"] = col.checks;
    results.push_back(entry);
  }

  if (want("spector")) {
    CheckCollector col{json::array(), &summary, &all_pass, "spector"};
    col.run("solve-verify", [&](std::string* detail) {
      for (const auto& inst : instances) {
        InstanceFamilies fam = build_families(inst.spec);
        std::string local;
        if (!check_spector_instance(fam, &local)) {
          if (detail) *detail = "seed " + std::to_string(inst.seed) + ": " + local;
          return false;
        }
      }
      if (detail) *detail = std::to_string(instances.size()) + " instances";
      return true;
    });
    col.run("attainment-witness", [&](std::string* detail) {
      for (const auto& inst : instances) {
        InstanceFamilies fam = build_families(inst.spec);
        std::string local;
        if (!check_attainment_witness(fam, &local)) {
          if (detail) *detail = "seed " + std::to_string(inst.seed) + ": " + local;
          return false;
        }
      }
      if (detail) *detail = std::to_string(instances.size()) + " instances";
      return true;
    });
    col.run("chi-exhaustive", chi_exhaustive_check);
    json entry;
    entry["suite"] = "spector";
    entry["checks"] = col.checks;
    results.push_back(entry);
  }

  if (want("interdef")) {
    json cells = json::array();
    for (const auto& cell : matrix_cells()) {
      CheckReport cr = check_cell(cell, instances, config.depth);
      cells.push_back(cell_to_json(cr));
      summary += std::string(cr.pass() ? "[PASS] " : "[FAIL] ") + "interdef/" + cr.derived +
                 " vs " + cr.native + " (" + std::to_string(cr.instances) + " instances)";
      if (!cr.pass()) summary += " first: " + first_failure_text(cr.failures);
      summary += "\n";
      all_pass = all_pass && cr.pass();
    }
    json entry;
    entry["suite"] = "interdef";
    entry["cells"] = cells;
    results.push_back(entry);
  }

  if (!matched) throw std::invalid_argument("unknown suite: " + config.suite);

  report["results"] = results;
  report["pass"] = all_pass;
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  report["elapsed_ms"] = elapsed;

  SuiteResult out;
  out.pass = all_pass;
  out.report_text = report.dump(2) + "\n";
  out.summary = summary + (all_pass ? "PASS" : "FAIL") + "\n";
  if (!config.report_path.empty()) {
    std::ofstream file(config.report_path);
    if (!file) throw std::runtime_error("cannot write report to " + config.report_path);
    file << out.report_text;
  }
  return out;
}

}  // namespace selrec
