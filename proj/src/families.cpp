#include "selrec/families.hpp"

#include <algorithm>
#include <numeric>

namespace selrec {

namespace {

using Spec = std::shared_ptr<const InstanceSpec>;

size_t predicate_key(const Predicate<Value, Result>& p, int x_card, int r_card) {
  std::vector<int> codes;
  codes.reserve(static_cast<size_t>(x_card));
  for (int cx = 0; cx < x_card; ++cx) codes.push_back(p(Value{cx}).code);
  return tuple_key(codes, r_card);
}

long path_weight(const Path<Value>& s) {
  long w = static_cast<long>(s.size());
  for (const auto& v : s) w += v.code;
  return w;
}

size_t bank_index(long idx, size_t nbanks) {
  if (nbanks == 0) return 0;
  long m = idx % static_cast<long>(nbanks);
  return static_cast<size_t>(m);
}

Selection<Value, Result> selection_for(const Spec& spec, FamilyKind kind, long idx) {
  if (kind == FamilyKind::Argmin) return argmin_selection(spec->x_card);
  size_t b = bank_index(idx, spec->selection_family.banks.size());
  return [spec, b](const Predicate<Value, Result>& p) {
    size_t key = predicate_key(p, spec->x_card, spec->r_card);
    return Value{spec->selection_family.banks[b][key]};
  };
}

Quantifier<Value, Result> quantifier_for(const Spec& spec, FamilyKind kind, long idx) {
  if (kind == FamilyKind::Argmin) {
    auto sel = argmin_selection(spec->x_card);
    return [sel](const Predicate<Value, Result>& p) { return p(sel(p)); };
  }
  size_t b = bank_index(idx, spec->quantifier_family.banks.size());
  return [spec, b](const Predicate<Value, Result>& p) {
    size_t key = predicate_key(p, spec->x_card, spec->r_card);
    return Result{spec->quantifier_family.banks[b][key]};
  };
}

SkewedSelection<Value, Result> skewed_for(const Spec& spec, FamilyKind kind, long idx) {
  if (kind == FamilyKind::Argmin) {
    auto sel = argmin_selection(spec->x_card);
    return [sel](const Predicate<Value, Result>& p) {
      return cons(sel(p), zero_seq());
    };
  }
  size_t b = bank_index(idx, spec->skewed_family.banks.size());
  return [spec, b](const Predicate<Value, Result>& p) {
    const SkewedBank& bank = spec->skewed_family.banks[b];
    size_t key = predicate_key(p, spec->x_card, spec->r_card);
    Value pivot{bank.table[key]};
    Path<Value> prefix;
    for (int slot : bank.prefix) prefix.push_back(slot < 0 ? pivot : Value{slot});
    return prepend(prefix, zero_seq());
  };
}

long family_path_index(FamilyKind kind, const Path<Value>& s) {
  return kind == FamilyKind::Parity ? path_weight(s) : static_cast<long>(s.size());
}

}  // namespace

Selection<Value, Result> argmin_selection(int x_card) {
  return [x_card](const Predicate<Value, Result>& p) {
    Value best{0};
    int best_score = p(Value{0}).code;
    for (int cx = 1; cx < x_card; ++cx) {
      int score = p(Value{cx}).code;
      if (score < best_score) {
        best = Value{cx};
        best_score = score;
      }
    }
    return best;
  };
}

Selection<Value, Result> hilbert_selection() {
  return [](const Predicate<Value, Result>& p) {
    return p(Value{1}).code != 0 ? Value{1} : Value{0};
  };
}

long max_length_value(const InstanceSpec& spec) {
  if (spec.length.identity) return spec.r_card - 1;
  long m = 0;
  for (long v : spec.length.table) m = std::max(m, v);
  return m;
}

InstanceFamilies build_families(const InstanceSpec& raw) {
  validate_instance(raw);
  auto spec = std::make_shared<const InstanceSpec>(raw);
  InstanceFamilies fam;
  fam.spec = spec;

  fam.sel_at = [spec](long n) {
    return selection_for(spec, spec->selection_family.kind, n);
  };
  fam.sel_on = [spec](const Path<Value>& s) {
    return selection_for(spec, spec->selection_family.kind,
                         family_path_index(spec->selection_family.kind, s));
  };
  fam.quant_at = [spec](long n) {
    return quantifier_for(spec, spec->quantifier_family.kind, n);
  };
  fam.quant_on = [spec](const Path<Value>& s) {
    return quantifier_for(spec, spec->quantifier_family.kind,
                          family_path_index(spec->quantifier_family.kind, s));
  };
  fam.skew_at = [spec](long n) {
    return skewed_for(spec, spec->skewed_family.kind, n);
  };
  fam.skew_on = [spec](const Path<Value>& s) {
    return skewed_for(spec, spec->skewed_family.kind,
                      family_path_index(spec->skewed_family.kind, s));
  };

  fam.outcome.modulus = spec->outcome.modulus;
  fam.outcome.eval = [spec](const Seq<Value>& alpha) {
    std::vector<int> codes;
    codes.reserve(static_cast<size_t>(spec->outcome.modulus));
    for (long i = 0; i < spec->outcome.modulus; ++i) codes.push_back(alpha.at(i).code);
    return Result{spec->outcome.table[tuple_key(codes, spec->x_card)]};
  };

  if (spec->length.identity) {
    fam.length = [](const Result& r) { return static_cast<long>(r.code); };
  } else {
    fam.length = [spec](const Result& r) {
      return spec->length.table[static_cast<size_t>(r.code)];
    };
  }

  fam.omega.modulus = spec->omega.modulus;
  fam.omega.bound = spec->omega.bound;
  fam.omega.raw = [spec](const Seq<Value>& alpha) {
    std::vector<int> codes;
    codes.reserve(static_cast<size_t>(spec->omega.modulus));
    for (long i = 0; i < spec->omega.modulus; ++i) codes.push_back(alpha.at(i).code);
    return spec->omega.table[tuple_key(codes, spec->x_card)];
  };

  // Selections over sequence-valued predicates: score each candidate by the
  // outcome of the sequence it leads to, then defer to the value family.
  auto outcome = fam.outcome;
  auto sel_on = fam.sel_on;
  fam.seqsel_on = [sel_on, outcome](const Path<Value>& s) {
    auto sel = sel_on(s);
    return Selection<Value, Seq<Value>>(
        [sel, outcome](const Predicate<Value, Seq<Value>>& p) {
          return sel([p, outcome](const Value& x) { return outcome.eval(p(x)); });
        });
  };

  fam.start = spec->start;
  fam.start_index = static_cast<long>(spec->start.size());
  fam.fuel_budget = spec->fuel;
  fam.depth = spec->depth;
  return fam;
}

}  // namespace selrec
