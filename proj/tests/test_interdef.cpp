#include "doctest.h"
#include "selrec/barrec.hpp"
#include "selrec/families.hpp"
#include "selrec/harness.hpp"
#include "selrec/interdef.hpp"
#include "selrec/selection.hpp"

using namespace selrec;

// The reconstructions must be extensionally interchangeable with the native
// schemes. Hand-checked fixed points first, then seeded sweeps per cell.

namespace {

PosFamily<Selection<Value, Result>> search_at() {
  return [](long) { return hilbert_selection(); };
}

PathFamily<Value, Selection<Value, Result>> search_on() {
  return [](const Path<Value>&) { return hilbert_selection(); };
}

PathFamily<Value, Quantifier<Value, Result>> exists_on() {
  return [](const Path<Value>&) { return sel_to_quant<Value, Result>(hilbert_selection()); };
}

Outcome<Value, Result> q_and() {
  Outcome<Value, Result> q;
  q.modulus = 2;
  q.eval = [](const Seq<Value>& a) {
    return Result{a.at(0).code == 1 && a.at(1).code == 1 ? 1 : 0};
  };
  return q;
}

Outcome<Value, Result> q_andnot() {
  Outcome<Value, Result> q;
  q.modulus = 2;
  q.eval = [](const Seq<Value>& a) {
    return Result{a.at(0).code == 1 && a.at(1).code == 0 ? 1 : 0};
  };
  return q;
}

LengthFn<Result> id_len() {
  return [](const Result& r) { return static_cast<long>(r.code); };
}

PosFamily<SkewedSelection<Value, Result>> pivot_skew_at() {
  return [](long) {
    return SkewedSelection<Value, Result>([](const Predicate<Value, Result>& p) {
      int bit = p(Value{1}).code != 0 ? 1 : 0;
      return cons(Value{bit}, zero_seq());
    });
  };
}

PathFamily<Value, SkewedSelection<Value, Result>> pivot_skew_on() {
  auto at = pivot_skew_at();
  return [at](const Path<Value>&) { return at(0); };
}

void check_prefix(const Seq<Value>& alpha, std::initializer_list<int> codes) {
  long i = 0;
  for (int c : codes) {
    CHECK(alpha.at(i).code == c);
    ++i;
  }
}

void check_agree(const Seq<Value>& a, const Seq<Value>& b, long depth) {
  for (long i = 0; i < depth; ++i) CHECK(a.at(i).code == b.at(i).code);
}

}  // namespace

TEST_SUITE("interdef") {
  TEST_CASE("explicit product reconstructed from its quantifier form") {
    auto f1 = make_fuel();
    Seq<Value> derived = eps_via_epq(0, search_at(), id_len(), q_andnot(), f1);
    check_prefix(derived, {1, 0, 0, 0});
    auto f2 = make_fuel();
    Seq<Value> native =
        eps<Value, Result>(0, search_at(), id_len(), q_andnot(), zero_value(), f2);
    check_agree(derived, native, 8);

    auto f3 = make_fuel();
    check_prefix(eps_via_epq(0, search_at(), id_len(), q_and(), f3), {0, 0, 0});
  }

  TEST_CASE("dependent product reconstructed from the position-indexed one") {
    PathFamily<Value, Selection<Value, Result>> by_content =
        [](const Path<Value>& s) -> Selection<Value, Result> {
      if (s.empty() || s[0].code == 1) return hilbert_selection();
      return [](const Predicate<Value, Result>&) { return Value{0}; };
    };
    Outcome<Value, Result> q_or;
    q_or.modulus = 2;
    q_or.eval = [](const Seq<Value>& a) {
      return Result{a.at(0).code == 1 || a.at(1).code == 1 ? 1 : 0};
    };
    auto f1 = make_fuel();
    Seq<Value> derived = eps_dep_via_eps({}, by_content, id_len(), q_or, f1);
    check_prefix(derived, {1, 1, 0, 0});
    auto f2 = make_fuel();
    Seq<Value> native =
        eps_dep<Value, Result>({}, by_content, id_len(), q_or, zero_value(), f2);
    check_agree(derived, native, 8);
  }

  TEST_CASE("quantifier product reconstructed from the path-bounded recursion") {
    auto zero_len = LengthFn<Result>([](const Result&) { return 0L; });
    auto one_len = LengthFn<Result>([](const Result&) { return 1L; });
    auto f1 = make_fuel();
    CHECK(epq_dep_via_br({}, exists_on(), zero_len, q_and(), 2, f1).code == 0);
    auto f2 = make_fuel();
    CHECK(epq_dep_via_br({}, exists_on(), one_len, q_and(), 2, f2).code == 1);
  }

  TEST_CASE("quantifier product reconstructed from the implicit product") {
    auto zero_len = LengthFn<Result>([](const Result&) { return 0L; });
    auto one_len = LengthFn<Result>([](const Result&) { return 1L; });
    auto f1 = make_fuel();
    CHECK(epq_dep_via_ips_dep({}, exists_on(), zero_len, q_and(), 2, f1).code == 0);
    auto f2 = make_fuel();
    CHECK(epq_dep_via_ips_dep({}, exists_on(), one_len, q_and(), 2, f2).code == 1);
  }

  TEST_CASE("path-bounded selection recursion reconstructed from the dependent product") {
    PathFamily<Value, Selection<Value, Seq<Value>>> score =
        [](const Path<Value>&) -> Selection<Value, Seq<Value>> {
      return [](const Predicate<Value, Seq<Value>>& p) {
        return Value{q_and().eval(p(Value{1})).code != 0 ? 1 : 0};
      };
    };
    OmegaFn<Value> two;
    two.raw = [](const Seq<Value>&) { return 2L; };
    two.modulus = 0;
    two.bound = 2;
    auto f1 = make_fuel();
    Seq<Value> derived = sbr_via_eps_dep({}, score, two, f1);
    check_prefix(derived, {1, 1, 1, 0, 0});
    auto f2 = make_fuel();
    Seq<Value> native = sbr<Value>({}, score, two, zero_value(), f2);
    check_agree(derived, native, 8);
  }

  TEST_CASE("skewed product reconstructed from implicit products over rows") {
    auto f1 = make_fuel();
    Seq<Value> derived = mbr_via_ips(0, pivot_skew_at(), q_and(), f1);
    check_prefix(derived, {1, 0, 0, 0});
    auto f2 = make_fuel();
    Seq<Value> native = mbr<Value, Result>(0, pivot_skew_at(), q_and(), f2);
    check_agree(derived, native, 8);
  }

  TEST_CASE("skewed product round trip through the prefix-emitting form") {
    auto f1 = make_fuel();
    check_prefix(mbr_dep_via_mbr({}, pivot_skew_on(), q_and(), f1), {1, 0, 0, 0});
    auto f2 = make_fuel();
    check_prefix(mbr_prefix_via_mbr_dep({Value{1}}, pivot_skew_on(), q_and(), f2),
                 {1, 1, 0, 0});
    auto f3 = make_fuel();
    check_prefix(mbr_dep_via_mbr_prefix({Value{1}}, pivot_skew_on(), q_and(), f3),
                 {1, 0, 0, 0});
  }

  TEST_CASE("implicit product reconstructed from the skewed recursion") {
    auto f1 = make_fuel();
    check_prefix(ips_dep_via_mbr_dep({}, search_on(), q_and(), f1), {1, 1, 1, 1});
    auto f2 = make_fuel();
    check_prefix(ips_dep_via_mbr_dep({}, search_on(), q_andnot(), f2), {1, 0, 1, 1});
    auto f3 = make_fuel();
    Seq<Value> native = ips_dep<Value, Result>({}, search_on(), q_andnot(), f3);
    auto f4 = make_fuel();
    check_agree(ips_dep_via_mbr_dep({}, search_on(), q_andnot(), f4), native, 8);
  }

  TEST_CASE("the cell table is consistent") {
    const auto& cells = matrix_cells();
    CHECK(cells.size() == 11);
    for (const auto& cell : cells) {
      CHECK(known_recursor(cell));
      std::string native = native_of_cell(cell);
      CHECK(known_recursor(native));
      CHECK(recursor_returns_seq(cell) == recursor_returns_seq(native));
    }
  }

  TEST_CASE("every cell agrees with its native scheme on seeded instances") {
    auto instances = seeded_instances(12);
    for (const auto& cell : matrix_cells()) {
      CheckReport rep = check_cell(cell, instances, 20);
      CHECK_MESSAGE(rep.pass(), cell, " vs ", rep.native, ": ", rep.failures.size(),
                    " failure(s), first at seed ",
                    rep.failures.empty() ? 0 : rep.failures[0].seed);
      CHECK(rep.instances == 12);
      CHECK(rep.fuel_used > 0);
    }
  }
}
