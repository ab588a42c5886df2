#include "doctest.h"
#include "selrec/domain.hpp"
#include "selrec/functionals.hpp"
#include "selrec/seq.hpp"

using namespace selrec;

namespace {

Seq<Value> ramp() {
  return Seq<Value>::from_fn([](long i) { return Value{static_cast<int>((3 * i + 2) % 11)}; });
}

Path<Value> codes_path(std::initializer_list<int> codes) {
  Path<Value> s;
  for (int c : codes) s.push_back(Value{c});
  return s;
}

}  // namespace

TEST_SUITE("seqcore") {
  TEST_CASE("constant and from_fn evaluate pointwise") {
    Seq<Value> c = Seq<Value>::constant(Value{4});
    Seq<Value> r = ramp();
    for (long i = 0; i < 25; ++i) {
      CHECK(c.at(i).code == 4);
      CHECK(r.at(i).code == (3 * i + 2) % 11);
    }
  }

  TEST_CASE("cons and prepend line entries up") {
    Seq<Value> r = ramp();
    Seq<Value> one = cons(Value{9}, r);
    CHECK(one.at(0).code == 9);
    for (long i = 1; i < 12; ++i) CHECK(one.at(i) == r.at(i - 1));

    Path<Value> s = codes_path({7, 5, 3});
    Seq<Value> pre = prepend(s, r);
    CHECK(pre.at(0).code == 7);
    CHECK(pre.at(1).code == 5);
    CHECK(pre.at(2).code == 3);
    for (long i = 3; i < 15; ++i) CHECK(pre.at(i) == r.at(i - 3));

    // Empty prefix is the identity.
    CHECK(seq_eq(prepend(Path<Value>{}, r), r, 20));
    // Prepending in two steps equals prepending the concatenation.
    Path<Value> t = codes_path({1, 2});
    CHECK(seq_eq(prepend(t, prepend(s, r)), prepend(concat(t, s), r), 20));
  }

  TEST_CASE("overwrite replaces a prefix and keeps the rest in place") {
    Seq<Value> r = ramp();
    Path<Value> s = codes_path({8, 8});
    Seq<Value> over = overwrite(s, r);
    CHECK(over.at(0).code == 8);
    CHECK(over.at(1).code == 8);
    for (long i = 2; i < 15; ++i) CHECK(over.at(i) == r.at(i));
    CHECK(seq_eq(overwrite(Path<Value>{}, r), r, 20));
  }

  TEST_CASE("shift composes additively") {
    Seq<Value> r = ramp();
    for (long i = 0; i < 20; ++i) {
      CHECK(shift(r, 4).at(i) == r.at(i + 4));
      CHECK(shift(shift(r, 2), 3).at(i) == shift(r, 5).at(i));
      CHECK(shift(r, 0).at(i) == r.at(i));
    }
    Path<Value> s = codes_path({6, 6, 6});
    CHECK(seq_eq(shift(prepend(s, r), 3), r, 20));
  }

  TEST_CASE("init_seg, segment and init_seg_zero agree with direct reads") {
    Seq<Value> r = ramp();
    Path<Value> head = init_seg(r, 4);
    REQUIRE(head.size() == 4);
    for (long i = 0; i < 4; ++i) CHECK(head[static_cast<size_t>(i)] == r.at(i));
    CHECK(init_seg(r, 0).empty());

    Path<Value> mid = segment(r, 2, 5);
    REQUIRE(mid.size() == 4);  // entries 2..5 inclusive
    for (long i = 0; i < 4; ++i) CHECK(mid[static_cast<size_t>(i)] == r.at(i + 2));

    Seq<Value> cut = init_seg_zero(r, 3, zero_value());
    for (long i = 0; i < 3; ++i) CHECK(cut.at(i) == r.at(i));
    for (long i = 3; i < 12; ++i) CHECK(cut.at(i).code == 0);

    CHECK(seq_eq(prepend(init_seg(r, 6), shift(r, 6)), r, 25));
  }

  TEST_CASE("map_seq applies pointwise") {
    Seq<Value> r = ramp();
    Seq<int> doubled = map_seq(r, [](const Value& v) { return v.code * 2; });
    for (long i = 0; i < 10; ++i) CHECK(doubled.at(i) == r.at(i).code * 2);
  }

  TEST_CASE("generator runs once per index") {
    auto calls = std::make_shared<long>(0);
    Seq<Value> counted = Seq<Value>::from_fn([calls](long i) {
      ++*calls;
      return Value{static_cast<int>(i % 5)};
    });
    CHECK(counted.at(7) == counted.at(7));
    CHECK(*calls == 1);
    counted.at(3);
    counted.at(7);
    CHECK(*calls == 2);

    // Copies share the memo table.
    Seq<Value> alias = counted;
    alias.at(7);
    CHECK(*calls == 2);
  }

  TEST_CASE("defer forces its thunk at most once") {
    auto forced = std::make_shared<long>(0);
    Seq<Value> lazy = Seq<Value>::defer([forced]() {
      ++*forced;
      return Seq<Value>::constant(Value{1});
    });
    CHECK(*forced == 0);
    CHECK(lazy.at(0).code == 1);
    CHECK(lazy.at(5).code == 1);
    CHECK(*forced == 1);
  }

  TEST_CASE("self_ref reads strictly earlier entries of itself") {
    // alpha(0) = 1, alpha(i) = alpha(i-1) + i, capped into int range.
    Seq<int> tri = Seq<int>::self_ref([](long i, const Seq<int>& self) {
      if (i == 0) return 1;
      return self.at(i - 1) + static_cast<int>(i);
    });
    CHECK(tri.at(0) == 1);
    CHECK(tri.at(1) == 2);
    CHECK(tri.at(4) == 11);
    CHECK(tri.at(10) == 56);
  }

  TEST_CASE("probed records the deepest read") {
    auto deepest = std::make_shared<long>(-1);
    Seq<Value> watched = probed(ramp(), deepest);
    CHECK(*deepest == -1);
    watched.at(4);
    CHECK(*deepest == 4);
    watched.at(2);
    CHECK(*deepest == 4);
    watched.at(9);
    CHECK(*deepest == 9);
  }

  TEST_CASE("restriction shifts an outcome and its modulus") {
    Outcome<Value, Result> q;
    q.modulus = 3;
    q.eval = [](const Seq<Value>& a) {
      return Result{(a.at(0).code + a.at(1).code + a.at(2).code) % 5};
    };

    auto q1 = restrict1(q, Value{2});
    REQUIRE(q1.modulus.has_value());
    CHECK(*q1.modulus == 2);
    // q1(beta) must equal q(2 :: beta).
    Seq<Value> r = ramp();
    CHECK(q1.eval(r) == q.eval(cons(Value{2}, r)));

    auto qs = restrict_outcome(q, codes_path({1, 2}));
    REQUIRE(qs.modulus.has_value());
    CHECK(*qs.modulus == 1);
    CHECK(qs.eval(r) == q.eval(prepend(codes_path({1, 2}), r)));

    // Restricting past the modulus clamps at zero and fixes the value.
    auto deep = restrict_outcome(q, codes_path({1, 2, 3, 0}));
    REQUIRE(deep.modulus.has_value());
    CHECK(*deep.modulus == 0);
    CHECK(deep.eval(r) == deep.eval(zero_seq()));

    // The restricted outcome never reads beyond its declared modulus.
    auto reads = std::make_shared<long>(-1);
    q1.eval(probed(zero_seq(), reads));
    CHECK(*reads < *q1.modulus);
  }

  TEST_CASE("omega restriction keeps the bound and trims the modulus") {
    OmegaFn<Value> w;
    w.modulus = 3;
    w.bound = 7;
    w.raw = [](const Seq<Value>& a) {
      return static_cast<long>(a.at(0).code + a.at(2).code);
    };
    auto ws = restrict_omega(w, codes_path({3, 1}));
    CHECK(ws.modulus == 1);
    CHECK(ws.bound == 7);
    Seq<Value> r = ramp();
    CHECK(ws.eval(r) == w.eval(prepend(codes_path({3, 1}), r)));
  }

  TEST_CASE("omega bound violations are reported") {
    OmegaFn<Value> w;
    w.modulus = 1;
    w.bound = 2;
    w.raw = [](const Seq<Value>& a) { return static_cast<long>(a.at(0).code); };
    CHECK(w.eval(Seq<Value>::constant(Value{2})) == 2);
    CHECK_THROWS_AS(w.eval(Seq<Value>::constant(Value{3})), ContractViolation);
  }
}
