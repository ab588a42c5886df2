#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "selrec/demo.hpp"
#include "selrec/harness.hpp"

using namespace selrec;

namespace {

nlohmann::ordered_json parsed_spec(long seed) {
  return nlohmann::ordered_json::parse(serialize_instance(random_instance(seed)));
}

std::string field_of(const std::string& doc) {
  try {
    parse_instance(doc);
  } catch (const ValidationError& e) {
    return e.field;
  }
  return "";
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("instance documents survive a round trip") {
    for (long seed : {1L, 2L, 3L, 17L, 99L}) {
      std::string text = serialize_instance(random_instance(seed));
      InstanceSpec spec = parse_instance(text);
      CHECK(serialize_instance(spec) == text);
    }
  }

  TEST_CASE("a start index round trips as an index") {
    auto j = parsed_spec(4);
    j["start"] = 2;
    InstanceSpec spec = parse_instance(j.dump());
    CHECK(spec.start_was_index);
    CHECK(spec.start.size() == 2);
    CHECK(spec.start[0].code == 0);
    auto j2 = nlohmann::ordered_json::parse(serialize_instance(spec));
    CHECK(j2["start"] == 2);
  }

  TEST_CASE("generation is a pure function of the seed") {
    CHECK(serialize_instance(random_instance(42)) ==
          serialize_instance(random_instance(42)));
    CHECK(serialize_instance(random_instance(42)) !=
          serialize_instance(random_instance(43)));
  }

  TEST_CASE("validation errors name the offending field") {
    auto missing = parsed_spec(1);
    missing.erase("x_card");
    CHECK(field_of(missing.dump()) == "x_card");

    auto card = parsed_spec(1);
    card["x_card"] = 9;
    CHECK(field_of(card.dump()) == "x_card");

    auto table = parsed_spec(1);
    table["outcome"]["table"] = {0};
    CHECK(field_of(table.dump()) == "outcome.table");

    auto kind = parsed_spec(1);
    kind["selection_family"]["kind"] = "mystery";
    CHECK(field_of(kind.dump()) == "selection_family.kind");

    auto depth = parsed_spec(1);
    depth["depth"] = 0;
    CHECK(field_of(depth.dump()) == "depth");

    auto omega = parsed_spec(1);
    omega["omega"]["bound"] = 0;
    omega["omega"]["table"] = std::vector<long>(omega["omega"]["table"].size(), 1);
    std::string f = field_of(omega.dump());
    CHECK(f.substr(0, 5) == "omega");

    auto start = parsed_spec(1);
    start["start"] = "abc";
    CHECK(field_of(start.dump()) == "start");
  }

  TEST_CASE("unreadable documents raise a parse error") {
    CHECK_THROWS_AS(parse_instance("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_instance("[1, 2, 3]"), ParseError);
    CHECK_THROWS_AS(parse_instance_file("/nonexistent/instance.json"), ParseError);
  }

  TEST_CASE("seeded instances build working families") {
    auto instances = seeded_instances(5);
    REQUIRE(instances.size() == 5);
    for (size_t i = 0; i < instances.size(); ++i) {
      CHECK(instances[i].seed == static_cast<long>(i) + 1);
      InstanceFamilies fam = build_families(instances[i].spec);
      CHECK(fam.spec->x_card == instances[i].spec.x_card);
    }
  }

  TEST_CASE("recursor names are recognised with their shapes") {
    for (const char* name : {"eps", "EPS", "ips", "IPS", "mbr", "MBR", "MBRprime", "SBR"}) {
      CHECK(known_recursor(name));
      CHECK(recursor_returns_seq(name));
    }
    for (const char* name : {"epq", "EPQ", "BR"}) {
      CHECK(known_recursor(name));
      CHECK_FALSE(recursor_returns_seq(name));
    }
    CHECK_FALSE(known_recursor("bogus"));
    CHECK_FALSE(known_recursor(""));
  }

  TEST_CASE("evaluating a recursor by name is deterministic") {
    InstanceFamilies fam = build_families(random_instance(11));
    auto f1 = make_fuel(fam.fuel_budget);
    auto f2 = make_fuel(fam.fuel_budget);
    Seq<Value> a = eval_seq_recursor("eps", fam, f1);
    Seq<Value> b = eval_seq_recursor("eps", fam, f2);
    for (long i = 0; i < 12; ++i) CHECK(a.at(i).code == b.at(i).code);

    auto f3 = make_fuel(fam.fuel_budget);
    auto f4 = make_fuel(fam.fuel_budget);
    CHECK(eval_result_recursor("epq", fam, f3).code ==
          eval_result_recursor("epq", fam, f4).code);
  }

  TEST_CASE("the comparison loop detects a corrupted stream") {
    auto instances = seeded_instances(6);
    SeqEval native = [](const InstanceFamilies& fam, FuelHandle fuel) {
      return eval_seq_recursor("eps", fam, fuel);
    };
    SeqEval corrupted = [](const InstanceFamilies& fam, FuelHandle fuel) {
      Seq<Value> base = eval_seq_recursor("eps", fam, fuel);
      int x_card = fam.spec->x_card;
      return Seq<Value>::from_fn([base, x_card](long i) {
        Value v = base.at(i);
        if (i == 0) return Value{(v.code + 1) % x_card};
        return v;
      });
    };
    CheckReport rep =
        compare_seq_evals("corrupted", "eps", instances, corrupted, native, 10);
    CHECK(rep.failures.size() == instances.size());
    for (const auto& f : rep.failures) {
      CHECK(f.index == 0);
      CHECK(f.expected != f.got);
    }

    CheckReport clean = compare_seq_evals("eps", "eps", instances, native, native, 10);
    CHECK(clean.pass());
  }

  TEST_CASE("an exhausted budget is reported per instance, not thrown") {
    auto instances = seeded_instances(3);
    CheckReport rep = check_cell("eps_via_epq", instances, 10, 0);
    CHECK(rep.failures.size() == 3);
    for (const auto& f : rep.failures) {
      CHECK(f.index == -1);
      CHECK(f.got == "FuelExhausted");
    }
  }

  TEST_CASE("suite runner produces a machine-readable report") {
    SuiteConfig config;
    config.suite = "interdef";
    config.seeds = 3;
    config.depth = 10;
    SuiteResult res = run_suite(config);
    CHECK(res.pass);
    CHECK(res.summary.find("[PASS]") != std::string::npos);
    CHECK(res.summary.find("[FAIL]") == std::string::npos);

    auto j = nlohmann::ordered_json::parse(res.report_text);
    CHECK(j["tool"] == "selrec");
    CHECK(j["suite"] == "interdef");
    CHECK(j["seeds"] == 3);
    CHECK(j["pass"] == true);
    CHECK(j.contains("elapsed_ms"));
    REQUIRE(j["results"].is_array());
    bool saw_cells = false;
    for (const auto& group : j["results"]) {
      if (group.contains("cells")) {
        saw_cells = true;
        CHECK(group["cells"].size() == 11);
      }
    }
    CHECK(saw_cells);
  }

  TEST_CASE("suite reports are identical across runs up to timing") {
    SuiteConfig config;
    config.suite = "seqcore";
    config.seeds = 3;
    config.depth = 10;
    auto first = nlohmann::ordered_json::parse(run_suite(config).report_text);
    auto second = nlohmann::ordered_json::parse(run_suite(config).report_text);
    first.erase("elapsed_ms");
    second.erase("elapsed_ms");
    CHECK(first.dump() == second.dump());
  }

  TEST_CASE("unknown suite names are rejected") {
    SuiteConfig config;
    config.suite = "everything";
    CHECK_THROWS_AS(run_suite(config), std::invalid_argument);
  }

  TEST_CASE("game demo plays every seeded game optimally") {
    for (long depth = 1; depth <= 4; ++depth) {
      for (unsigned long long seed = 1; seed <= 5; ++seed) {
        GameReport g = demo_game(depth, seed);
        CHECK_MESSAGE(g.matches_oracle, "depth ", depth, " seed ", seed);
        CHECK(g.value == g.oracle_value);
        CHECK(g.play.size() == static_cast<size_t>(depth));
        CHECK(render_game(g).find("payoff") != std::string::npos);
      }
    }
  }

  TEST_CASE("search demo agrees with brute force") {
    for (long modulus = 0; modulus <= 4; ++modulus) {
      for (unsigned long long seed = 1; seed <= 5; ++seed) {
        SearchReport r = demo_search(modulus, seed);
        CHECK_MESSAGE(r.agrees, "modulus ", modulus, " seed ", seed);
        CHECK(r.found == r.witness_exists);
      }
    }
  }
}
