#include "selrec/instance.hpp"

#include <random>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace selrec {

using ordered_json = nlohmann::ordered_json;

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Argmin: return "argmin";
    case FamilyKind::Table: return "table";
    case FamilyKind::Parity: return "parity";
  }
  return "argmin";
}

FamilyKind family_kind_from_name(const std::string& name, const std::string& field) {
  if (name == "argmin") return FamilyKind::Argmin;
  if (name == "table") return FamilyKind::Table;
  if (name == "parity") return FamilyKind::Parity;
  throw ValidationError(field, "unknown family kind \"" + name +
                                   "\" (expected argmin, table or parity)");
}

namespace {

const ordered_json& expect_field(const ordered_json& j, const std::string& field,
                                 const std::string& prefix) {
  auto it = j.find(field);
  if (it == j.end())
    throw ValidationError(prefix.empty() ? field : prefix + "." + field,
                          "missing field");
  return *it;
}

long expect_long(const ordered_json& j, const std::string& field,
                 const std::string& prefix) {
  const auto& v = expect_field(j, field, prefix);
  if (!v.is_number_integer())
    throw ValidationError(prefix.empty() ? field : prefix + "." + field,
                          "expected an integer");
  return v.get<long>();
}

std::vector<long> expect_long_array(const ordered_json& v, const std::string& field) {
  if (!v.is_array()) throw ValidationError(field, "expected an array of integers");
  std::vector<long> out;
  for (const auto& e : v) {
    if (!e.is_number_integer())
      throw ValidationError(field, "expected an array of integers");
    out.push_back(e.get<long>());
  }
  return out;
}

std::vector<int> to_int_vector(const std::vector<long>& in) {
  return std::vector<int>(in.begin(), in.end());
}

FamilySpec parse_family(const ordered_json& j, const std::string& field) {
  FamilySpec fam;
  const auto& kind = expect_field(j, "kind", field);
  if (!kind.is_string()) throw ValidationError(field + ".kind", "expected a string");
  fam.kind = family_kind_from_name(kind.get<std::string>(), field + ".kind");
  if (fam.kind == FamilyKind::Argmin) return fam;
  const auto& banks = expect_field(j, "banks", field);
  if (!banks.is_array()) throw ValidationError(field + ".banks", "expected an array");
  for (size_t i = 0; i < banks.size(); ++i) {
    fam.banks.push_back(to_int_vector(
        expect_long_array(banks[i], field + ".banks[" + std::to_string(i) + "]")));
  }
  return fam;
}

SkewedFamilySpec parse_skewed_family(const ordered_json& j, const std::string& field) {
  SkewedFamilySpec fam;
  const auto& kind = expect_field(j, "kind", field);
  if (!kind.is_string()) throw ValidationError(field + ".kind", "expected a string");
  fam.kind = family_kind_from_name(kind.get<std::string>(), field + ".kind");
  if (fam.kind == FamilyKind::Argmin) return fam;
  const auto& banks = expect_field(j, "banks", field);
  if (!banks.is_array()) throw ValidationError(field + ".banks", "expected an array");
  for (size_t i = 0; i < banks.size(); ++i) {
    const std::string bfield = field + ".banks[" + std::to_string(i) + "]";
    if (!banks[i].is_object()) throw ValidationError(bfield, "expected an object");
    SkewedBank bank;
    bank.table = to_int_vector(
        expect_long_array(expect_field(banks[i], "table", bfield), bfield + ".table"));
    bank.prefix = to_int_vector(
        expect_long_array(expect_field(banks[i], "prefix", bfield), bfield + ".prefix"));
    fam.banks.push_back(std::move(bank));
  }
  return fam;
}

void check_range(long v, long lo, long hi, const std::string& field) {
  if (v < lo || v > hi)
    throw ValidationError(field, "value " + std::to_string(v) + " outside [" +
                                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void check_table_size(size_t got, size_t want, const std::string& field) {
  if (got != want)
    throw ValidationError(field, "table has " + std::to_string(got) +
                                     " entries, expected " + std::to_string(want));
}

void validate_family(const FamilySpec& fam, size_t graph_size, int out_card,
                     const std::string& field) {
  if (fam.kind == FamilyKind::Argmin) return;
  if (fam.banks.empty()) throw ValidationError(field + ".banks", "needs at least one bank");
  for (size_t i = 0; i < fam.banks.size(); ++i) {
    const std::string bfield = field + ".banks[" + std::to_string(i) + "]";
    check_table_size(fam.banks[i].size(), graph_size, bfield);
    for (int code : fam.banks[i]) check_range(code, 0, out_card - 1, bfield);
  }
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("instance document must be an object");

  InstanceSpec spec;
  spec.x_card = static_cast<int>(expect_long(j, "x_card", ""));
  spec.r_card = static_cast<int>(expect_long(j, "r_card", ""));

  const auto& start = expect_field(j, "start", "");
  if (start.is_number_integer()) {
    long n = start.get<long>();
    if (n < 0) throw ValidationError("start", "index must be nonnegative");
    spec.start_was_index = true;
    spec.start.assign(static_cast<size_t>(n), Value{0});
  } else if (start.is_array()) {
    for (long code : expect_long_array(start, "start"))
      spec.start.push_back(Value{static_cast<int>(code)});
  } else {
    throw ValidationError("start", "expected an index or a path of value codes");
  }

  spec.selection_family =
      parse_family(expect_field(j, "selection_family", ""), "selection_family");
  spec.quantifier_family =
      parse_family(expect_field(j, "quantifier_family", ""), "quantifier_family");
  spec.skewed_family =
      parse_skewed_family(expect_field(j, "skewed_family", ""), "skewed_family");

  const auto& outcome = expect_field(j, "outcome", "");
  spec.outcome.modulus = expect_long(outcome, "modulus", "outcome");
  spec.outcome.table = to_int_vector(
      expect_long_array(expect_field(outcome, "table", "outcome"), "outcome.table"));

  const auto& length = expect_field(j, "length", "");
  const auto& lkind = expect_field(length, "kind", "length");
  if (!lkind.is_string()) throw ValidationError("length.kind", "expected a string");
  if (lkind.get<std::string>() == "identity") {
    spec.length.identity = true;
  } else if (lkind.get<std::string>() == "table") {
    spec.length.identity = false;
    spec.length.table =
        expect_long_array(expect_field(length, "table", "length"), "length.table");
  } else {
    throw ValidationError("length.kind", "expected identity or table");
  }

  const auto& omega = expect_field(j, "omega", "");
  spec.omega.modulus = expect_long(omega, "modulus", "omega");
  spec.omega.bound = expect_long(omega, "bound", "omega");
  spec.omega.table =
      expect_long_array(expect_field(omega, "table", "omega"), "omega.table");

  spec.fuel = expect_long(j, "fuel", "");
  spec.depth = expect_long(j, "depth", "");

  validate_instance(spec);
  return spec;
}

InstanceSpec parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void validate_instance(const InstanceSpec& spec) {
  check_range(spec.x_card, 1, 4, "x_card");
  check_range(spec.r_card, 1, 8, "r_card");

  for (size_t i = 0; i < spec.start.size(); ++i)
    check_range(spec.start[i].code, 0, spec.x_card - 1,
                "start[" + std::to_string(i) + "]");

  const size_t graph_size = pow_card(spec.r_card, spec.x_card);
  validate_family(spec.selection_family, graph_size, spec.x_card, "selection_family");
  validate_family(spec.quantifier_family, graph_size, spec.r_card, "quantifier_family");

  if (spec.skewed_family.kind != FamilyKind::Argmin) {
    if (spec.skewed_family.banks.empty())
      throw ValidationError("skewed_family.banks", "needs at least one bank");
    for (size_t i = 0; i < spec.skewed_family.banks.size(); ++i) {
      const std::string bfield = "skewed_family.banks[" + std::to_string(i) + "]";
      const SkewedBank& bank = spec.skewed_family.banks[i];
      check_table_size(bank.table.size(), graph_size, bfield + ".table");
      for (int code : bank.table) check_range(code, 0, spec.x_card - 1, bfield + ".table");
      if (bank.prefix.size() > 4)
        throw ValidationError(bfield + ".prefix", "at most 4 entries");
      for (int slot : bank.prefix)
        check_range(slot, -1, spec.x_card - 1, bfield + ".prefix");
    }
  }

  check_range(spec.outcome.modulus, 0, 4, "outcome.modulus");
  check_table_size(spec.outcome.table.size(),
                   pow_card(spec.x_card, spec.outcome.modulus), "outcome.table");
  for (int code : spec.outcome.table)
    check_range(code, 0, spec.r_card - 1, "outcome.table");

  if (!spec.length.identity) {
    check_table_size(spec.length.table.size(), static_cast<size_t>(spec.r_card),
                     "length.table");
    for (long v : spec.length.table) check_range(v, 0, 1000, "length.table");
  }

  check_range(spec.omega.modulus, 0, 4, "omega.modulus");
  check_range(spec.omega.bound, 0, 1000, "omega.bound");
  check_table_size(spec.omega.table.size(),
                   pow_card(spec.x_card, spec.omega.modulus), "omega.table");
  for (long v : spec.omega.table) {
    if (v < 0 || v > spec.omega.bound)
      throw ValidationError("omega.table", "value " + std::to_string(v) +
                                               " exceeds bound " +
                                               std::to_string(spec.omega.bound));
  }

  check_range(spec.fuel, 0, 1000000000L, "fuel");
  check_range(spec.depth, 1, 1000, "depth");
}

namespace {

ordered_json family_to_json(const FamilySpec& fam) {
  ordered_json j;
  j["kind"] = family_kind_name(fam.kind);
  if (fam.kind != FamilyKind::Argmin) j["banks"] = fam.banks;
  return j;
}

ordered_json skewed_to_json(const SkewedFamilySpec& fam) {
  ordered_json j;
  j["kind"] = family_kind_name(fam.kind);
  if (fam.kind != FamilyKind::Argmin) {
    ordered_json banks = ordered_json::array();
    for (const auto& bank : fam.banks) {
      ordered_json b;
      b["table"] = bank.table;
      b["prefix"] = bank.prefix;
      banks.push_back(std::move(b));
    }
    j["banks"] = std::move(banks);
  }
  return j;
}

}  // namespace

std::string serialize_instance(const InstanceSpec& spec) {
  ordered_json j;
  j["x_card"] = spec.x_card;
  j["r_card"] = spec.r_card;
  if (spec.start_was_index) {
    j["start"] = spec.start.size();
  } else {
    std::vector<int> codes;
    for (const auto& v : spec.start) codes.push_back(v.code);
    j["start"] = codes;
  }
  j["selection_family"] = family_to_json(spec.selection_family);
  j["quantifier_family"] = family_to_json(spec.quantifier_family);
  j["skewed_family"] = skewed_to_json(spec.skewed_family);
  j["outcome"] = {{"modulus", spec.outcome.modulus}, {"table", spec.outcome.table}};
  if (spec.length.identity) {
    j["length"] = {{"kind", "identity"}};
  } else {
    j["length"] = {{"kind", "table"}, {"table", spec.length.table}};
  }
  j["omega"] = {{"modulus", spec.omega.modulus},
                {"bound", spec.omega.bound},
                {"table", spec.omega.table}};
  j["fuel"] = spec.fuel;
  j["depth"] = spec.depth;
  return j.dump(2);
}

namespace {

// All draws go through pick() so the generated stream of values depends only
// on the engine, never on a distribution's library-specific algorithm.
long pick(std::mt19937_64& eng, long k) {
  return static_cast<long>(eng() % static_cast<unsigned long long>(k));
}

std::vector<int> random_table(std::mt19937_64& eng, size_t size, int card) {
  std::vector<int> out;
  out.reserve(size);
  for (size_t i = 0; i < size; ++i) out.push_back(static_cast<int>(pick(eng, card)));
  return out;
}

FamilyKind random_kind(std::mt19937_64& eng) {
  switch (pick(eng, 4)) {
    case 0: return FamilyKind::Argmin;
    case 3: return FamilyKind::Parity;
    default: return FamilyKind::Table;
  }
}

}  // namespace

InstanceSpec random_instance(unsigned long long seed, const RandomParams& params) {
  std::mt19937_64 eng(seed);
  InstanceSpec spec;
  spec.x_card = static_cast<int>(2 + pick(eng, params.x_card_max - 1));
  spec.r_card = static_cast<int>(2 + pick(eng, params.r_card_max - 1));

  long start_len = pick(eng, params.start_len_max + 1);
  for (long i = 0; i < start_len; ++i)
    spec.start.push_back(Value{static_cast<int>(pick(eng, spec.x_card))});

  const size_t graph_size = pow_card(spec.r_card, spec.x_card);

  spec.selection_family.kind = random_kind(eng);
  if (spec.selection_family.kind != FamilyKind::Argmin) {
    long nbanks = 1 + pick(eng, 2);
    for (long b = 0; b < nbanks; ++b)
      spec.selection_family.banks.push_back(random_table(eng, graph_size, spec.x_card));
  }

  spec.quantifier_family.kind = random_kind(eng);
  if (spec.quantifier_family.kind != FamilyKind::Argmin) {
    long nbanks = 1 + pick(eng, 2);
    for (long b = 0; b < nbanks; ++b)
      spec.quantifier_family.banks.push_back(random_table(eng, graph_size, spec.r_card));
  }

  spec.skewed_family.kind = random_kind(eng);
  if (spec.skewed_family.kind != FamilyKind::Argmin) {
    long nbanks = 1 + pick(eng, 2);
    for (long b = 0; b < nbanks; ++b) {
      SkewedBank bank;
      bank.table = random_table(eng, graph_size, spec.x_card);
      long plen = 1 + pick(eng, 3);
      for (long i = 0; i < plen; ++i) {
        bank.prefix.push_back(pick(eng, 2) == 0
                                  ? -1
                                  : static_cast<int>(pick(eng, spec.x_card)));
      }
      spec.skewed_family.banks.push_back(std::move(bank));
    }
  }

  spec.outcome.modulus = 1 + pick(eng, params.outcome_modulus_max);
  spec.outcome.table =
      random_table(eng, pow_card(spec.x_card, spec.outcome.modulus), spec.r_card);

  if (pick(eng, 2) == 0) {
    spec.length.identity = true;
  } else {
    spec.length.identity = false;
    for (int r = 0; r < spec.r_card; ++r)
      spec.length.table.push_back(pick(eng, params.length_value_max + 1));
  }

  spec.omega.modulus = pick(eng, params.omega_modulus_max + 1);
  spec.omega.bound = pick(eng, params.omega_bound_max + 1);
  size_t omega_size = pow_card(spec.x_card, spec.omega.modulus);
  for (size_t i = 0; i < omega_size; ++i)
    spec.omega.table.push_back(pick(eng, spec.omega.bound + 1));

  spec.fuel = params.fuel;
  spec.depth = params.depth;
  return spec;
}

}  // namespace selrec
