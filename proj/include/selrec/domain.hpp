#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "selrec/seq.hpp"

namespace selrec {

// Element of the finite ground type, encoded as a small natural.
struct Value {
  int code = 0;
  friend bool operator==(const Value&, const Value&) = default;
};

// Element of the finite result type.
struct Result {
  int code = 0;
  friend bool operator==(const Result&, const Result&) = default;
};

inline Value zero_value() { return Value{0}; }

inline Seq<Value> zero_seq() { return Seq<Value>::constant(Value{0}); }

// Big-endian mixed-radix key of a tuple of codes; tables are listed in
// lexicographic tuple order.
inline size_t tuple_key(const std::vector<int>& codes, int card) {
  size_t key = 0;
  for (int c : codes) key = key * static_cast<size_t>(card) + static_cast<size_t>(c);
  return key;
}

inline size_t pow_card(int card, long exp) {
  size_t n = 1;
  for (long i = 0; i < exp; ++i) n *= static_cast<size_t>(card);
  return n;
}

inline std::string path_to_string(const Path<Value>& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i].code);
  }
  return out + "]";
}

inline std::string seq_prefix_string(const Seq<Value>& alpha, long depth) {
  std::string out = "[";
  for (long i = 0; i < depth; ++i) {
    if (i) out += ",";
    out += std::to_string(alpha.at(i).code);
  }
  return out + ",...]";
}

}  // namespace selrec
