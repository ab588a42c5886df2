#pragma once

#include <memory>

#include "selrec/errors.hpp"

namespace selrec {

inline constexpr long long kDefaultFuel = 100000;

// Shared countdown of recursor unfoldings. Every recursion scheme ticks this
// once per unfolding; lazily produced tails tick when they are first forced,
// so one evaluation context keeps a single budget across demand-driven reads.
struct FuelState {
  long long remaining = kDefaultFuel;
  long long initial = kDefaultFuel;
};

using FuelHandle = std::shared_ptr<FuelState>;

inline FuelHandle make_fuel(long long budget = kDefaultFuel) {
  auto f = std::make_shared<FuelState>();
  f->remaining = budget;
  f->initial = budget;
  return f;
}

inline void tick(const FuelHandle& fuel) {
  if (fuel->remaining <= 0) throw FuelExhausted{};
  --fuel->remaining;
}

inline long long fuel_used(const FuelHandle& fuel) {
  return fuel->initial - fuel->remaining;
}

}  // namespace selrec
