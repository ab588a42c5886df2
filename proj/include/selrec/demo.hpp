#pragma once

#include <string>
#include <vector>

#include "selrec/domain.hpp"

namespace selrec {

// Alternating two-player game over boolean moves: the product of one
// argmax/argmin selection per round plays the whole game at once.
struct GameReport {
  long depth = 0;
  std::vector<long> payoff;  // size 2^depth, indexed by the move path
  Path<Value> play;
  long value = 0;
  Path<Value> oracle_play;  // backward induction, least move on ties
  long oracle_value = 0;
  bool optimal_tie = false;  // some position had more than one optimal move
  bool matches_oracle = false;
};

GameReport demo_game(long depth, unsigned long long seed);
std::string render_game(const GameReport& g);

// Exhaustive search over boolean sequences: the implicit product of search
// selections finds a satisfying point exactly when one exists.
struct SearchReport {
  long modulus = 0;
  std::vector<int> table;  // predicate truth table, size 2^modulus
  std::vector<int> alpha;  // decisive prefix of the found point
  bool found = false;
  bool witness_exists = false;  // brute-force scan of the table
  bool agrees = false;
};

SearchReport demo_search(long modulus, unsigned long long seed);
std::string render_search(const SearchReport& r);

}  // namespace selrec
