#include "selrec/demo.hpp"

#include <random>
#include <sstream>

#include "selrec/barrec.hpp"
#include "selrec/families.hpp"
#include "selrec/selection.hpp"

namespace selrec {

namespace {

Selection<Value, long> argmax_move() {
  return [](const Predicate<Value, long>& p) {
    long v0 = p(Value{0});
    long v1 = p(Value{1});
    return v1 > v0 ? Value{1} : Value{0};
  };
}

Selection<Value, long> argmin_move() {
  return [](const Predicate<Value, long>& p) {
    long v0 = p(Value{0});
    long v1 = p(Value{1});
    return v1 < v0 ? Value{1} : Value{0};
  };
}

size_t path_key(const Path<Value>& s) {
  std::vector<int> codes;
  codes.reserve(s.size());
  for (const auto& v : s) codes.push_back(v.code);
  return tuple_key(codes, 2);
}

long minimax(const std::vector<long>& payoff, long depth, Path<Value>& s) {
  if (static_cast<long>(s.size()) == depth) return payoff[path_key(s)];
  long best = 0;
  bool maximize = s.size() % 2 == 0;
  for (int c = 0; c < 2; ++c) {
    s.push_back(Value{c});
    long v = minimax(payoff, depth, s);
    s.pop_back();
    if (c == 0 || (maximize ? v > best : v < best)) best = v;
  }
  return best;
}

}  // namespace

GameReport demo_game(long depth, unsigned long long seed) {
  GameReport g;
  g.depth = depth;
  std::mt19937_64 eng(seed);
  g.payoff.resize(pow_card(2, depth));
  for (auto& v : g.payoff) v = static_cast<long>(eng() % 10);

  std::vector<Selection<Value, long>> rounds;
  for (long i = 0; i < depth; ++i)
    rounds.push_back(i % 2 == 0 ? argmax_move() : argmin_move());
  Predicate<Path<Value>, long> p = [&g](const Path<Value>& s) { return g.payoff[path_key(s)]; };
  g.play = finite_prod(rounds)(p);
  g.value = g.payoff[path_key(g.play)];

  Path<Value> s;
  g.oracle_value = minimax(g.payoff, depth, s);
  while (static_cast<long>(s.size()) < depth) {
    long target = minimax(g.payoff, depth, s);
    int hits = 0;
    int move = 0;
    for (int c = 1; c >= 0; --c) {
      s.push_back(Value{c});
      if (minimax(g.payoff, depth, s) == target) {
        ++hits;
        move = c;
      }
      s.pop_back();
    }
    if (hits > 1) g.optimal_tie = true;
    s.push_back(Value{move});
  }
  g.oracle_play = s;
  g.matches_oracle = g.play == g.oracle_play && g.value == g.oracle_value;
  return g;
}

std::string render_game(const GameReport& g) {
  std::ostringstream out;
  out << "alternating game, depth " << g.depth << " (max moves first, min replies)\n";
  out << "payoffs:";
  for (size_t i = 0; i < g.payoff.size() && i < 16; ++i) out << " " << g.payoff[i];
  if (g.payoff.size() > 16) out << " ... (" << g.payoff.size() << " leaves)";
  out << "\n";
  out << "product play:  " << path_to_string(g.play) << " -> " << g.value << "\n";
  out << "oracle play:   " << path_to_string(g.oracle_play) << " -> " << g.oracle_value << "\n";
  if (g.optimal_tie) out << "note: several optimal lines exist; both sides break ties low\n";
  out << (g.matches_oracle ? "product of selections reproduces backward induction\n"
                           : "MISMATCH against backward induction\n");
  return out.str();
}

SearchReport demo_search(long modulus, unsigned long long seed) {
  SearchReport r;
  r.modulus = modulus;
  std::mt19937_64 eng(seed);
  r.table.resize(pow_card(2, modulus));
  for (auto& v : r.table) v = static_cast<int>(eng() % 2);
  for (int v : r.table) r.witness_exists = r.witness_exists || v == 1;

  Outcome<Value, Result> q;
  q.modulus = modulus;
  q.eval = [table = r.table, modulus](const Seq<Value>& alpha) {
    std::vector<int> codes;
    for (long i = 0; i < modulus; ++i) codes.push_back(alpha.at(i).code);
    return Result{table[tuple_key(codes, 2)]};
  };
  PosFamily<Selection<Value, Result>> sel = [](long) { return hilbert_selection(); };
  Seq<Value> alpha = ips<Value, Result>(0, sel, q, make_fuel());
  for (long i = 0; i < modulus; ++i) r.alpha.push_back(alpha.at(i).code);
  r.found = q.eval(alpha).code == 1;
  r.agrees = r.found == r.witness_exists;
  return r;
}

std::string render_search(const SearchReport& r) {
  std::ostringstream out;
  out << "search over boolean sequences, predicate reads " << r.modulus << " entries\n";
  out << "table:";
  for (int v : r.table) out << " " << v;
  out << "\n";
  out << "found point prefix: [";
  for (size_t i = 0; i < r.alpha.size(); ++i) out << (i ? "," : "") << r.alpha[i];
  out << "], predicate " << (r.found ? "holds" : "fails") << "\n";
  out << "witness exists by brute force: " << (r.witness_exists ? "yes" : "no") << "\n";
  out << (r.agrees ? "search agrees with brute force\n" : "MISMATCH against brute force\n");
  return out.str();
}

}  // namespace selrec
