#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library beyond the Automaton interface.

#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "statelab/automaton.hpp"

namespace oracle {

// Every word over `letters` of length <= n, by recursion (order irrelevant).
inline std::vector<std::string> all_words(const std::string& letters, std::size_t n) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : letters) next.push_back(w + c);
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Min/max over the explicit game tree. Formulas are walked by hand rather than
// through Formula::evaluate.
inline bool game(const statelab::Automaton& a, const statelab::State& q, const std::string& w, std::size_t i) {
  using Op = statelab::Formula::Op;
  if (i == w.size()) return a.accepting(q);
  std::function<bool(const statelab::Formula&)> value = [&](const statelab::Formula& f) -> bool {
    switch (f.op()) {
      case Op::kTrue:
        return true;
      case Op::kFalse:
        return false;
      case Op::kAtom:
        return game(a, f.state(), w, i + 1);
      case Op::kAnd: {
        bool all = true;
        for (const auto& c : f.children()) all = value(c) && all;
        return all;
      }
      case Op::kOr: {
        bool any = false;
        for (const auto& c : f.children()) any = value(c) || any;
        return any;
      }
    }
    return false;
  };
  return value(a.delta(q, w[i]));
}

inline bool game(const statelab::Automaton& a, const std::string& w) { return game(a, a.initial(), w, 0); }

inline std::vector<bool> sieve(std::size_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= limit; ++i) {
    if (!prime[i]) continue;
    for (std::size_t j = i * i; j <= limit; j += i) prime[j] = false;
  }
  return prime;
}

inline bool trial_division(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

// Reduced fraction num/den with small integers.
using Fraction = std::pair<std::uint64_t, std::uint64_t>;

inline Fraction reduce(std::uint64_t num, std::uint64_t den) {
  const auto g = std::gcd(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

// a1/2^n + ... + an/2 straight from the definition.
inline Fraction bin_frac(const std::string& u) {
  std::uint64_t num = 0;
  const std::uint64_t den = std::uint64_t{1} << u.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == '1') num += std::uint64_t{1} << i;
  }
  return reduce(num, den);
}

inline Fraction multiply(Fraction a, Fraction b) { return reduce(a.first * b.first, a.second * b.second); }

// Reachable CountEq3 states: the letter-count differences of every prefix.
inline std::size_t count_eq3_reachable(std::size_t n) {
  std::set<std::pair<long, long>> seen;
  for (const auto& w : all_words("abc", n)) {
    long a = 0, b = 0, c = 0;
    for (char x : w) (x == 'a' ? a : x == 'b' ? b : c)++;
    seen.insert({a - b, a - c});
  }
  return seen.size();
}

}  // namespace oracle
