#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statelab/automaton.hpp"
#include "statelab/prob.hpp"
#include "statelab/profiler.hpp"
#include "statelab/quotient.hpp"

namespace statelab {

// A named language with its membership oracle and, where one exists, an
// automaton recognising it together with the state-complexity class that
// automaton is claimed to achieve.
struct LanguageSpec {
  std::string name;
  LanguagePtr oracle;
  AutomatonPtr automaton;  // null when the language has no automaton here
  std::optional<DeclaredBound> declared;
  // Oracle and automaton must agree on every word up to this length.
  std::size_t validation_length = 0;

  const Alphabet& alphabet() const { return oracle->alphabet(); }
};

// {a,b,c}: equal numbers of a, b and c. Deterministic counter automaton on Z^2.
LanguageSpec count_eq3();
// {0,1,#}: u#v with u != v. Nondeterministic, linear.
LanguageSpec not_eq_lang();
// {0,1,#}: u#v with u strictly before v in lexicographic order (a proper
// prefix is smaller). Alternating, linear.
LanguageSpec lexicographic();
// {0,1,#}: u#u1#...#uk, k >= 1, with u equal to the reverse of some uj.
LanguageSpec l_exp();
// {0,1,◊,#}: ◊^p u#u1#...#uk with 1 <= k <= p^level and u = uj for some j.
// Three-phase alternating automaton. Throws InputError for level < 2.
LanguageSpec l_hierarchy(unsigned level);
// {0,1}: words whose least-significant-first binary value is prime.
LanguageSpec primes();
// {a,b,#}: w = uv#u with |u| = floor(log2 |w|).
LanguageSpec l_log();
// {a,b}: more a than b. Deterministic counter automaton on Z.
LanguageSpec maj2();
// {0,1,#}: words with acceptance probability > 1/2 in the Rabin automaton.
LanguageSpec rabin_half();

// Names: count-eq3, not-eq, lex, l-exp, l-hier:<level>, primes, l-log, maj2,
// rabin-half. Throws InputError for unknown names.
LanguageSpec gallery_entry(std::string_view name);
std::vector<std::string> gallery_names();

}  // namespace statelab
