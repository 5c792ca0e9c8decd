#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "statelab/word.hpp"

namespace statelab {

// Exact arbitrary-precision rational, always in canonical reduced form.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Fractional binary value a1/2^n + ... + an/2 of a word over {0,1}; 0 on ε.
Rational bin_frac(std::string_view u);
// Integer value sum_i u(i) 2^i, least significant digit first; 0 on ε.
// Throws Unsupported when the value does not fit in 64 bits.
std::uint64_t bin_int(std::string_view u);

using Matrix = std::vector<std::vector<Rational>>;

// Finite probabilistic automaton with one row-stochastic matrix per letter.
class ProbAutomaton {
 public:
  // matrices[rank(a)][s][t] is the probability of s -a-> t.
  ProbAutomaton(std::string name, Alphabet alphabet, std::vector<std::string> states,
                std::size_t initial, std::vector<bool> accepting, std::vector<Matrix> matrices);

  const std::string& name() const noexcept { return name_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& states() const noexcept { return states_; }
  std::size_t initial() const noexcept { return initial_; }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }
  const Matrix& matrix(Letter a) const { return matrices_[alphabet_.rank(a)]; }

 private:
  std::string name_;
  Alphabet alphabet_;
  std::vector<std::string> states_;
  std::size_t initial_;
  std::vector<bool> accepting_;
  std::vector<Matrix> matrices_;
};

// phi(w) = phi(w(0)) ... phi(w(n-1)); the identity on ε.
Matrix word_matrix(const ProbAutomaton& automaton, std::string_view word);
Matrix multiply(const Matrix& a, const Matrix& b);

// Sum over accepting t of phi(w)(q0, t), computed by pushing the initial
// distribution through the letter matrices.
Rational acceptance_probability(const ProbAutomaton& automaton, std::string_view word);

// Three states (q0 initial, q1 accepting, dead sink) over {0,1,#} with
// P(u) = bin_frac(u) on binary words and P(u1#...#uk) = prod bin_frac(ui).
ProbAutomaton rabin_automaton();

// Words whose acceptance probability strictly exceeds the threshold.
struct ThresholdLanguage {
  ProbAutomaton automaton;
  Rational threshold;
};

ThresholdLanguage make_threshold_language(ProbAutomaton automaton, Rational threshold);
bool threshold_member(const ThresholdLanguage& language, std::string_view word);

// Shortest binary w with lo < bin_frac(w) < hi, canonically smallest among
// those of that length. Requires 0 <= lo < hi <= 1.
Word dyadic_witness(const Rational& lo, const Rational& hi);

// Suffix "#w" on which u1 and v1 fall on opposite sides of the 1/2 cut point
// of the Rabin automaton; u and v must be distinct binary words of equal
// length. The separation is re-verified before returning.
Word separate_quotients(std::string_view u, std::string_view v);

struct StochasticViolation {
  Letter letter;
  std::string state;
  std::string reason;
};

std::vector<StochasticViolation> validate_stochastic(const ProbAutomaton& automaton);

// Interchange text with `ptrans <state> <letter> -> <state>:<num>/<den> ...`
// lines; omitted targets are 0. Rejects non-stochastic input.
ProbAutomaton load_prob_automaton(std::string_view text, std::string name = "loaded");

}  // namespace statelab
