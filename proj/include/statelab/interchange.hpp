#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statelab/automaton.hpp"
#include "statelab/formula.hpp"

namespace statelab {

// Line-oriented text format:
//
//   # comment
//   alphabet: 0 1 #
//   states: q0 q1 q2
//   initial: q0
//   accepting: q1
//   trans q0 1 -> q1 & (q0 | q2)
//
// Formulas use atoms, T, F, parentheses, '&' and '|' ('&' binds tighter).

struct ParsedFormula {
  Formula formula;
  // Atom i of `formula` is State{0, {i}} and stands for names[i], numbered in
  // order of first appearance.
  std::vector<std::string> names;
};

ParsedFormula parse_formula(std::string_view text);

// Resolver returns nullopt for unknown atoms, which raises ParseError.
Formula parse_formula(std::string_view text,
                      const std::function<std::optional<State>(std::string_view)>& resolve);

// One `trans`/`ptrans` line with source positions kept for diagnostics.
struct TransitionLine {
  std::string state;
  Letter letter = 0;
  std::string body;
  int line = 0;
  int body_column = 0;
};

// Header and transition lines of a document, before semantic checks.
struct InterchangeDocument {
  std::optional<Alphabet> alphabet;
  std::vector<std::string> states;
  std::optional<std::string> initial;
  std::vector<std::string> accepting;
  std::vector<TransitionLine> trans;
  std::vector<TransitionLine> ptrans;
  int states_line = 0;
  int initial_line = 0;
  int accepting_line = 0;
};

InterchangeDocument parse_document(std::string_view text);

// Checks declarations, resolves every formula, and requires exactly one
// transition per declared (state, letter) pair.
TableAutomaton load_automaton(std::string_view text, std::string name = "loaded");

// Canonical text: declaration order for letters and states, one `trans` line
// per (state, letter) in that order.
std::string serialize(const TableAutomaton& automaton);

}  // namespace statelab
