#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statelab/formula.hpp"
#include "statelab/word.hpp"

namespace statelab {

// Default cap on the number of states an exploration may materialise.
inline constexpr std::size_t kDefaultStateCap = 20'000'000;

// A symbolic alternating automaton (Q, q0, delta, F) over a possibly infinite
// state domain. States are produced lazily by delta; implementations are
// immutable and safe to share between threads.
class Automaton {
 public:
  virtual ~Automaton() = default;

  virtual std::string name() const = 0;
  virtual const Alphabet& alphabet() const = 0;
  virtual State initial() const = 0;
  // Throws ModelError when delta is undefined on (q, a).
  virtual Formula delta(const State& q, Letter a) const = 0;
  virtual bool accepting(const State& q) const = 0;

  virtual std::string state_label(const State& q) const;
  // The full state set when it is finite and enumerable.
  virtual std::optional<std::vector<State>> all_states() const { return std::nullopt; }
};

using AutomatonPtr = std::shared_ptr<const Automaton>;

// Automaton whose transition function is ordinary code.
class SymbolicAutomaton final : public Automaton {
 public:
  using Delta = std::function<Formula(const State&, Letter)>;
  using Accepting = std::function<bool(const State&)>;
  using Label = std::function<std::string(const State&)>;

  SymbolicAutomaton(std::string name, Alphabet alphabet, State initial, Delta delta,
                    Accepting accepting, Label label = {});

  std::string name() const override { return name_; }
  const Alphabet& alphabet() const override { return alphabet_; }
  State initial() const override { return initial_; }
  Formula delta(const State& q, Letter a) const override { return delta_(q, a); }
  bool accepting(const State& q) const override { return accepting_(q); }
  std::string state_label(const State& q) const override;

 private:
  std::string name_;
  Alphabet alphabet_;
  State initial_;
  Delta delta_;
  Accepting accepting_;
  Label label_;
};

// Finite automaton given by an explicit transition table. State i is
// State{0, {i, 0, 0}}; names are kept for serialisation.
class TableAutomaton final : public Automaton {
 public:
  // transitions[i * |A| + rank(a)] is delta(state i, a).
  TableAutomaton(std::string name, Alphabet alphabet, std::vector<std::string> state_names,
                 std::size_t initial, std::vector<bool> accepting,
                 std::vector<Formula> transitions);

  std::string name() const override { return name_; }
  const Alphabet& alphabet() const override { return alphabet_; }
  State initial() const override { return state_at(initial_); }
  Formula delta(const State& q, Letter a) const override;
  bool accepting(const State& q) const override;
  std::string state_label(const State& q) const override;
  std::optional<std::vector<State>> all_states() const override;

  std::size_t state_count() const noexcept { return names_.size(); }
  std::size_t initial_index() const noexcept { return initial_; }
  const std::vector<std::string>& state_names() const noexcept { return names_; }
  bool accepting_index(std::size_t i) const { return accepting_.at(i); }
  const Formula& transition(std::size_t i, Letter a) const;

  static State state_at(std::size_t i) { return make_state(0, static_cast<std::int64_t>(i)); }

 private:
  std::size_t index_of(const State& q) const;

  std::string name_;
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::size_t initial_;
  std::vector<bool> accepting_;
  std::vector<Formula> transitions_;
};

enum class AutomatonKind { kDeterministic, kUniversal, kNondeterministic, kAlternating };

std::string to_string(AutomatonKind kind);

// Acceptance via the backward value recursion over (state, position), which
// coincides with Eve winning the acceptance game for positive formulas.
bool accepts(const Automaton& automaton, std::string_view word);

struct DetRun {
  // nullopt once the run has fallen into a True/False sink.
  std::optional<State> state;
  bool accepted = false;
};

// Follows single-atom transitions; throws KindError on any compound formula.
DetRun run_det(const Automaton& automaton, std::string_view word);

// R(0) = {q0}; R(k+1) = R(k) together with the atoms of delta(q, a) for q in
// R(k). Returned in canonical order. Throws BudgetExceeded past `state_cap`.
std::vector<State> reachable(const Automaton& automaton, std::size_t depth,
                             std::size_t state_cap = kDefaultStateCap);

// |R(0)|, ..., |R(max_depth)| from a single breadth-first sweep.
std::vector<std::uint64_t> reachable_counts(const Automaton& automaton, std::size_t max_depth,
                                            std::size_t state_cap = kDefaultStateCap);

// Most restrictive kind consistent with delta on reachable(depth) x alphabet.
// Constants count as atomic (they are sink atoms).
AutomatonKind kind(const Automaton& automaton, std::size_t depth);

// Language-equivalent deterministic automaton. Each deterministic state is
// the monotone boolean function over Q that a prefix induces on the
// acceptance of the remaining suffix (doubly exponential in |Q|). Throws
// Unsupported when the state set is not finite or has more than 16 states.
TableAutomaton determinize_finite(const Automaton& automaton);

}  // namespace statelab
