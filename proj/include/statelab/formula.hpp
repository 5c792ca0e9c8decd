#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace statelab {

// Opaque automaton state: a tag plus up to three integer components. Gallery
// automata use the tag for the phase and the components for counters; table
// automata use component 0 as the state index. The defaulted ordering is the
// canonical total order used by every report.
struct State {
  std::int32_t tag = 0;
  std::array<std::int64_t, 3> v{};

  friend auto operator<=>(const State&, const State&) = default;
  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint32_t>(s.tag);
    for (auto x : s.v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline State make_state(std::int32_t tag, std::int64_t a = 0, std::int64_t b = 0,
                        std::int64_t c = 0) {
  return State{tag, {a, b, c}};
}

// Positive boolean formula over states. True/False stand for accepting and
// rejecting sinks. And/Or nodes always have at least two children: the
// factories collapse singletons and reject empty lists.
class Formula {
 public:
  enum class Op : std::uint8_t { kFalse, kTrue, kAtom, kAnd, kOr };

  Formula() = default;  // False

  static Formula top() { return Formula(Op::kTrue); }
  static Formula bottom() { return Formula(Op::kFalse); }
  static Formula constant(bool b) { return b ? top() : bottom(); }
  static Formula atom(State q);
  static Formula all_of(std::vector<Formula> children);
  static Formula any_of(std::vector<Formula> children);

  Op op() const noexcept { return op_; }
  bool is_constant() const noexcept { return op_ == Op::kTrue || op_ == Op::kFalse; }
  // Only meaningful for atoms.
  const State& state() const noexcept { return state_; }
  const std::vector<Formula>& children() const noexcept { return children_; }

  // Atom or constant (constants are sink atoms).
  bool is_atomic() const noexcept { return op_ != Op::kAnd && op_ != Op::kOr; }
  // No disjunction anywhere.
  bool is_conjunctive() const noexcept;
  // No conjunction anywhere.
  bool is_disjunctive() const noexcept;

  // Appends every atom, in left-to-right order, duplicates included.
  void collect_atoms(std::vector<State>& out) const;

  template <class Truth>
  bool evaluate(Truth&& truth) const {
    switch (op_) {
      case Op::kFalse:
        return false;
      case Op::kTrue:
        return true;
      case Op::kAtom:
        return truth(state_);
      case Op::kAnd:
        for (const auto& c : children_) {
          if (!c.evaluate(truth)) return false;
        }
        return true;
      case Op::kOr:
        for (const auto& c : children_) {
          if (c.evaluate(truth)) return true;
        }
        return false;
    }
    return false;
  }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  explicit Formula(Op op) : op_(op) {}

  Op op_ = Op::kFalse;
  State state_{};
  std::vector<Formula> children_;
};

using TruthAssignment = std::unordered_map<State, bool, StateHash>;

// Monotone evaluation; throws InputError when an atom has no assignment.
bool eval_formula(const Formula& f, const TruthAssignment& truth);

// Infix rendering with '&' binding tighter than '|'.
std::string format_formula(const Formula& f, const std::function<std::string(const State&)>& label);

}  // namespace statelab
