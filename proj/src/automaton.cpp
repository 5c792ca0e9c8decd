#include "statelab/automaton.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "statelab/error.hpp"

namespace statelab {

std::string Automaton::state_label(const State& q) const {
  return std::to_string(q.tag) + ":(" + std::to_string(q.v[0]) + "," + std::to_string(q.v[1]) +
         "," + std::to_string(q.v[2]) + ")";
}

SymbolicAutomaton::SymbolicAutomaton(std::string name, Alphabet alphabet, State initial,
                                     Delta delta, Accepting accepting, Label label)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      initial_(initial),
      delta_(std::move(delta)),
      accepting_(std::move(accepting)),
      label_(std::move(label)) {}

std::string SymbolicAutomaton::state_label(const State& q) const {
  return label_ ? label_(q) : Automaton::state_label(q);
}

TableAutomaton::TableAutomaton(std::string name, Alphabet alphabet,
                               std::vector<std::string> state_names, std::size_t initial,
                               std::vector<bool> accepting, std::vector<Formula> transitions)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      names_(std::move(state_names)),
      initial_(initial),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
  if (names_.empty()) throw ModelError("automaton must have at least one state");
  if (initial_ >= names_.size()) throw ModelError("initial state out of range");
  if (accepting_.size() != names_.size()) throw ModelError("accepting flags do not match states");
  if (transitions_.size() != names_.size() * alphabet_.size()) {
    throw ModelError("transition table does not cover every (state, letter) pair");
  }
  std::vector<State> atoms;
  for (const auto& f : transitions_) f.collect_atoms(atoms);
  for (const auto& q : atoms) index_of(q);
}

std::size_t TableAutomaton::index_of(const State& q) const {
  if (q.tag != 0 || q.v[0] < 0 || static_cast<std::size_t>(q.v[0]) >= names_.size() ||
      q.v[1] != 0 || q.v[2] != 0) {
    throw ModelError("state " + Automaton::state_label(q) + " does not belong to " + name_);
  }
  return static_cast<std::size_t>(q.v[0]);
}

const Formula& TableAutomaton::transition(std::size_t i, Letter a) const {
  return transitions_.at(i * alphabet_.size() + alphabet_.rank(a));
}

Formula TableAutomaton::delta(const State& q, Letter a) const {
  return transition(index_of(q), a);
}

bool TableAutomaton::accepting(const State& q) const { return accepting_[index_of(q)]; }

std::string TableAutomaton::state_label(const State& q) const { return names_[index_of(q)]; }

std::optional<std::vector<State>> TableAutomaton::all_states() const {
  std::vector<State> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(state_at(i));
  return out;
}

std::string to_string(AutomatonKind kind) {
  switch (kind) {
    case AutomatonKind::kDeterministic:
      return "deterministic";
    case AutomatonKind::kUniversal:
      return "universal";
    case AutomatonKind::kNondeterministic:
      return "nondeterministic";
    case AutomatonKind::kAlternating:
      return "alternating";
  }
  return "alternating";
}

bool accepts(const Automaton& automaton, std::string_view word) {
  automaton.alphabet().check(word);
  const std::size_t n = word.size();

  // Forward sweep: the states occurring at each position, with their moves.
  std::vector<std::vector<State>> layers(n + 1);
  std::vector<std::unordered_map<State, std::size_t, StateHash>> index(n + 1);
  std::vector<std::vector<Formula>> moves(n);
  layers[0].push_back(automaton.initial());
  index[0].emplace(automaton.initial(), 0);
  std::vector<State> atoms;
  for (std::size_t i = 0; i < n; ++i) {
    moves[i].reserve(layers[i].size());
    for (const auto& q : layers[i]) {
      moves[i].push_back(automaton.delta(q, word[i]));
      atoms.clear();
      moves[i].back().collect_atoms(atoms);
      for (const auto& p : atoms) {
        if (index[i + 1].emplace(p, layers[i + 1].size()).second) layers[i + 1].push_back(p);
      }
    }
  }

  // Backward sweep: value(q, n) = F(q); value(q, i) = delta(q, w(i)) under value(., i+1).
  std::vector<char> next(layers[n].size());
  for (std::size_t k = 0; k < layers[n].size(); ++k) next[k] = automaton.accepting(layers[n][k]);
  for (std::size_t i = n; i-- > 0;) {
    std::vector<char> cur(layers[i].size());
    const auto& successors = index[i + 1];
    for (std::size_t k = 0; k < layers[i].size(); ++k) {
      cur[k] = moves[i][k].evaluate([&](const State& p) { return next[successors.at(p)] != 0; });
    }
    next = std::move(cur);
  }
  return next[0] != 0;
}

DetRun run_det(const Automaton& automaton, std::string_view word) {
  automaton.alphabet().check(word);
  State q = automaton.initial();
  for (Letter a : word) {
    Formula f = automaton.delta(q, a);
    switch (f.op()) {
      case Formula::Op::kAtom:
        q = f.state();
        break;
      case Formula::Op::kTrue:
      case Formula::Op::kFalse:
        return DetRun{std::nullopt, f.op() == Formula::Op::kTrue};
      default:
        throw KindError("transition from " + automaton.state_label(q) + " on '" +
                        std::string(1, a) + "' is not a single atom");
    }
  }
  return DetRun{q, automaton.accepting(q)};
}

namespace {

// Breadth-first closure; calls `on_level(depth, size)` after each level.
template <class OnLevel>
std::vector<State> explore(const Automaton& automaton, std::size_t depth, std::size_t state_cap,
                           OnLevel&& on_level) {
  std::unordered_set<State, StateHash> seen;
  std::vector<State> all{automaton.initial()};
  seen.insert(automaton.initial());
  std::vector<State> frontier = all;
  std::vector<State> atoms;
  on_level(0, all.size());
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<State> next;
    for (const auto& q : frontier) {
      for (Letter a : automaton.alphabet().letters()) {
        atoms.clear();
        automaton.delta(q, a).collect_atoms(atoms);
        for (const auto& p : atoms) {
          if (seen.insert(p).second) {
            if (seen.size() > state_cap) {
              throw BudgetExceeded("reachable state set of " + automaton.name() + " exceeds cap of " +
                                   std::to_string(state_cap) + " states at depth " +
                                   std::to_string(d));
            }
            next.push_back(p);
          }
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    on_level(d, all.size());
    frontier = std::move(next);
  }
  return all;
}

}  // namespace

std::vector<State> reachable(const Automaton& automaton, std::size_t depth, std::size_t state_cap) {
  auto all = explore(automaton, depth, state_cap, [](std::size_t, std::size_t) {});
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::uint64_t> reachable_counts(const Automaton& automaton, std::size_t max_depth,
                                            std::size_t state_cap) {
  std::vector<std::uint64_t> counts;
  counts.reserve(max_depth + 1);
  explore(automaton, max_depth, state_cap,
          [&](std::size_t, std::size_t size) { counts.push_back(size); });
  return counts;
}

AutomatonKind kind(const Automaton& automaton, std::size_t depth) {
  bool atomic = true;
  bool conjunctive = true;
  bool disjunctive = true;
  for (const auto& q : reachable(automaton, depth)) {
    for (Letter a : automaton.alphabet().letters()) {
      Formula f = automaton.delta(q, a);
      atomic = atomic && f.is_atomic();
      conjunctive = conjunctive && f.is_conjunctive();
      disjunctive = disjunctive && f.is_disjunctive();
    }
  }
  if (atomic) return AutomatonKind::kDeterministic;
  if (conjunctive) return AutomatonKind::kUniversal;
  if (disjunctive) return AutomatonKind::kNondeterministic;
  return AutomatonKind::kAlternating;
}

namespace {

// Truth table of a monotone function over subsets of Q, one bit per subset.
using TruthTable = std::vector<std::uint64_t>;

bool table_bit(const TruthTable& t, std::uint64_t x) { return (t[x >> 6] >> (x & 63)) & 1U; }
void set_table_bit(TruthTable& t, std::uint64_t x) { t[x >> 6] |= std::uint64_t{1} << (x & 63); }

}  // namespace

TableAutomaton determinize_finite(const Automaton& automaton) {
  auto states = automaton.all_states();
  if (!states) throw Unsupported(automaton.name() + " has no finite enumerable state set");
  const std::size_t q_count = states->size();
  if (q_count > 16) throw Unsupported("determinize_finite supports at most 16 states");

  std::unordered_map<State, std::size_t, StateHash> index;
  for (std::size_t i = 0; i < q_count; ++i) index.emplace((*states)[i], i);
  const Alphabet& alphabet = automaton.alphabet();
  const std::uint64_t subsets = std::uint64_t{1} << q_count;
  const std::size_t words = static_cast<std::size_t>((subsets + 63) / 64);

  // successors[a][X] = { q : X |= delta(q, a) }
  std::vector<std::vector<std::uint64_t>> successors(alphabet.size(),
                                                     std::vector<std::uint64_t>(subsets));
  for (std::size_t ai = 0; ai < alphabet.size(); ++ai) {
    std::vector<Formula> moves;
    for (const auto& q : *states) moves.push_back(automaton.delta(q, alphabet[ai]));
    for (std::uint64_t x = 0; x < subsets; ++x) {
      std::uint64_t y = 0;
      for (std::size_t i = 0; i < q_count; ++i) {
        bool sat = moves[i].evaluate([&](const State& p) {
          auto it = index.find(p);
          if (it == index.end()) {
            throw ModelError("transition of " + automaton.name() + " leaves its state set");
          }
          return ((x >> it->second) & 1U) != 0;
        });
        if (sat) y |= std::uint64_t{1} << i;
      }
      successors[ai][x] = y;
    }
  }

  std::uint64_t final_mask = 0;
  for (std::size_t i = 0; i < q_count; ++i) {
    if (automaton.accepting((*states)[i])) final_mask |= std::uint64_t{1} << i;
  }

  TruthTable start(words, 0);
  const std::size_t q0 = index.at(automaton.initial());
  for (std::uint64_t x = 0; x < subsets; ++x) {
    if ((x >> q0) & 1U) set_table_bit(start, x);
  }

  std::map<TruthTable, std::size_t> ids;
  std::vector<TruthTable> tables{start};
  ids.emplace(start, 0);
  std::vector<std::size_t> targets;
  for (std::size_t d = 0; d < tables.size(); ++d) {
    for (std::size_t ai = 0; ai < alphabet.size(); ++ai) {
      TruthTable next(words, 0);
      for (std::uint64_t x = 0; x < subsets; ++x) {
        if (table_bit(tables[d], successors[ai][x])) set_table_bit(next, x);
      }
      auto [it, inserted] = ids.emplace(next, tables.size());
      if (inserted) tables.push_back(std::move(next));
      targets.push_back(it->second);
    }
  }

  std::vector<std::string> names;
  std::vector<bool> accepting;
  for (std::size_t d = 0; d < tables.size(); ++d) {
    names.push_back("d" + std::to_string(d));
    accepting.push_back(table_bit(tables[d], final_mask));
  }
  std::vector<Formula> transitions;
  transitions.reserve(targets.size());
  for (auto t : targets) transitions.push_back(Formula::atom(TableAutomaton::state_at(t)));
  return TableAutomaton("det(" + automaton.name() + ")", alphabet, std::move(names), 0,
                        std::move(accepting), std::move(transitions));
}

}  // namespace statelab
