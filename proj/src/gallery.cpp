#include "statelab/gallery.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "statelab/error.hpp"
#include "statelab/primes.hpp"

namespace statelab {

namespace {

using F = Formula;

F at(std::int32_t tag, std::int64_t a = 0, std::int64_t b = 0, std::int64_t c = 0) {
  return F::atom(make_state(tag, a, b, c));
}

std::int64_t bit_value(Letter x) { return x == '1' ? 1 : 0; }

// Exactly one '#': returns the position, or npos.
std::size_t single_sharp(std::string_view w) {
  auto pos = w.find('#');
  if (pos == std::string_view::npos || w.find('#', pos + 1) != std::string_view::npos) {
    return std::string_view::npos;
  }
  return pos;
}

// ---------------------------------------------------------------- CountEq3

LanguageSpec make_count_eq3() {
  Alphabet alphabet("abc");
  auto oracle = std::make_shared<LanguageOracle>("count-eq3", alphabet, [](std::string_view w) {
    auto a = std::count(w.begin(), w.end(), 'a');
    return a == std::count(w.begin(), w.end(), 'b') && a == std::count(w.begin(), w.end(), 'c');
  });
  // State (|w|a - |w|b, |w|a - |w|c).
  auto automaton = std::make_shared<SymbolicAutomaton>(
      "count-eq3", alphabet, make_state(0),
      [](const State& q, Letter x) {
        auto [dx, dy] = x == 'a' ? std::pair{1, 1} : x == 'b' ? std::pair{-1, 0} : std::pair{0, -1};
        return at(0, q.v[0] + dx, q.v[1] + dy);
      },
      [](const State& q) { return q.v[0] == 0 && q.v[1] == 0; },
      [](const State& q) { return "(" + std::to_string(q.v[0]) + "," + std::to_string(q.v[1]) + ")"; });
  return LanguageSpec{"count-eq3", oracle, automaton, DeclaredBound{GrowthClass::polynomial(2), 9, 40}, 10};
}

// ------------------------------------------------------------------- NotEq

namespace not_eq_states {
enum : std::int32_t {
  kRead = 1,     // (c): c letters of u read, no guess committed yet
  kMark,         // (c, b): guessed that position c differs, u(c) = b
  kCheck,        // (c, b): in v, c letters before the guessed position
  kLonger,       // (c): in v, v must have more than c letters
  kShorter,      // (c): in v, v must have fewer than c letters
  kDone,         // witness found; only the single '#' rule remains
};
}

LanguageSpec make_not_eq() {
  using namespace not_eq_states;
  Alphabet alphabet("01#");
  auto oracle = std::make_shared<LanguageOracle>("not-eq", alphabet, [](std::string_view w) {
    auto pos = single_sharp(w);
    return pos != std::string_view::npos && w.substr(0, pos) != w.substr(pos + 1);
  });
  auto delta = [](const State& q, Letter x) -> F {
    const auto c = q.v[0];
    const auto b = q.v[1];
    switch (q.tag) {
      case kRead:
        if (x == '#') return F::any_of({at(kLonger, c), at(kShorter, c)});
        return F::any_of({at(kRead, c + 1), at(kMark, c, bit_value(x))});
      case kMark:
        return x == '#' ? at(kCheck, c, b) : at(kMark, c, b);
      case kCheck:
        if (x == '#') return F::bottom();
        if (c > 0) return at(kCheck, c - 1, b);
        return bit_value(x) != b ? at(kDone) : F::bottom();
      case kLonger:
        if (x == '#') return F::bottom();
        return c > 0 ? at(kLonger, c - 1) : at(kDone);
      case kShorter:
        if (x == '#' || c == 0) return F::bottom();
        return at(kShorter, c - 1);
      case kDone:
        return x == '#' ? F::bottom() : at(kDone);
    }
    throw ModelError("not-eq: unknown state tag");
  };
  auto accepting = [](const State& q) { return q.tag == kDone || (q.tag == kShorter && q.v[0] > 0); };
  auto label = [](const State& q) {
    static const char* names[] = {"?", "read", "mark", "check", "longer", "shorter", "done"};
    std::string s = names[q.tag];
    if (q.tag == kDone) return s;
    s += "(" + std::to_string(q.v[0]);
    if (q.tag == kMark || q.tag == kCheck) s += "," + std::to_string(q.v[1]);
    return s + ")";
  };
  auto automaton = std::make_shared<SymbolicAutomaton>("not-eq", alphabet, make_state(kRead, 0), delta,
                                                       accepting, label);
  return LanguageSpec{"not-eq", oracle, automaton, DeclaredBound{GrowthClass::polynomial(1), 7, 40}, 9};
}

// ----------------------------------------------------------- Lexicographic

namespace lex_states {
enum : std::int32_t {
  kCompare = 1,  // (t): positions < t of u are claimed equal to v
  kWait,         // (t, b): still in u; will check v(t) = b (b = 2: v(t) exists)
  kCheck,        // (c, b): in v, c letters before the checked position
  kDone,
};
inline constexpr std::int64_t kAnyLetter = 2;
}  // namespace lex_states

bool lex_less(std::string_view u, std::string_view v) {
  // Strict order where a proper prefix precedes its extensions.
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

LanguageSpec make_lexicographic() {
  using namespace lex_states;
  Alphabet alphabet("01#");
  auto oracle = std::make_shared<LanguageOracle>("lex", alphabet, [](std::string_view w) {
    auto pos = single_sharp(w);
    return pos != std::string_view::npos && lex_less(w.substr(0, pos), w.substr(pos + 1));
  });
  // u <lex v  iff  (u(0) = 0 and v(0) = 1) or (u(0) = v(0) and u(>=1) <lex v(>=1)),
  // with ε <lex v iff v is non-empty.
  auto delta = [](const State& q, Letter x) -> F {
    const auto t = q.v[0];
    const auto b = q.v[1];
    switch (q.tag) {
      case kCompare:
        if (x == '#') return at(kCheck, t, kAnyLetter);
        if (x == '0') {
          return F::any_of({at(kWait, t, 1), F::all_of({at(kWait, t, 0), at(kCompare, t + 1)})});
        }
        return F::all_of({at(kWait, t, 1), at(kCompare, t + 1)});
      case kWait:
        return x == '#' ? at(kCheck, t, b) : at(kWait, t, b);
      case kCheck:
        if (x == '#') return F::bottom();
        if (t > 0) return at(kCheck, t - 1, b);
        return (b == kAnyLetter || bit_value(x) == b) ? at(kDone) : F::bottom();
      case kDone:
        return x == '#' ? F::bottom() : at(kDone);
    }
    throw ModelError("lex: unknown state tag");
  };
  auto label = [](const State& q) {
    static const char* names[] = {"?", "cmp", "wait", "check", "done"};
    std::string s = names[q.tag];
    if (q.tag == kDone) return s;
    s += "(" + std::to_string(q.v[0]);
    if (q.tag != kCompare) s += "," + (q.v[1] == kAnyLetter ? std::string("*") : std::to_string(q.v[1]));
    return s + ")";
  };
  auto automaton = std::make_shared<SymbolicAutomaton>(
      "lex", alphabet, make_state(kCompare, 0), delta, [](const State& q) { return q.tag == kDone; }, label);
  return LanguageSpec{"lex", oracle, automaton, DeclaredBound{GrowthClass::polynomial(1), 6, 40}, 9};
}

// ------------------------------------------------------------------- L_exp

LanguageSpec make_l_exp() {
  Alphabet alphabet("01#");
  auto oracle = std::make_shared<LanguageOracle>("l-exp", alphabet, [](std::string_view w) {
    auto blocks = split_blocks(w, '#');
    if (blocks.size() < 2) return false;
    const std::string target = reversed(blocks.front());
    return std::any_of(blocks.begin() + 1, blocks.end(), [&](std::string_view b) { return b == target; });
  });
  return LanguageSpec{"l-exp", oracle, nullptr, std::nullopt, 0};
}

// ------------------------------------------------------------ L_hierarchy

std::int64_t saturating_power(std::int64_t base, unsigned exp) {
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && v > kMax / base) return kMax;
    v *= base;
  }
  return v;
}

namespace hier_states {
enum : std::int32_t {
  kStart = 1,  // nothing read
  kBudgetCount,  // (p): budget copy counting lozenges
  kBudget,       // (r): budget copy, at most r more '#' allowed
  kGuessCount,   // (p): p lozenges read, block index not guessed yet
  kSpawn,        // (q, j): q letters of u read, block j guessed
  kHold,         // (q, b, j): copy checking u(q) = b against block j
  kFind,         // (r, q, b): r more '#' to skip, then q letters, then check b
};
// In kFind, b = kLength checks that the block has exactly q letters.
inline constexpr std::int64_t kLength = 2;
}  // namespace hier_states

LanguageSpec make_l_hierarchy(unsigned level) {
  using namespace hier_states;
  if (level < 2) throw InputError("l-hier needs level >= 2");
  const std::string name = "l-hier:" + std::to_string(level);
  Alphabet alphabet(std::string("01") + kLozenge + "#");

  auto oracle = std::make_shared<LanguageOracle>(name, alphabet, [level](std::string_view w) {
    std::size_t p = 0;
    while (p < w.size() && w[p] == kLozenge) ++p;
    std::string_view rest = w.substr(p);
    if (rest.find(kLozenge) != std::string_view::npos) return false;
    auto blocks = split_blocks(rest, '#');
    const auto k = static_cast<std::int64_t>(blocks.size()) - 1;
    if (k < 1 || k > saturating_power(static_cast<std::int64_t>(p), level)) return false;
    return std::any_of(blocks.begin() + 1, blocks.end(), [&](std::string_view b) { return b == blocks.front(); });
  });

  // Three phases. While reading ◊^p, a budget copy counts p (to bound the
  // number of blocks by p^level) and Eve guesses the block index j, choosing
  // it from (m^level, (m+1)^level] on the (m+1)-th lozenge. While reading u,
  // Adam spawns one copy per position. Each copy then walks deterministically
  // to block j and checks its letter; the final copy checks the block length.
  auto delta = [level](const State& q, Letter x) -> F {
    const bool lozenge = x == kLozenge;
    switch (q.tag) {
      case kStart:
      case kGuessCount: {
        const std::int64_t p = q.tag == kStart ? 0 : q.v[0];
        if (!lozenge) return F::bottom();
        std::vector<F> guesses{at(kGuessCount, p + 1)};
        const std::int64_t from = saturating_power(p, level) + 1;
        const std::int64_t to = saturating_power(p + 1, level);
        for (std::int64_t j = from; j <= to; ++j) guesses.push_back(at(kSpawn, 0, j));
        F guess = F::any_of(std::move(guesses));
        if (q.tag == kStart) return F::all_of({at(kBudgetCount, 1), std::move(guess)});
        return guess;
      }
      case kBudgetCount: {
        const std::int64_t p = q.v[0];
        if (lozenge) return at(kBudgetCount, p + 1);
        const std::int64_t budget = saturating_power(p, level);
        if (x == '#') return budget >= 1 ? at(kBudget, budget - 1) : F::bottom();
        return at(kBudget, budget);
      }
      case kBudget: {
        const std::int64_t r = q.v[0];
        if (lozenge) return F::bottom();
        if (x == '#') return r >= 1 ? at(kBudget, r - 1) : F::bottom();
        return at(kBudget, r);
      }
      case kSpawn: {
        const std::int64_t pos = q.v[0];
        const std::int64_t j = q.v[1];
        if (lozenge) return pos == 0 ? at(kSpawn, 0, j) : F::bottom();
        if (x == '#') return at(kFind, j - 1, pos, kLength);
        return F::all_of({at(kSpawn, pos + 1, j), at(kHold, pos, bit_value(x), j)});
      }
      case kHold: {
        if (lozenge) return F::bottom();
        if (x == '#') return at(kFind, q.v[2] - 1, q.v[0], q.v[1]);
        return at(kHold, q.v[0], q.v[1], q.v[2]);
      }
      case kFind: {
        const std::int64_t r = q.v[0];
        const std::int64_t pos = q.v[1];
        const std::int64_t b = q.v[2];
        if (lozenge) return F::bottom();
        if (r > 0) return x == '#' ? at(kFind, r - 1, pos, b) : at(kFind, r, pos, b);
        if (x == '#') return F::constant(b == kLength && pos == 0);
        if (pos > 0) return at(kFind, 0, pos - 1, b);
        return F::constant(b != kLength && bit_value(x) == b);
      }
    }
    throw ModelError(std::string("l-hier: unknown state tag"));
  };
  auto accepting = [](const State& q) {
    switch (q.tag) {
      case kBudgetCount:
      case kBudget:
        return true;
      case kFind:
        return q.v[0] == 0 && q.v[1] == 0 && q.v[2] == kLength;
      default:
        return false;
    }
  };
  auto label = [](const State& q) {
    auto n = [](std::int64_t v) { return std::to_string(v); };
    auto letter = [](std::int64_t b) { return b == kLength ? std::string("len") : std::to_string(b); };
    switch (q.tag) {
      case kStart:
        return std::string("start");
      case kBudgetCount:
        return "budget-count(" + n(q.v[0]) + ")";
      case kBudget:
        return "budget(" + n(q.v[0]) + ")";
      case kGuessCount:
        return "guess-count(" + n(q.v[0]) + ")";
      case kSpawn:
        return "spawn(" + n(q.v[0]) + ",j=" + n(q.v[1]) + ")";
      case kHold:
        return "hold(" + n(q.v[0]) + "," + letter(q.v[1]) + ",j=" + n(q.v[2]) + ")";
      case kFind:
        return "find(" + n(q.v[0]) + "," + n(q.v[1]) + "," + letter(q.v[2]) + ")";
      default:
        return std::string("?");
    }
  };
  auto automaton =
      std::make_shared<SymbolicAutomaton>(name, alphabet, make_state(kStart), delta, accepting, label);
  // The copies of the second phase remember both their position in u and the
  // guessed block, so the reachable count grows like n^(level+1). The
  // constants below are fitted over the sampled range only.
  std::optional<DeclaredBound> declared;
  if (level == 2) declared = DeclaredBound{GrowthClass::polynomial(2), 57, 30};
  if (level == 3) declared = DeclaredBound{GrowthClass::polynomial(3), 27, 20};
  return LanguageSpec{name, oracle, automaton, declared, 8};
}

// ------------------------------------------------------------------ Primes

LanguageSpec make_primes() {
  auto oracle = std::make_shared<LanguageOracle>("primes", Alphabet("01"),
                                                 [](std::string_view w) { return is_prime(bin_int(w)); });
  return LanguageSpec{"primes", oracle, nullptr, std::nullopt, 0};
}

// ------------------------------------------------------------------- L_log

LanguageSpec make_l_log() {
  auto oracle = std::make_shared<LanguageOracle>("l-log", Alphabet("ab#"), [](std::string_view w) {
    auto pos = single_sharp(w);
    if (pos == std::string_view::npos) return false;
    std::size_t m = 0;  // floor(log2 |w|); |w| >= 1 here
    while ((std::size_t{2} << m) <= w.size()) ++m;
    return pos >= m && w.substr(pos + 1) == w.substr(0, m);
  });
  return LanguageSpec{"l-log", oracle, nullptr, std::nullopt, 0};
}

// -------------------------------------------------------------------- Maj2

LanguageSpec make_maj2() {
  Alphabet alphabet("ab");
  auto oracle = std::make_shared<LanguageOracle>("maj2", alphabet, [](std::string_view w) {
    return std::count(w.begin(), w.end(), 'a') > std::count(w.begin(), w.end(), 'b');
  });
  auto automaton = std::make_shared<SymbolicAutomaton>(
      "maj2", alphabet, make_state(0), [](const State& q, Letter x) { return at(0, q.v[0] + (x == 'a' ? 1 : -1)); },
      [](const State& q) { return q.v[0] > 0; }, [](const State& q) { return std::to_string(q.v[0]); });
  return LanguageSpec{"maj2", oracle, automaton, DeclaredBound{GrowthClass::polynomial(1), 3, 40}, 12};
}

// -------------------------------------------------------------- Rabin 1/2

LanguageSpec make_rabin_half() {
  auto language = std::make_shared<ThresholdLanguage>(make_threshold_language(rabin_automaton(), Rational(1, 2)));
  auto oracle = std::make_shared<LanguageOracle>(
      "rabin-half", language->automaton.alphabet(),
      [language](std::string_view w) { return threshold_member(*language, w); });
  return LanguageSpec{"rabin-half", oracle, nullptr, std::nullopt, 0};
}

}  // namespace

LanguageSpec count_eq3() { return make_count_eq3(); }
LanguageSpec not_eq_lang() { return make_not_eq(); }
LanguageSpec lexicographic() { return make_lexicographic(); }
LanguageSpec l_exp() { return make_l_exp(); }
LanguageSpec l_hierarchy(unsigned level) { return make_l_hierarchy(level); }
LanguageSpec primes() { return make_primes(); }
LanguageSpec l_log() { return make_l_log(); }
LanguageSpec maj2() { return make_maj2(); }
LanguageSpec rabin_half() { return make_rabin_half(); }

LanguageSpec gallery_entry(std::string_view name) {
  if (name == "count-eq3") return count_eq3();
  if (name == "not-eq") return not_eq_lang();
  if (name == "lex") return lexicographic();
  if (name == "l-exp") return l_exp();
  if (name == "primes") return primes();
  if (name == "l-log") return l_log();
  if (name == "maj2") return maj2();
  if (name == "rabin-half") return rabin_half();
  if (name.starts_with("l-hier:")) {
    auto digits = name.substr(7);
    unsigned level = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), level);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return l_hierarchy(level);
  }
  throw UnknownReference("unknown gallery language '" + std::string(name) + "'");
}

std::vector<std::string> gallery_names() {
  return {"count-eq3", "not-eq", "lex", "l-exp", "l-hier:<level>", "primes", "l-log", "maj2", "rabin-half"};
}

}  // namespace statelab
