#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "statelab/automaton.hpp"
#include "statelab/error.hpp"
#include "statelab/experiments.hpp"
#include "statelab/formula.hpp"
#include "statelab/gallery.hpp"
#include "statelab/interchange.hpp"

using namespace statelab;

namespace {

Formula A(std::int64_t i) { return Formula::atom(TableAutomaton::state_at(static_cast<std::size_t>(i))); }
State S(std::int64_t i) { return TableAutomaton::state_at(static_cast<std::size_t>(i)); }

const char* kExample = R"(# three states
alphabet: 0 1 #
states: q0 q1 q2
initial: q0
accepting: q1
trans q0 0 -> q0
trans q0 1 -> q1 & (q0 | q2)
trans q0 # -> F
trans q1 0 -> q1
trans q1 1 -> T
trans q1 # -> q2
trans q2 0 -> q2 | q1
trans q2 1 -> q0
trans q2 # -> q2
)";

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet(""), InputError);
    CHECK_THROWS_AS(Alphabet("aa"), InputError);
    CHECK_THROWS_AS(Alphabet("a\n"), InputError);
    Alphabet ab("ba");
    CHECK(ab.rank('b') == 0);
    CHECK_THROWS_AS(ab.rank('c'), InputError);
    CHECK_THROWS_AS(ab.check("abc"), InputError);
    CHECK(ab.accepts_word("abba"));
  }

  TEST_CASE("canonical order is length then declared letter order") {
    Alphabet ba("ba");
    CHECK(words_up_to(ba, 2) == std::vector<Word>{"", "b", "a", "bb", "ba", "ab", "aa"});
    CHECK(ba.canonical_less("a", "bb"));
    CHECK(ba.canonical_less("ba", "ab"));
    CHECK_FALSE(ba.canonical_less("ab", "ab"));
  }

  TEST_CASE("enumerator matches materialised lists") {
    Alphabet a("01#");
    std::vector<Word> seen;
    for (WordEnumerator e(a, 4); !e.done(); e.next()) seen.push_back(e.current());
    CHECK(seen == words_up_to(a, 4));
    CHECK(seen.size() == count_words_up_to(3, 4));
    CHECK(seen.size() == oracle::all_words("01#", 4).size());
    CHECK(words_of_length(a, 2).size() == 9);
    CHECK(count_words_up_to(2, 200) == UINT64_MAX);
  }

  TEST_CASE("glyph aliases and blocks") {
    CHECK(normalize_word("ε").empty());
    CHECK(normalize_word("◊◊0♯1") == "dd0#1");
    CHECK(display_word("dd0#1") == "◊◊0#1");
    CHECK(display_word("") == "ε");
    CHECK(reversed("011") == "110");
    auto blocks = split_blocks("a#b#", '#');
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[2].empty());
    CHECK(split_blocks("", '#').size() == 1);
  }
}

TEST_SUITE("formulas") {
  TEST_CASE("evaluation") {
    const auto p = A(0), q = A(1), r = A(2);
    auto f = Formula::all_of({p, Formula::any_of({q, r})});
    CHECK(eval_formula(f, {{S(0), true}, {S(1), false}, {S(2), true}}));
    CHECK_FALSE(eval_formula(p, {{S(0), false}}));
    auto g = Formula::all_of({Formula::any_of({p, q}), Formula::any_of({p, r})});
    CHECK_FALSE(eval_formula(g, {{S(0), false}, {S(1), false}, {S(2), false}}));
    CHECK_THROWS_AS(eval_formula(f, {{S(0), true}}), InputError);
    CHECK(eval_formula(Formula::top(), {}));
  }

  TEST_CASE("(p|q)&(p|r) agrees with p|(q&r) on all assignments") {
    const auto p = A(0), q = A(1), r = A(2);
    auto lhs = Formula::all_of({Formula::any_of({p, q}), Formula::any_of({p, r})});
    auto rhs = Formula::any_of({p, Formula::all_of({q, r})});
    for (int bits = 0; bits < 8; ++bits) {
      TruthAssignment t{{S(0), (bits & 1) != 0}, {S(1), (bits & 2) != 0}, {S(2), (bits & 4) != 0}};
      CHECK(eval_formula(lhs, t) == eval_formula(rhs, t));
    }
  }

  TEST_CASE("factories normalise") {
    CHECK_THROWS_AS(Formula::all_of({}), InputError);
    CHECK_THROWS_AS(Formula::any_of({}), InputError);
    CHECK(Formula::all_of({A(3)}) == A(3));
    auto nested = Formula::any_of({A(0), Formula::any_of({A(1), A(2)})});
    CHECK(nested.children().size() == 3);
    CHECK(A(0).is_atomic());
    CHECK(Formula::bottom().is_atomic());
    CHECK(Formula::all_of({A(0), A(1)}).is_conjunctive());
    CHECK_FALSE(Formula::all_of({A(0), A(1)}).is_disjunctive());
  }

  TEST_CASE("monotonicity on random formulas") {
    std::mt19937_64 rng(7);
    const auto automaton = random_alternating(rng, Alphabet("ab"), 5);
    for (int i = 0; i < 2000; ++i) {
      const auto f = automaton.transition(std::uniform_int_distribution<std::size_t>(0, automaton.state_count() - 1)(rng),
                                          'a');
      TruthAssignment t;
      for (std::size_t s = 0; s < automaton.state_count(); ++s) t[S(s)] = std::bernoulli_distribution(0.5)(rng);
      const bool before = eval_formula(f, t);
      for (std::size_t s = 0; s < automaton.state_count(); ++s) {
        if (t[S(s)]) continue;
        auto up = t;
        up[S(s)] = true;
        if (before) CHECK(eval_formula(f, up));
      }
    }
  }
}

TEST_SUITE("automata") {
  TEST_CASE("count-eq3 deterministic runs") {
    const auto spec = count_eq3();
    auto run = run_det(*spec.automaton, "ab");
    REQUIRE(run.state);
    CHECK(*run.state == make_state(0, 0, 1));
    CHECK(*run_det(*spec.automaton, "").state == make_state(0, 0, 0));
    auto abc = run_det(*spec.automaton, "abc");
    CHECK(*abc.state == make_state(0, 0, 0));
    CHECK(abc.accepted);
    CHECK_THROWS_AS(run_det(*not_eq_lang().automaton, "0"), KindError);
  }

  TEST_CASE("reachability") {
    const auto a = count_eq3().automaton;
    auto r1 = reachable(*a, 1);
    CHECK(r1 == std::vector<State>{make_state(0, -1, 0), make_state(0, 0, -1), make_state(0, 0, 0),
                                   make_state(0, 1, 1)});
    CHECK(reachable(*a, 0) == std::vector<State>{a->initial()});
    for (std::size_t n = 0; n <= 6; ++n) CHECK(reachable(*a, n).size() == oracle::count_eq3_reachable(n));
    auto counts = reachable_counts(*lexicographic().automaton, 12);
    for (std::size_t n = 0; n < counts.size(); ++n) {
      CHECK(counts[n] == reachable(*lexicographic().automaton, n).size());
      if (n > 0) CHECK(counts[n - 1] <= counts[n]);
    }
    CHECK_THROWS_AS(reachable(*a, 30, 100), BudgetExceeded);
  }

  TEST_CASE("kinds of the gallery automata") {
    CHECK(kind(*count_eq3().automaton, 5) == AutomatonKind::kDeterministic);
    CHECK(kind(*not_eq_lang().automaton, 1) == AutomatonKind::kNondeterministic);
    CHECK(kind(*lexicographic().automaton, 2) == AutomatonKind::kAlternating);
    CHECK(kind(*maj2().automaton, 3) == AutomatonKind::kDeterministic);
  }

  TEST_CASE("accepts on the empty word and on lex") {
    CHECK(accepts(*lexicographic().automaton, "0#1"));
    CHECK_FALSE(accepts(*lexicographic().automaton, ""));
    CHECK(accepts(*count_eq3().automaton, ""));
    auto t = load_automaton(kExample);
    CHECK(accepts(t, "") == t.accepting(t.initial()));
  }

  TEST_CASE("memoised acceptance equals the game tree on random automata") {
    std::mt19937_64 rng(11);
    const Alphabet ab("ab");
    const auto words = oracle::all_words("ab", 6);
    for (int i = 0; i < 200; ++i) {
      auto a = random_alternating(rng, ab, 5);
      for (const auto& w : words) REQUIRE(accepts(a, w) == oracle::game(a, w));
    }
  }

  TEST_CASE("determinisation preserves the language") {
    std::mt19937_64 rng(3);
    const Alphabet ab("ab");
    const auto words = oracle::all_words("ab", 6);
    for (int i = 0; i < 100; ++i) {
      auto a = random_alternating(rng, ab, 3);
      auto d = determinize_finite(a);
      CHECK(kind(d, 6) == AutomatonKind::kDeterministic);
      for (const auto& w : words) {
        REQUIRE(accepts(a, w) == accepts(d, w));
        auto run = run_det(d, w);
        REQUIRE(run.accepted == accepts(d, w));
      }
    }
  }

  TEST_CASE("determinisation sizes") {
    auto all = load_automaton("alphabet: a\nstates: s\ninitial: s\naccepting: s\ntrans s a -> s\n");
    CHECK(determinize_finite(all).state_count() == 1);
    auto universal = load_automaton(
        "alphabet: a b\nstates: p q\ninitial: p\naccepting: q\n"
        "trans p a -> p & q\ntrans p b -> q\ntrans q a -> q\ntrans q b -> p & q\n");
    CHECK(determinize_finite(universal).state_count() <= 16);
    CHECK_THROWS_AS(determinize_finite(*count_eq3().automaton), Unsupported);
  }
}

TEST_SUITE("interchange") {
  TEST_CASE("formula grammar") {
    auto p = parse_formula("q1 & (q0 | q2)");
    CHECK(p.names == std::vector<std::string>{"q1", "q0", "q2"});
    CHECK(p.formula == Formula::all_of({A(0), Formula::any_of({A(1), A(2)})}));
    auto prec = parse_formula("q1 | q2 & q3");
    CHECK(prec.formula == Formula::any_of({A(0), Formula::all_of({A(1), A(2)})}));
    CHECK(parse_formula(" T ").formula == Formula::top());
    CHECK_THROWS_AS(parse_formula("q1 &"), ParseError);
    CHECK_THROWS_AS(parse_formula("(q1"), ParseError);
    CHECK_THROWS_AS(parse_formula(""), ParseError);
  }

  TEST_CASE("load and serialise") {
    auto t = load_automaton(kExample, "ex");
    CHECK(t.state_count() == 3);
    CHECK(t.transition(0, '1') == Formula::all_of({A(1), Formula::any_of({A(0), A(2)})}));
    auto text = serialize(t);
    CHECK(serialize(load_automaton(text)) == text);
    CHECK(text.find("trans q0 1 -> q1 & (q0 | q2)") != std::string::npos);
  }

  TEST_CASE("load errors") {
    std::string missing = kExample;
    missing.erase(missing.find("trans q2 # -> q2\n"));
    CHECK_THROWS_WITH_AS(load_automaton(missing), doctest::Contains("'q2', letter '#'"), InputError);
    std::string undeclared = std::string(kExample) + "trans q3 0 -> q0\n";
    CHECK_THROWS_AS(load_automaton(undeclared), ParseError);
    std::string bad_letter = std::string(kExample);
    bad_letter.replace(bad_letter.find("trans q0 0"), 10, "trans q0 x");
    CHECK_THROWS_AS(load_automaton(bad_letter), InputError);
    std::string bad_atom = std::string(kExample);
    bad_atom.replace(bad_atom.find("-> q0\n"), 6, "-> zz\n");
    try {
      load_automaton(bad_atom);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 6);
      CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }
    std::string dup = std::string(kExample) + "trans q0 0 -> q1\n";
    CHECK_THROWS_AS(load_automaton(dup), ParseError);
  }
}
