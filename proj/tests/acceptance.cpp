// Runs every acceptance criterion at its stated scale and time limit and
// prints one PASS/FAIL line per criterion. Expected values come from the
// reference implementations in oracles.hpp or from first principles, and the
// matching registry experiment must agree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "statelab/experiments.hpp"
#include "statelab/gallery.hpp"
#include "statelab/primes.hpp"
#include "statelab/prob.hpp"
#include "statelab/profiler.hpp"
#include "statelab/quotient.hpp"

using namespace statelab;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

Rational frac(oracle::Fraction f) { return Rational(mpz_class(f.first), mpz_class(f.second)); }

oracle::Fraction block_product(const std::string& w) {
  oracle::Fraction p{1, 1};
  std::size_t start = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (i == w.size() || w[i] == '#') {
      p = oracle::multiply(p, oracle::bin_frac(w.substr(start, i - start)));
      start = i + 1;
    }
  }
  return p;
}

bool experiment_passes(const std::string& id, const Json& params, std::string& detail) {
  const bool ok = run_experiment(id, params).passed;
  detail += "; experiment " + id + (ok ? " pass" : " FAIL");
  return ok;
}

std::vector<Word> odd_words(std::size_t n) {
  std::vector<Word> out;
  for (auto& w : words_of_length(Alphabet("01"), n)) {
    if (w.front() == '1') out.push_back(w);
  }
  return out;
}

std::uint64_t lsb_value(const std::string& w) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == '1') v |= std::uint64_t{1} << i;
  }
  return v;
}

Outcome rabin_identity() {
  const auto rabin = rabin_automaton();
  std::size_t words = 0, bad = 0;
  for (const auto& u : oracle::all_words("01", 12)) {
    ++words;
    if (acceptance_probability(rabin, u) != frac(oracle::bin_frac(u)) || bin_frac(u) != frac(oracle::bin_frac(u))) ++bad;
  }
  return {bad == 0, std::to_string(words) + " binary words, " + std::to_string(bad) + " mismatches"};
}

Outcome product_identity() {
  const auto rabin = rabin_automaton();
  std::size_t words = 0, bad = 0;
  for (const auto& w : oracle::all_words("01#", 8)) {
    ++words;
    if (acceptance_probability(rabin, w) != frac(block_product(w))) ++bad;
  }
  Outcome o{bad == 0, std::to_string(words) + " words, " + std::to_string(bad) + " mismatches"};
  o.passed = experiment_passes("rabin-identities", Json::object(), o.detail) && o.passed;
  return o;
}

Outcome rabin_claim() {
  const auto language = make_threshold_language(rabin_automaton(), Rational(1, 2));
  std::string per;
  bool ok = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto words = words_of_length(Alphabet("01"), n);
    std::size_t separated = 0, pairs = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++pairs;
        const auto s = separate_quotients(words[i], words[j]);
        // P((x1)#w) = bin(x1) bin(w); compare both against 1/2 exactly.
        auto above = [&](const std::string& x) {
          auto p = block_product(x + "1" + s);
          return 2 * p.first > p.second;
        };
        const bool differ = above(words[i]) != above(words[j]);
        const bool lib = threshold_member(language, words[i] + "1" + s) != threshold_member(language, words[j] + "1" + s);
        if (differ && lib) ++separated;
      }
    }
    ok = ok && separated == pairs;
    per += (n > 1 ? " " : "") + std::to_string(separated == pairs ? words.size() : 0);
  }
  Outcome o{ok, "certified classes for n=1..8: " + per};
  o.passed = experiment_passes("rabin-claim", {{"n", 8}}, o.detail) && o.passed;
  return o;
}

Outcome gallery_equivalence() {
  std::string detail;
  bool ok = true;
  const std::vector<std::pair<LanguageSpec, std::size_t>> cases = {
      {count_eq3(), 10}, {not_eq_lang(), 9}, {lexicographic(), 9}, {l_hierarchy(2), 8}};
  for (const auto& [spec, len] : cases) {
    std::size_t words = 0, bad = 0;
    for (WordEnumerator e(spec.alphabet(), len); !e.done(); e.next()) {
      ++words;
      if (accepts(*spec.automaton, e.current()) != spec.oracle->contains(e.current())) ++bad;
    }
    ok = ok && bad == 0;
    detail += (detail.empty() ? "" : ", ") + spec.name + " " + std::to_string(bad) + "/" + std::to_string(words);
  }
  Outcome o{ok, "mismatches " + detail};
  o.passed = experiment_passes("gallery-equiv", Json::object(), o.detail) && o.passed;
  return o;
}

Outcome class_conformance() {
  std::ostringstream detail;
  bool ok = true;
  for (auto spec : {lexicographic(), not_eq_lang()}) {
    auto c = check_bound(profile(*spec.automaton, 40), GrowthClass::polynomial(1), spec.declared->constant);
    ok = ok && c.passed && spec.declared->f == GrowthClass::polynomial(1);
    detail << spec.name << " C=" << spec.declared->constant << " " << (c.passed ? "ok" : "over") << ", ";
  }
  auto l2 = l_hierarchy(2);
  auto c2 = check_bound(profile(*l2.automaton, 30), GrowthClass::polynomial(2), l2.declared->constant);
  ok = ok && c2.passed && l2.declared->f == GrowthClass::polynomial(2);
  detail << "l-hier:2 C=" << l2.declared->constant << " (max count/n^2 " << c2.max_ratio << " at n=" << c2.max_ratio_at
         << ") " << (c2.passed ? "ok" : "over") << ", ";
  auto counts = profile(*count_eq3().automaton, 40).counts;
  bool square = true;
  for (std::size_t n = 0; n <= 40; ++n) square = square && counts[n] <= (2 * n + 1) * (2 * n + 1);
  ok = ok && square;
  detail << "count-eq3 within (2n+1)^2 " << (square ? "ok" : "over");
  Outcome o{ok, detail.str()};
  o.passed = experiment_passes("class-conformance", Json::object(), o.detail) && o.passed;
  return o;
}

// Rows #s1#...#sk over every subset of `blocks`.
std::vector<Word> subset_rows(const std::vector<Word>& blocks, bool reverse) {
  std::vector<Word> rows;
  for (unsigned mask = 0; mask < (1u << blocks.size()); ++mask) {
    Word row;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (mask >> i & 1) row += "#" + (reverse ? reversed(blocks[i]) : blocks[i]);
    }
    rows.push_back(row);
  }
  return rows;
}

Outcome exp_alt() {
  const auto spec = l_exp();
  auto rows1 = subset_rows({"0", "1"}, true);
  const bool rows_ok = rows1 == std::vector<Word>{"", "#0", "#1", "#0#1"};
  auto t1 = query_table(*spec.oracle, 1, RowSpec::explicit_rows(rows1));
  auto t2 = query_table(*spec.oracle, 2, RowSpec::explicit_rows(subset_rows({"00", "01", "10", "11"}, true)));
  Outcome o{rows_ok && t1.distinct_row_count_lower_bound == 4 && t2.distinct_row_count_lower_bound == 16,
            "order 1: " + std::to_string(t1.distinct_row_count_lower_bound) + " profiles, order 2: " +
                std::to_string(t2.distinct_row_count_lower_bound) + " profiles"};
  o.passed = experiment_passes("exp-alt", {{"n", 2}}, o.detail) && o.passed;
  return o;
}

Outcome hierarchy() {
  const auto spec = l_hierarchy(2);
  auto rows = subset_rows({"00", "01", "10", "11"}, false);
  auto t = query_table(*spec.oracle, 4, RowSpec::explicit_rows(rows), {}, true);
  // Independently: the profile restricted to columns ◊◊u encodes S exactly.
  std::set<std::string> restricted;
  const auto columns = words_up_to(spec.alphabet(), 4);
  for (const auto& [row, bits] : t.dump) {
    std::string r;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() == 4 && columns[c].starts_with("dd") && columns[c].find_first_of("d#", 2) == std::string::npos) {
        r += bits[c];
      }
    }
    restricted.insert(r);
  }
  Outcome o{t.distinct_row_count_lower_bound == 16 && restricted.size() == 16,
            "order 4, " + std::to_string(rows.size()) + " rows: " + std::to_string(t.distinct_row_count_lower_bound) +
                " profiles (" + std::to_string(restricted.size()) + " on the ◊◊u columns)"};
  o.passed = experiment_passes("hierarchy:2", {{"n", 2}}, o.detail) && o.passed;
  return o;
}

Outcome hartmanis_shank() {
  const auto spec = primes();
  bool ok = true;
  std::string per;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto words = odd_words(n);
    std::set<Word> witnesses;
    std::size_t pairs = 0, found = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++pairs;
        std::optional<Word> w;
        for (std::size_t cap = 4;; cap = std::min<std::size_t>(24, cap * 2)) {
          w = distinguish(*spec.oracle, words[i], words[j], cap);
          if (w || cap == 24) break;
        }
        if (w && oracle::trial_division(lsb_value(words[i] + *w)) != oracle::trial_division(lsb_value(words[j] + *w))) {
          ++found;
          witnesses.insert(*w);
        }
      }
    }
    auto r = count_quotients(*spec.oracle, n, WitnessSpec{0, {witnesses.begin(), witnesses.end()}});
    const bool pass = found == pairs && r.class_count_lower_bound >= (std::size_t{1} << (n - 1));
    ok = ok && pass;
    per += (n > 2 ? " " : "") + std::to_string(r.class_count_lower_bound);
  }
  Outcome o{ok, "all odd pairs distinguished; certified classes for n=2..8: " + per};
  o.passed = experiment_passes("primes-hs", {{"n", 8}}, o.detail) && o.passed;
  return o;
}

Outcome isolated_primes() {
  const auto spec = primes();
  bool ok = true;
  std::string per;
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::uint64_t radius = std::uint64_t{1} << n;
    const auto odd = odd_words(n);
    std::vector<Word> rows;
    for (const auto& u : odd) {
      auto k = find_isolated_prime(lsb_value(u), static_cast<unsigned>(n), 10'000'000);
      if (!k) {
        ok = false;
        continue;
      }
      const std::uint64_t p = lsb_value(u) + radius * *k;
      bool isolated = oracle::trial_division(p);
      for (std::uint64_t q = p - radius; q <= p + radius; ++q) {
        if (q != p && oracle::trial_division(q)) isolated = false;
      }
      ok = ok && isolated;
      Word row;
      for (auto v = *k; v != 0; v >>= 1) row += (v & 1) ? '1' : '0';
      rows.push_back(row);
    }
    auto t = query_table(*spec.oracle, n, RowSpec::explicit_rows(rows), {}, true);
    const auto columns = words_up_to(spec.alphabet(), n);
    std::set<std::string> restricted;
    for (std::size_t i = 0; i < t.dump.size(); ++i) {
      std::string r;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() == n && columns[c].front() == '1') r += t.dump[i].second[c];
      }
      ok = ok && std::count(r.begin(), r.end(), '1') == 1;
      restricted.insert(r);
    }
    ok = ok && restricted.size() == odd.size() && t.distinct_row_count_lower_bound == odd.size();
    per += (n > 2 ? " " : "") + std::to_string(t.distinct_row_count_lower_bound);
  }
  Outcome o{ok, "distinct single-true profiles for n=2..4: " + per};
  o.passed = experiment_passes("primes-linear", {{"n", 4}}, o.detail) && o.passed;
  return o;
}

Outcome core_crosschecks() {
  std::mt19937_64 rng(20261016);
  const Alphabet ab("ab");
  const auto words = oracle::all_words("ab", 6);
  std::size_t game_bad = 0, det_bad = 0, law_bad = 0, mono_bad = 0;
  std::vector<TableAutomaton> automata;
  for (int i = 0; i < 1000; ++i) {
    automata.push_back(random_alternating(rng, ab, 5));
    const auto& a = automata.back();
    const auto d = determinize_finite(a);
    for (const auto& w : words) {
      const bool acc = accepts(a, w);
      if (acc != oracle::game(a, w)) ++game_bad;
      if (acc != accepts(d, w)) ++det_bad;
    }
  }
  for (std::size_t i = 0; i + 1 < automata.size(); i += 2) {
    const auto& a = automata[i];
    const auto& b = automata[i + 1];
    LanguageOracle both("and", ab, [&](std::string_view w) { return accepts(a, w) && accepts(b, w); });
    LanguageOracle either("or", ab, [&](std::string_view w) { return accepts(a, w) || accepts(b, w); });
    for (const auto& w : words) {
      const bool x = oracle::game(a, w), y = oracle::game(b, w);
      for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        const auto u = w.substr(0, cut), v = w.substr(cut);
        if (quotient_member(both, u, v) != (x && y) || quotient_member(either, u, v) != (x || y)) ++law_bad;
      }
    }
  }
  for (int i = 0; i < 10000; ++i) {
    const auto& a = automata[static_cast<std::size_t>(i) % automata.size()];
    const auto f = a.transition(std::uniform_int_distribution<std::size_t>(0, a.state_count() - 1)(rng),
                                std::bernoulli_distribution(0.5)(rng) ? 'a' : 'b');
    TruthAssignment lo, hi;
    for (std::size_t s = 0; s < a.state_count(); ++s) {
      const bool x = std::bernoulli_distribution(0.5)(rng);
      lo[TableAutomaton::state_at(s)] = x;
      hi[TableAutomaton::state_at(s)] = x || std::bernoulli_distribution(0.5)(rng);
    }
    if (eval_formula(f, lo) && !eval_formula(f, hi)) ++mono_bad;
  }
  Outcome o{game_bad == 0 && det_bad == 0 && law_bad == 0 && mono_bad == 0,
            "1000 automata: game " + std::to_string(game_bad) + ", determinised " + std::to_string(det_bad) +
                ", quotient law " + std::to_string(law_bad) + ", monotonicity " + std::to_string(mono_bad) +
                " failures"};
  o.passed = experiment_passes("core-crosscheck", Json::object(), o.detail) && o.passed;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Rabin identity P(u) = bin(u), |u| <= 12", 30, rabin_identity},
      {2, "Rabin block product identity, |w| <= 8", 60, product_identity},
      {3, "Rabin cut-point language: 2^n distinct quotients, n <= 8", 120, rabin_claim},
      {4, "gallery automata agree with their oracles", 300, gallery_equivalence},
      {5, "declared state-complexity classes", 60, class_conformance},
      {6, "L_exp query tables: 4 and 16 profiles", 30, exp_alt},
      {7, "L_2 query table of order 4: 16 profiles", 60, hierarchy},
      {8, "Primes: odd words have distinct quotients, n <= 8", 300, hartmanis_shank},
      {9, "Primes: isolated primes give 2^(n-1) profiles, n <= 4", 120, isolated_primes},
      {10, "core cross-checks on random automata", 180, core_crosschecks},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.passed && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %2d: %s | %s | %.2fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.limit_s, in_time ? "" : " TIME LIMIT EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
