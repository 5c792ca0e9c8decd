#include "statelab/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "statelab/error.hpp"
#include "statelab/gallery.hpp"
#include "statelab/primes.hpp"
#include "statelab/prob.hpp"
#include "statelab/profiler.hpp"
#include "statelab/quotient.hpp"

namespace statelab {

Json ExperimentReport::to_json() const {
  Json j = {{"id", id},         {"claim", claim}, {"parameters", parameters},
            {"measured", measured}, {"bound", bound}, {"verdict", passed ? "pass" : "fail"}};
  if (duration_ms >= 0) j["duration_ms"] = duration_ms;
  return j;
}

// ------------------------------------------------------------ random models

namespace {

Formula random_formula(std::mt19937_64& rng, std::size_t states, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_int_distribution<std::size_t> state(0, states - 1);
  const int r = pick(rng);
  if (r == 0) return Formula::top();
  if (r == 1) return Formula::bottom();
  if (depth == 0 || r < 5) return Formula::atom(TableAutomaton::state_at(state(rng)));
  auto left = random_formula(rng, states, depth - 1);
  auto right = random_formula(rng, states, depth - 1);
  return r < 8 ? Formula::all_of({left, right}) : Formula::any_of({left, right});
}

}  // namespace

TableAutomaton random_alternating(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_states) {
  const auto n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  std::vector<std::string> names;
  std::vector<bool> accepting;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("q" + std::to_string(i));
    accepting.push_back(std::bernoulli_distribution(0.4)(rng));
  }
  std::vector<Formula> transitions;
  for (std::size_t i = 0; i < n * alphabet.size(); ++i) transitions.push_back(random_formula(rng, n, 2));
  return TableAutomaton("random", alphabet, names, 0, accepting, transitions);
}

bool game_accepts(const Automaton& automaton, std::string_view word) {
  std::function<bool(const State&, std::size_t)> wins = [&](const State& q, std::size_t pos) {
    if (pos == word.size()) return automaton.accepting(q);
    return automaton.delta(q, word[pos]).evaluate([&](const State& next) { return wins(next, pos + 1); });
  };
  return wins(automaton.initial(), 0);
}

// ---------------------------------------------------------------- rendering

namespace {

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix + "/" + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "/" + std::to_string(i), out);
  } else {
    out.emplace_back(prefix.empty() ? "/" : prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string report_csv(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::string out = "key,value\n";
  for (const auto& [k, v] : rows) out += csv_field(k) + "," + csv_field(v) + "\n";
  return out;
}

std::string report_text(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k.substr(1) + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

// -------------------------------------------------------------- experiments

namespace {

class Params {
 public:
  Params(Json defaults, const Json& overrides) : values_(std::move(defaults)) {
    if (!overrides.is_object()) throw InputError("experiment parameters must be a JSON object");
    for (const auto& [k, v] : overrides.items()) {
      if (k == "timing") continue;
      if (!values_.contains(k)) throw UnknownReference("unknown experiment parameter '" + k + "'");
      if (v.type() != values_[k].type() &&
          !(v.is_number_integer() && values_[k].is_number_integer())) {
        throw InputError("parameter '" + k + "' has the wrong type");
      }
      values_[k] = v;
    }
  }

  std::uint64_t u64(const char* key) const {
    const auto& v = values_.at(key);
    if (v.is_number_integer() && v.get<std::int64_t>() < 0) {
      throw InputError(std::string("parameter '") + key + "' must be non-negative");
    }
    return v.get<std::uint64_t>();
  }
  std::size_t size(const char* key) const { return static_cast<std::size_t>(u64(key)); }
  QueryOptions query_options() const {
    return QueryOptions{u64("budget"), static_cast<unsigned>(u64("threads"))};
  }
  const Json& json() const { return values_; }

 private:
  Json values_;
};

// Words of {0,1}^n whose first letter (least significant digit) is 1.
std::vector<Word> odd_words(std::size_t n) {
  std::vector<Word> out;
  for (auto& w : words_of_length(Alphabet("01"), n)) {
    if (!w.empty() && w.front() == '1') out.push_back(std::move(w));
  }
  return out;
}

// LSB-first binary word of k, without trailing zeros ("" for 0).
Word binary_word(std::uint64_t k) {
  Word w;
  for (; k != 0; k >>= 1) w += (k & 1) ? '1' : '0';
  return w;
}

// Rows #s1#s2...#sm for every subset {s1 < ... < sm} of `blocks`, with each
// block passed through `transform`.
std::vector<Word> subset_rows(const std::vector<Word>& blocks, const std::function<Word(const Word&)>& transform) {
  std::vector<Word> rows;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks.size()); ++mask) {
    Word row;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (mask >> i & 1) row += "#" + transform(blocks[i]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ExperimentReport rabin_identities(const Params& p) {
  ExperimentReport r;
  r.claim = "Rabin automaton: P(u) = bin(u) on binary words and P(u1#...#uk) = bin(u1)...bin(uk)";
  const auto rabin = rabin_automaton();
  std::uint64_t words1 = 0, bad1 = 0, words2 = 0, bad2 = 0;
  for (WordEnumerator e(Alphabet("01"), p.size("binary_length")); !e.done(); e.next()) {
    ++words1;
    if (acceptance_probability(rabin, e.current()) != bin_frac(e.current())) ++bad1;
  }
  for (WordEnumerator e(rabin.alphabet(), p.size("block_length")); !e.done(); e.next()) {
    ++words2;
    Rational product = 1;
    for (auto block : split_blocks(e.current(), '#')) product *= bin_frac(block);
    if (acceptance_probability(rabin, e.current()) != product) ++bad2;
  }
  r.measured = {{"binary_words", words1}, {"binary_mismatches", bad1},
                {"block_words", words2},  {"block_mismatches", bad2}};
  r.bound = "zero mismatches under exact rational equality";
  r.passed = bad1 == 0 && bad2 == 0;
  return r;
}

ExperimentReport rabin_claim(const Params& p) {
  ExperimentReport r;
  r.claim = "Rabin's threshold language at 1/2 has exponentially many distinct left quotients";
  const auto language = make_threshold_language(rabin_automaton(), Rational(1, 2));
  const std::size_t n_max = p.size("n");
  Json per_n = Json::array();
  bool ok = true;
  std::uint64_t classes = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto words = words_of_length(Alphabet("01"), n);
    std::uint64_t pairs = 0, separated = 0;
    std::size_t longest = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++pairs;
        auto s = separate_quotients(words[i], words[j]);
        if (threshold_member(language, words[i] + "1" + s) != threshold_member(language, words[j] + "1" + s)) {
          ++separated;
        }
        longest = std::max(longest, s.size());
      }
    }
    classes = pairs == separated ? words.size() : 0;
    ok = ok && pairs == separated;
    per_n.push_back({{"n", n},
                     {"pairs", pairs},
                     {"separated", separated},
                     {"longest_separator", longest},
                     {"certified_classes", classes},
                     {"quotient_order", n + 1}});
  }
  r.measured = {{"per_n", per_n}, {"certified_classes", classes}};
  r.bound = "2^n pairwise distinct quotients of order n+1 for every n up to " + std::to_string(n_max);
  r.passed = ok;
  return r;
}

ExperimentReport gallery_equiv(const Params&) {
  ExperimentReport r;
  r.claim = "gallery automata recognise their languages";
  Json per = Json::array();
  bool ok = true;
  for (auto spec : {count_eq3(), not_eq_lang(), lexicographic(), l_hierarchy(2), maj2()}) {
    std::uint64_t words = 0, mismatches = 0;
    Json first = nullptr;
    for (WordEnumerator e(spec.alphabet(), spec.validation_length); !e.done(); e.next()) {
      ++words;
      if (accepts(*spec.automaton, e.current()) != spec.oracle->contains(e.current())) {
        if (mismatches++ == 0) first = display_word(e.current());
      }
    }
    ok = ok && mismatches == 0;
    per.push_back({{"language", spec.name},
                   {"kind", to_string(kind(*spec.automaton, std::min<std::size_t>(spec.validation_length, 6)))},
                   {"max_length", spec.validation_length},
                   {"words", words},
                   {"mismatches", mismatches},
                   {"first_mismatch", first}});
  }
  r.measured = {{"languages", per}};
  r.bound = "zero mismatches on every word up to the per-language length";
  r.passed = ok;
  return r;
}

ExperimentReport class_conformance(const Params&) {
  ExperimentReport r;
  r.claim = "gallery automata stay within their declared state-complexity classes";
  Json per = Json::array();
  bool ok = true;
  for (auto spec : {count_eq3(), not_eq_lang(), lexicographic(), l_hierarchy(2), l_hierarchy(3), maj2()}) {
    const auto& d = *spec.declared;
    auto prof = profile(*spec.automaton, d.max_n);
    auto check = check_bound(prof, d.f, d.constant);
    ok = ok && check.passed;
    per.push_back({{"language", spec.name},
                   {"class", d.f.name()},
                   {"C", d.constant},
                   {"max_n", d.max_n},
                   {"counts", prof.counts},
                   {"max_ratio", check.max_ratio},
                   {"max_ratio_at", check.max_ratio_at},
                   {"verdict", check.passed ? "pass" : "fail"}});
  }
  // The quadratic bound (2n+1)^2 for CountEq3, and a linear class it must fail.
  auto counts = profile(*count_eq3().automaton, 40).counts;
  bool square_ok = true;
  for (std::size_t n = 0; n < counts.size(); ++n) square_ok = square_ok && counts[n] <= (2 * n + 1) * (2 * n + 1);
  const bool control_fails = !check_bound(ComplexityProfile{"count-eq3", counts}, GrowthClass::polynomial(1), 10).passed;
  ok = ok && square_ok && control_fails;
  r.measured = {{"languages", per}, {"count_eq3_within_(2n+1)^2", square_ok}, {"count_eq3_linear_control_fails", control_fails}};
  r.bound = "count(n) <= C*f(n) for every sampled n; CountEq3 <= (2n+1)^2 and not <= 10n";
  r.passed = ok;
  return r;
}

ExperimentReport exp_alt(const Params& p) {
  ExperimentReport r;
  r.claim = "L_exp has a query table of order n with at least 2^(2^n) rows";
  const auto spec = l_exp();
  const std::size_t n_max = p.size("n");
  Json per = Json::array();
  bool ok = true;
  std::size_t last = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto rows = subset_rows(words_of_length(Alphabet("01"), n), [](const Word& w) { return reversed(w); });
    auto table = query_table(*spec.oracle, n, RowSpec::explicit_rows(rows), p.query_options());
    const std::size_t claimed = std::size_t{1} << (std::size_t{1} << n);
    last = table.distinct_row_count_lower_bound;
    ok = ok && last >= claimed;
    per.push_back({{"order", n},
                   {"rows", rows.size()},
                   {"columns", table.column_count},
                   {"distinct_profiles", last},
                   {"claimed", claimed},
                   {"queries", table.queries}});
  }
  r.measured = {{"per_order", per}, {"distinct_profiles", last}};
  r.bound = "distinct profiles >= 2^(2^n) for every order up to " + std::to_string(n_max);
  r.passed = ok;
  return r;
}

ExperimentReport hierarchy(unsigned level, const Params& p) {
  ExperimentReport r;
  r.claim = "L_" + std::to_string(level) + " has a query table of order n + 2^(n/" + std::to_string(level) +
            ") with at least 2^(2^n) rows";
  const auto spec = l_hierarchy(level);
  const std::size_t n = p.size("n");
  if (n == 0 || n > 5) throw InputError("hierarchy: n must lie in [1, 5]");
  // Smallest p with p^level >= 2^n lozenges leave room for every subset.
  std::uint64_t lozenges = 1;
  auto power = [&](std::uint64_t b) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < level; ++i) v *= b;
    return v;
  };
  while (power(lozenges) < (std::uint64_t{1} << n)) ++lozenges;
  const std::size_t order = n + lozenges;
  auto rows = subset_rows(words_of_length(Alphabet("01"), n), [](const Word& w) { return w; });
  auto table = query_table(*spec.oracle, order, RowSpec::explicit_rows(rows), p.query_options());
  const std::uint64_t claimed = std::uint64_t{1} << (std::size_t{1} << n);
  r.measured = {{"level", level},
                {"n", n},
                {"lozenges", lozenges},
                {"order", order},
                {"rows", rows.size()},
                {"columns", table.column_count},
                {"distinct_profiles", table.distinct_row_count_lower_bound},
                {"queries", table.queries}};
  r.bound = "distinct profiles >= " + std::to_string(claimed);
  r.passed = table.distinct_row_count_lower_bound >= claimed;
  return r;
}

ExperimentReport primes_hs(const Params& p) {
  ExperimentReport r;
  r.claim = "distinct odd binary words have distinct left quotients of Primes";
  const auto spec = primes();
  const std::size_t n_max = p.size("n");
  const std::size_t cap = p.size("witness_cap");
  Json per = Json::array();
  bool ok = true;
  for (std::size_t n = 2; n <= n_max; ++n) {
    auto words = odd_words(n);
    std::set<Word> witnesses;
    std::uint64_t pairs = 0, found = 0;
    std::size_t longest = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++pairs;
        // Adaptive cap: try short witnesses first, doubling up to the cap.
        std::optional<Word> w;
        for (std::size_t len = std::min<std::size_t>(4, cap);; len = std::min(cap, len * 2)) {
          w = distinguish(*spec.oracle, words[i], words[j], len);
          if (w || len == cap) break;
        }
        if (w) {
          ++found;
          longest = std::max(longest, w->size());
          witnesses.insert(*w);
        }
      }
    }
    WitnessSpec ws{0, {witnesses.begin(), witnesses.end()}};
    auto report = count_quotients(*spec.oracle, n, ws, p.query_options());
    const std::size_t claimed = std::size_t{1} << (n - 1);
    const bool pass = found == pairs && report.class_count_lower_bound >= claimed;
    ok = ok && pass;
    per.push_back({{"n", n},
                   {"pairs", pairs},
                   {"distinguished", found},
                   {"longest_witness", longest},
                   {"witnesses", witnesses.size()},
                   {"certified_classes", report.class_count_lower_bound},
                   {"claimed", claimed},
                   {"queries", report.queries}});
  }
  r.measured = {{"per_n", per}};
  r.bound = "every pair distinguished within " + std::to_string(cap) + " letters and >= 2^(n-1) classes";
  r.passed = ok;
  return r;
}

ExperimentReport primes_linear(const Params& p) {
  ExperimentReport r;
  r.claim = "Primes has a query table of order n with at least 2^(n-1) rows, via isolated primes";
  const auto spec = primes();
  const std::size_t n_max = p.size("n");
  const std::uint64_t limit = p.u64("limit");
  if (n_max > 16) throw InputError("primes-linear: n must be at most 16");
  Json per = Json::array();
  bool ok = true;
  for (std::size_t n = 2; n <= n_max; ++n) {
    auto odd = odd_words(n);
    std::vector<Word> rows, owners;
    Json isolated = Json::array();
    bool all_found = true;
    for (const auto& u : odd) {
      const std::uint64_t a = bin_int(u);
      auto k = find_isolated_prime(a, static_cast<unsigned>(n), limit);
      if (!k) {
        all_found = false;
        continue;
      }
      rows.push_back(binary_word(*k));
      owners.push_back(u);
      isolated.push_back({{"a", a}, {"k", *k}, {"p", a + (std::uint64_t{1} << n) * *k}});
    }
    auto table = query_table(*spec.oracle, n, RowSpec::explicit_rows(rows), p.query_options(), true);
    // Column index of each odd length-n prefix.
    const auto columns = words_up_to(spec.alphabet(), n);
    std::vector<std::size_t> odd_columns;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() == n && columns[c].front() == '1') odd_columns.push_back(c);
    }
    bool single_true = true;
    for (std::size_t i = 0; i < table.dump.size(); ++i) {
      std::size_t trues = 0;
      bool at_own = false;
      for (std::size_t k = 0; k < odd_columns.size(); ++k) {
        if (table.dump[i].second[odd_columns[k]] == '1') {
          ++trues;
          at_own = columns[odd_columns[k]] == owners[i];
        }
      }
      single_true = single_true && trues == 1 && at_own;
    }
    const std::size_t claimed = std::size_t{1} << (n - 1);
    const bool pass = all_found && single_true && table.distinct_row_count_lower_bound >= claimed;
    ok = ok && pass;
    per.push_back({{"n", n},
                   {"isolated_primes", isolated},
                   {"distinct_profiles", table.distinct_row_count_lower_bound},
                   {"claimed", claimed},
                   {"one_true_odd_column_per_row", single_true}});
  }
  r.measured = {{"per_n", per}};
  r.bound = "an isolated prime for every odd residue, and >= 2^(n-1) profiles with one true odd column each";
  r.passed = ok;
  return r;
}

ExperimentReport core_crosscheck(const Params& p) {
  ExperimentReport r;
  r.claim = "acceptance, game semantics and determinisation agree; quotients distribute; formulas are monotone";
  std::mt19937_64 rng(p.u64("seed"));
  const Alphabet alphabet("ab");
  const std::size_t count = p.size("automata");
  const std::size_t max_states = p.size("max_states");
  const std::size_t length = p.size("word_length");
  const auto words = words_up_to(alphabet, length);

  std::vector<TableAutomaton> automata;
  std::uint64_t game_mismatch = 0, det_mismatch = 0, checked = 0, det_states = 0;
  for (std::size_t i = 0; i < count; ++i) {
    automata.push_back(random_alternating(rng, alphabet, max_states));
    const auto& a = automata.back();
    const auto det = determinize_finite(a);
    det_states = std::max<std::uint64_t>(det_states, det.state_count());
    for (const auto& w : words) {
      ++checked;
      const bool acc = accepts(a, w);
      if (acc != game_accepts(a, w)) ++game_mismatch;
      if (acc != accepts(det, w)) ++det_mismatch;
    }
  }

  // u^{-1}(L1 op L2) = u^{-1}L1 op u^{-1}L2 on consecutive pairs.
  std::uint64_t law_checks = 0, law_failures = 0;
  for (std::size_t i = 0; i + 1 < automata.size(); i += 2) {
    auto l1 = language_of(std::make_shared<TableAutomaton>(automata[i]));
    auto l2 = language_of(std::make_shared<TableAutomaton>(automata[i + 1]));
    LanguageOracle both("and", alphabet, [&](std::string_view w) { return l1->contains(w) && l2->contains(w); });
    LanguageOracle either("or", alphabet, [&](std::string_view w) { return l1->contains(w) || l2->contains(w); });
    for (const auto& u : words) {
      for (WordEnumerator e(alphabet, length - u.size()); !e.done(); e.next()) {
        const bool m1 = quotient_member(*l1, u, e.current());
        const bool m2 = quotient_member(*l2, u, e.current());
        law_checks += 2;
        if (quotient_member(both, u, e.current()) != (m1 && m2)) ++law_failures;
        if (quotient_member(either, u, e.current()) != (m1 || m2)) ++law_failures;
      }
    }
  }

  // alpha <= beta pointwise and f(alpha) imply f(beta).
  const std::size_t formulas = p.size("formulas");
  std::uint64_t monotone_failures = 0;
  for (std::size_t i = 0; i < formulas; ++i) {
    const auto f = random_formula(rng, 6, 4);
    TruthAssignment alpha, beta;
    for (std::size_t s = 0; s < 6; ++s) {
      const bool x = std::bernoulli_distribution(0.5)(rng);
      alpha[TableAutomaton::state_at(s)] = x;
      beta[TableAutomaton::state_at(s)] = x || std::bernoulli_distribution(0.3)(rng);
    }
    if (eval_formula(f, alpha) && !eval_formula(f, beta)) ++monotone_failures;
  }

  r.measured = {{"automata", count},
                {"word_checks", checked},
                {"game_mismatches", game_mismatch},
                {"determinized_mismatches", det_mismatch},
                {"largest_determinized", det_states},
                {"quotient_law_checks", law_checks},
                {"quotient_law_failures", law_failures},
                {"formula_pairs", formulas},
                {"monotonicity_failures", monotone_failures}};
  r.bound = "zero mismatches and zero failures";
  r.passed = game_mismatch == 0 && det_mismatch == 0 && law_failures == 0 && monotone_failures == 0;
  return r;
}

const Json kQueryDefaults = {{"budget", kDefaultQueryBudget}, {"threads", 1}};

Json with_query(Json j) {
  j.update(kQueryDefaults);
  return j;
}

struct Entry {
  std::string id;
  Json defaults;
  std::string ceiling;
  std::function<ExperimentReport(const Params&)> run;
};

std::vector<Entry> registry() {
  return {
      {"rabin-identities", {{"binary_length", 12}, {"block_length", 8}}, "binary_length 16, block_length 10",
       rabin_identities},
      {"rabin-claim", {{"n", 8}}, "n 10", rabin_claim},
      {"gallery-equiv", Json::object(), "fixed per-language lengths", gallery_equiv},
      {"class-conformance", Json::object(), "fixed per-language ranges", class_conformance},
      {"exp-alt", with_query({{"n", 2}}), "n 3", exp_alt},
      {"hierarchy:2", with_query({{"n", 2}}), "n 3", [](const Params& p) { return hierarchy(2, p); }},
      {"primes-hs", with_query({{"n", 8}, {"witness_cap", 24}}), "n 10", primes_hs},
      {"primes-linear", with_query({{"n", 4}, {"limit", 10'000'000}}), "n 6", primes_linear},
      {"core-crosscheck",
       {{"seed", 1}, {"automata", 1000}, {"max_states", 5}, {"word_length", 6}, {"formulas", 10000}},
       "automata 10000", core_crosscheck},
  };
}

}  // namespace

ExperimentReport run_experiment(std::string_view id, const Json& overrides) {
  std::optional<Entry> entry;
  for (auto& e : registry()) {
    if (e.id == id) entry = std::move(e);
  }
  if (!entry && id.starts_with("hierarchy:")) {
    auto digits = id.substr(10);
    unsigned level = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), level);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && level >= 2) {
      entry = Entry{std::string(id), with_query({{"n", 2}}), "n 3",
                    [level](const Params& p) { return hierarchy(level, p); }};
    }
  }
  if (!entry) throw UnknownReference("unknown experiment '" + std::string(id) + "'");

  Params params(entry->defaults, overrides);
  const bool timing = overrides.is_object() && overrides.contains("timing") && overrides["timing"] == true;
  const auto start = std::chrono::steady_clock::now();
  auto report = entry->run(params);
  report.id = entry->id;
  report.parameters = params.json();
  if (timing) {
    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

std::vector<ExperimentInfo> experiment_catalog() {
  std::vector<ExperimentInfo> out;
  for (const auto& e : registry()) {
    // The claim text lives in the report; run nothing here.
    static const std::map<std::string, std::string> claims = {
        {"rabin-identities", "P(u) = bin(u) and the block product identity"},
        {"rabin-claim", "exponentially many quotients of Rabin's threshold language"},
        {"gallery-equiv", "gallery automata recognise their languages"},
        {"class-conformance", "gallery automata within their declared classes"},
        {"exp-alt", "2^(2^n) query-table rows for L_exp"},
        {"hierarchy:2", "2^(2^n) query-table rows for L_2 at order n + 2^(n/2)"},
        {"primes-hs", "distinct odd words have distinct quotients of Primes"},
        {"primes-linear", "2^(n-1) query-table rows for Primes via isolated primes"},
        {"core-crosscheck", "core semantics agree on random automata"},
    };
    out.push_back({e.id, claims.at(e.id), e.defaults, e.ceiling});
  }
  return out;
}

}  // namespace statelab
