#include "statelab/quotient.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "statelab/error.hpp"

namespace statelab {

LanguageOracle::LanguageOracle(std::string name, Alphabet alphabet, Membership membership)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), membership_(std::move(membership)) {}

bool LanguageOracle::contains(std::string_view word) const {
  alphabet_.check(word);
  return membership_(word);
}

LanguagePtr language_of(AutomatonPtr automaton) {
  auto name = automaton->name();
  auto alphabet = automaton->alphabet();
  return std::make_shared<LanguageOracle>(
      std::move(name), std::move(alphabet),
      [a = std::move(automaton)](std::string_view w) { return accepts(*a, w); });
}

bool quotient_member(const LanguageOracle& language, std::string_view u, std::string_view w) {
  Word uw(u);
  uw += w;
  return language.contains(uw);
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

// Membership bit vector with its hash accumulated while the bits are set.
struct Signature {
  std::vector<std::uint64_t> bits;
  std::uint64_t hash = 0xcbf29ce484222325ULL;

  explicit Signature(std::size_t n) : bits((n + 63) / 64, 0) {}

  void push(std::size_t i, bool b) {
    if (b) bits[i >> 6] |= std::uint64_t{1} << (i & 63);
    hash = (hash ^ (b ? 0x9dULL : 0x35ULL) ^ i) * 0x100000001b3ULL;
  }

  bool operator==(const Signature& o) const { return bits == o.bits; }
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept { return static_cast<std::size_t>(s.hash); }
};

std::uint64_t checked_queries(std::uint64_t a, std::uint64_t b, std::uint64_t budget,
                              const std::string& what) {
  std::uint64_t q = (b != 0 && a > UINT64_MAX / b) ? UINT64_MAX : a * b;
  if (q > budget) {
    throw BudgetExceeded(what + " needs " + (q == UINT64_MAX ? std::string("more than 2^64") : std::to_string(q)) +
                         " membership queries, over the budget of " + std::to_string(budget));
  }
  return q;
}

// Signatures of `subjects` against `probes`; subject-major.
std::vector<Signature> signatures(const LanguageOracle& language, const std::vector<Word>& subjects,
                                  const std::vector<Word>& probes, bool subject_first,
                                  unsigned threads) {
  std::vector<Signature> out(subjects.size(), Signature(probes.size()));
  parallel_for(subjects.size(), threads, [&](std::size_t i) {
    Signature& sig = out[i];
    for (std::size_t j = 0; j < probes.size(); ++j) {
      bool b = subject_first ? quotient_member(language, subjects[i], probes[j])
                             : quotient_member(language, probes[j], subjects[i]);
      sig.push(j, b);
    }
  });
  return out;
}

}  // namespace

QuotientCountReport count_quotients(const LanguageOracle& language, std::size_t order,
                                    const WitnessSpec& witnesses, const QueryOptions& options) {
  const Alphabet& alphabet = language.alphabet();
  for (const auto& w : witnesses.extra) alphabet.check(w);
  const std::uint64_t prefix_count = count_words_up_to(alphabet.size(), order);
  const std::uint64_t witness_count =
      count_words_up_to(alphabet.size(), witnesses.max_length) + witnesses.extra.size();
  QuotientCountReport report;
  report.queries = checked_queries(prefix_count, witness_count, options.budget,
                                   "counting quotients of " + language.name());
  report.language = language.name();
  report.order = order;
  report.witness_bound = witnesses.max_length;
  report.extra_witnesses = witnesses.extra;

  const auto prefixes = words_up_to(alphabet, order);
  auto probes = words_up_to(alphabet, witnesses.max_length);
  probes.insert(probes.end(), witnesses.extra.begin(), witnesses.extra.end());
  auto sigs = signatures(language, prefixes, probes, true, options.threads);

  // Prefixes are visited in canonical order, so the first member of each
  // class is its canonical representative.
  std::unordered_map<Signature, std::size_t, SignatureHash> classes;
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    auto [it, inserted] = classes.emplace(std::move(sigs[i]), report.representatives.size());
    if (inserted) {
      report.representatives.push_back(prefixes[i]);
      report.class_sizes.push_back(0);
    }
    ++report.class_sizes[it->second];
  }
  report.class_count_lower_bound = report.representatives.size();
  return report;
}

std::optional<Word> distinguish(const LanguageOracle& language, std::string_view u,
                                std::string_view v, std::size_t max_length) {
  language.alphabet().check(u);
  language.alphabet().check(v);
  if (u == v) return std::nullopt;
  for (WordEnumerator it(language.alphabet(), max_length); !it.done(); it.next()) {
    const Word& w = it.current();
    if (quotient_member(language, u, w) != quotient_member(language, v, w)) return w;
  }
  return std::nullopt;
}

QueryTableReport query_table(const LanguageOracle& language, std::size_t order, const RowSpec& rows,
                             const QueryOptions& options, bool keep_dump) {
  const Alphabet& alphabet = language.alphabet();
  for (const auto& w : rows.rows) alphabet.check(w);
  const std::uint64_t column_count = count_words_up_to(alphabet.size(), order);
  const std::uint64_t row_count =
      rows.exhaustive ? count_words_up_to(alphabet.size(), rows.max_length) : rows.rows.size();
  QueryTableReport report;
  report.queries = checked_queries(column_count, row_count, options.budget,
                                   "query table of " + language.name());
  report.language = language.name();
  report.order = order;
  report.rows = rows;
  report.column_count = static_cast<std::size_t>(column_count);

  const auto columns = words_up_to(alphabet, order);
  const auto row_words = rows.exhaustive ? words_up_to(alphabet, rows.max_length) : rows.rows;
  auto sigs = signatures(language, row_words, columns, false, options.threads);

  std::unordered_map<Signature, std::size_t, SignatureHash> distinct;
  for (std::size_t i = 0; i < row_words.size(); ++i) {
    if (keep_dump) {
      std::string bits(columns.size(), '0');
      for (std::size_t j = 0; j < columns.size(); ++j) {
        if ((sigs[i].bits[j >> 6] >> (j & 63)) & 1U) bits[j] = '1';
      }
      report.dump.emplace_back(row_words[i], std::move(bits));
    }
    distinct.emplace(std::move(sigs[i]), i);
  }
  report.distinct_row_count_lower_bound = distinct.size();
  return report;
}

}  // namespace statelab
