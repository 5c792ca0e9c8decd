#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statelab/automaton.hpp"
#include "statelab/word.hpp"

namespace statelab {

inline constexpr std::uint64_t kDefaultQueryBudget = 100'000'000;

// A language given by a pure, total membership predicate.
class LanguageOracle {
 public:
  using Membership = std::function<bool(std::string_view)>;

  LanguageOracle(std::string name, Alphabet alphabet, Membership membership);

  const std::string& name() const noexcept { return name_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  // Throws InputError for letters outside the alphabet.
  bool contains(std::string_view word) const;

 private:
  std::string name_;
  Alphabet alphabet_;
  Membership membership_;
};

using LanguagePtr = std::shared_ptr<const LanguageOracle>;

LanguagePtr language_of(AutomatonPtr automaton);

// w in u^{-1}L, i.e. uw in L.
bool quotient_member(const LanguageOracle& language, std::string_view u, std::string_view w);

struct QueryOptions {
  std::uint64_t budget = kDefaultQueryBudget;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 1;
};

// Witness set W = A^{<=max_length} followed by `extra` words (constructed
// separators appended to the exhaustive set).
struct WitnessSpec {
  std::size_t max_length = 0;
  std::vector<Word> extra;
};

// Quotient classes of A^{<=order} told apart by the witnesses. Bounded
// witnesses can only merge classes, so the count is a lower bound on the
// number of distinct left quotients of that order.
struct QuotientCountReport {
  std::string language;
  std::size_t order = 0;
  std::size_t witness_bound = 0;
  std::vector<Word> extra_witnesses;
  std::size_t class_count_lower_bound = 0;
  // Canonically smallest prefix of each class, in canonical order.
  std::vector<Word> representatives;
  std::vector<std::size_t> class_sizes;
  std::uint64_t queries = 0;
};

QuotientCountReport count_quotients(const LanguageOracle& language, std::size_t order,
                                    const WitnessSpec& witnesses, const QueryOptions& options = {});

// Canonically first w with |w| <= max_length and uw in L xor vw in L.
std::optional<Word> distinguish(const LanguageOracle& language, std::string_view u,
                                std::string_view v, std::size_t max_length);

struct RowSpec {
  bool exhaustive = true;
  std::size_t max_length = 0;
  std::vector<Word> rows;

  static RowSpec all_up_to(std::size_t max_length) { return RowSpec{true, max_length, {}}; }
  static RowSpec explicit_rows(std::vector<Word> rows) { return RowSpec{false, 0, std::move(rows)}; }
};

// Profiles of the row words against the order-n left quotients (columns are
// the prefixes of A^{<=n} in canonical order). The number of distinct
// profiles is a lower bound on the size of the query table of order n.
struct QueryTableReport {
  std::string language;
  std::size_t order = 0;
  RowSpec rows;
  std::size_t column_count = 0;
  std::size_t distinct_row_count_lower_bound = 0;
  // (row word, profile as a '0'/'1' string) when requested.
  std::vector<std::pair<Word, std::string>> dump;
  std::uint64_t queries = 0;
};

QueryTableReport query_table(const LanguageOracle& language, std::size_t order, const RowSpec& rows,
                             const QueryOptions& options = {}, bool keep_dump = false);

// Runs body(i) for i in [0, count) across `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace statelab
