#include "statelab/word.hpp"

#include <algorithm>
#include <limits>

#include "statelab/error.hpp"

namespace statelab {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  rank_.fill(-1);
  if (letters_.empty()) throw InputError("alphabet must not be empty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto c = static_cast<unsigned char>(letters_[i]);
    if (c <= 0x20 || c >= 0x7f) {
      throw InputError("alphabet letters must be printable ASCII characters");
    }
    if (rank_[c] >= 0) {
      throw InputError(std::string("duplicate letter '") + letters_[i] + "' in alphabet");
    }
    rank_[c] = static_cast<int>(i);
  }
}

std::size_t Alphabet::rank(Letter a) const {
  int r = rank_[static_cast<unsigned char>(a)];
  if (r < 0) throw InputError(std::string("letter '") + a + "' is not in alphabet {" + letters_ + "}");
  return static_cast<std::size_t>(r);
}

void Alphabet::check(std::string_view word) const {
  for (Letter a : word) {
    if (!contains(a)) {
      throw InputError(std::string("letter '") + a + "' of word \"" + std::string(word) +
                       "\" is not in alphabet {" + letters_ + "}");
    }
  }
}

bool Alphabet::accepts_word(std::string_view word) const noexcept {
  return std::all_of(word.begin(), word.end(), [this](Letter a) { return contains(a); });
}

bool Alphabet::canonical_less(std::string_view a, std::string_view b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return rank(a[i]) < rank(b[i]);
  }
  return false;
}

std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t len) {
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& w : out) {
      for (Letter a : alphabet.letters()) next.push_back(w + a);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (WordEnumerator it(alphabet, max_len); !it.done(); it.next()) out.push_back(it.current());
  return out;
}

std::uint64_t count_words_up_to(std::size_t alphabet_size, std::size_t max_len) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (total > kMax - level) return kMax;
    total += level;
    if (len == max_len) break;
    if (alphabet_size != 0 && level > kMax / alphabet_size) return kMax;
    level *= alphabet_size;
  }
  return total;
}

WordEnumerator::WordEnumerator(const Alphabet& alphabet, std::size_t max_len)
    : alphabet_(alphabet), max_len_(max_len) {}

void WordEnumerator::next() {
  if (done_) return;
  // Odometer over the current length; roll over to the next length.
  std::size_t i = digits_.size();
  while (i > 0) {
    --i;
    if (digits_[i] + 1 < alphabet_.size()) {
      ++digits_[i];
      word_[i] = alphabet_[digits_[i]];
      return;
    }
    digits_[i] = 0;
    word_[i] = alphabet_[0];
  }
  if (digits_.size() == max_len_) {
    done_ = true;
    return;
  }
  digits_.assign(digits_.size() + 1, 0);
  word_.assign(digits_.size(), alphabet_[0]);
}

Word normalize_word(std::string_view text) {
  static constexpr std::string_view kEpsilon = "\xCE\xB5";          // ε
  static constexpr std::string_view kLozengeGlyph = "\xE2\x97\x8A";  // ◊
  static constexpr std::string_view kSharpGlyph = "\xE2\x99\xAF";    // ♯
  if (text == kEpsilon) return Word();
  Word out;
  for (std::size_t i = 0; i < text.size();) {
    auto rest = text.substr(i);
    if (rest.starts_with(kLozengeGlyph)) {
      out.push_back(kLozenge);
      i += kLozengeGlyph.size();
    } else if (rest.starts_with(kSharpGlyph)) {
      out.push_back('#');
      i += kSharpGlyph.size();
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

std::string display_word(std::string_view word) {
  if (word.empty()) return "\xCE\xB5";
  std::string out;
  for (Letter a : word) {
    if (a == kLozenge) {
      out += "\xE2\x97\x8A";
    } else {
      out.push_back(a);
    }
  }
  return out;
}

std::string reversed(std::string_view word) { return std::string(word.rbegin(), word.rend()); }

std::vector<std::string_view> split_blocks(std::string_view word, Letter sep) {
  std::vector<std::string_view> blocks;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= word.size(); ++i) {
    if (i == word.size() || word[i] == sep) {
      blocks.push_back(word.substr(start, i - start));
      start = i + 1;
    }
  }
  return blocks;
}

}  // namespace statelab
