#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace statelab {

// Letters are single printable ASCII characters; words are plain strings.
using Letter = char;
using Word = std::string;

// The lozenge letter of the padded languages is stored as this character.
inline constexpr Letter kLozenge = 'd';

// A finite, duplicate-free, ordered set of letters. The declared order fixes
// the canonical (length-then-lexicographic) enumeration of words.
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool contains(Letter a) const noexcept { return rank_[static_cast<unsigned char>(a)] >= 0; }
  // Position of `a` in the declared order; throws InputError if absent.
  std::size_t rank(Letter a) const;

  // Throws InputError naming the first letter outside the alphabet.
  void check(std::string_view word) const;
  bool accepts_word(std::string_view word) const noexcept;

  // Length-then-lexicographic comparison with respect to the declared order.
  bool canonical_less(std::string_view a, std::string_view b) const;

  bool operator==(const Alphabet& other) const noexcept { return letters_ == other.letters_; }

 private:
  std::string letters_;
  std::array<int, 256> rank_{};
};

// All words of length <= max_len in canonical order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len);
// All words of length exactly len in canonical order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t len);
// |A^{<=n}|, saturating at UINT64_MAX.
std::uint64_t count_words_up_to(std::size_t alphabet_size, std::size_t max_len);

// Steps through A^{<=max_len} in canonical order without materialising it.
class WordEnumerator {
 public:
  WordEnumerator(const Alphabet& alphabet, std::size_t max_len);

  const Word& current() const noexcept { return word_; }
  bool done() const noexcept { return done_; }
  void next();

 private:
  Alphabet alphabet_;
  std::size_t max_len_;
  std::vector<std::size_t> digits_;
  Word word_;
  bool done_ = false;
};

// Accepts "ε" and the empty string for the empty word, and the Unicode
// lozenge/sharp glyphs as aliases of their ASCII letters.
Word normalize_word(std::string_view text);
// Renders the empty word as "ε" and the lozenge letter as "◊".
std::string display_word(std::string_view word);

std::string reversed(std::string_view word);

// Splits on every occurrence of `sep`; "a#b#" yields {"a","b",""}.
std::vector<std::string_view> split_blocks(std::string_view word, Letter sep);

}  // namespace statelab
