#include "statelab/interchange.hpp"

#include <cctype>
#include <map>
#include <set>

#include "statelab/error.hpp"

namespace statelab {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.' || c == '\'';
}

// Recursive-descent parser:  or := and ('|' and)* ; and := atom ('&' atom)* ;
// atom := name | 'T' | 'F' | '(' or ')'.
class FormulaParser {
 public:
  FormulaParser(std::string_view text, int line, int column,
                const std::function<std::optional<State>(std::string_view)>& resolve)
      : text_(text), line_(line), column_(column), resolve_(resolve) {}

  Formula parse() {
    Formula f = parse_or();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_ + static_cast<int>(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_or() {
    std::vector<Formula> terms{parse_and()};
    while (accept('|')) terms.push_back(parse_and());
    return Formula::any_of(std::move(terms));
  }

  Formula parse_and() {
    std::vector<Formula> factors{parse_atom()};
    while (accept('&')) factors.push_back(parse_atom());
    return Formula::all_of(std::move(factors));
  }

  Formula parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a state, T, F or '('");
    if (text_[pos_] == '(') {
      ++pos_;
      Formula inner = parse_or();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail(std::string("unexpected '") + text_[pos_] + "'");
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "T") return Formula::top();
    if (name == "F") return Formula::bottom();
    auto q = resolve_(name);
    if (!q) {
      throw ParseError("undeclared state '" + std::string(name) + "'", line_,
                       column_ + static_cast<int>(start));
    }
    return Formula::atom(*q);
  }

  std::string_view text_;
  int line_;
  int column_;
  const std::function<std::optional<State>(std::string_view)>& resolve_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

void check_state_name(const std::string& name, int line) {
  if (name == "T" || name == "F") {
    throw ParseError("'" + name + "' is reserved for the constants", line, 1);
  }
  for (char c : name) {
    if (!is_name_char(c)) throw ParseError("invalid state name '" + name + "'", line, 1);
  }
}

}  // namespace

Formula parse_formula(std::string_view text,
                      const std::function<std::optional<State>(std::string_view)>& resolve) {
  return FormulaParser(text, 1, 1, resolve).parse();
}

ParsedFormula parse_formula(std::string_view text) {
  ParsedFormula out;
  std::map<std::string, std::size_t, std::less<>> ids;
  std::function<std::optional<State>(std::string_view)> resolve =
      [&](std::string_view name) -> std::optional<State> {
    auto it = ids.find(name);
    if (it == ids.end()) {
      it = ids.emplace(std::string(name), out.names.size()).first;
      out.names.emplace_back(name);
    }
    return TableAutomaton::state_at(it->second);
  };
  out.formula = parse_formula(text, resolve);
  return out;
}

InterchangeDocument parse_document(std::string_view text) {
  InterchangeDocument doc;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first == line.size() || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::string_view body = line.substr(first);
    auto header = [&](std::string_view key) { return body.starts_with(key); };

    if (header("alphabet:")) {
      if (doc.alphabet) throw ParseError("duplicate 'alphabet:' line", line_no, 1);
      std::string letters;
      for (const auto& tok : split_ws(body.substr(9))) {
        if (tok.size() != 1) throw ParseError("letter '" + tok + "' is not a single character", line_no, 1);
        letters += tok;
      }
      try {
        doc.alphabet.emplace(letters);
      } catch (const InputError& e) {
        throw ParseError(e.what(), line_no, 1);
      }
    } else if (header("states:")) {
      if (doc.states_line != 0) throw ParseError("duplicate 'states:' line", line_no, 1);
      doc.states_line = line_no;
      doc.states = split_ws(body.substr(7));
      if (doc.states.empty()) throw ParseError("'states:' lists no state", line_no, 1);
      std::set<std::string> unique;
      for (const auto& s : doc.states) {
        check_state_name(s, line_no);
        if (!unique.insert(s).second) throw ParseError("duplicate state '" + s + "'", line_no, 1);
      }
    } else if (header("initial:")) {
      if (doc.initial) throw ParseError("duplicate 'initial:' line", line_no, 1);
      auto toks = split_ws(body.substr(8));
      if (toks.size() != 1) throw ParseError("'initial:' takes exactly one state", line_no, 1);
      doc.initial = toks.front();
      doc.initial_line = line_no;
    } else if (header("accepting:")) {
      if (doc.accepting_line != 0) throw ParseError("duplicate 'accepting:' line", line_no, 1);
      doc.accepting = split_ws(body.substr(10));
      doc.accepting_line = line_no;
    } else if (header("trans ") || header("ptrans ")) {
      const bool probabilistic = header("ptrans ");
      std::size_t pos = probabilistic ? 7 : 6;
      auto next_token = [&](const char* what) {
        while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
        std::size_t s = pos;
        while (pos < body.size() && !std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
        if (s == pos) {
          throw ParseError(std::string("expected ") + what, line_no, static_cast<int>(first + s) + 1);
        }
        return std::pair{std::string(body.substr(s, pos - s)), static_cast<int>(first + s) + 1};
      };
      TransitionLine t;
      t.line = line_no;
      t.state = next_token("a state").first;
      auto [letter, letter_col] = next_token("a letter");
      if (letter.size() != 1) throw ParseError("letter '" + letter + "' is not a single character", line_no, letter_col);
      t.letter = letter[0];
      auto [arrow, arrow_col] = next_token("'->'");
      if (arrow != "->") throw ParseError("expected '->'", line_no, arrow_col);
      t.body = std::string(body.substr(pos));
      t.body_column = static_cast<int>(first + pos) + 1;
      (probabilistic ? doc.ptrans : doc.trans).push_back(std::move(t));
    } else {
      throw ParseError("unrecognised line", line_no, static_cast<int>(first) + 1);
    }
    if (end == text.size()) break;
  }
  return doc;
}

TableAutomaton load_automaton(std::string_view text, std::string name) {
  InterchangeDocument doc = parse_document(text);
  if (!doc.alphabet) throw InputError("missing 'alphabet:' line");
  if (doc.states.empty()) throw InputError("missing 'states:' line");
  if (!doc.initial) throw InputError("missing 'initial:' line");
  if (!doc.ptrans.empty()) {
    throw ParseError("'ptrans' lines belong to probabilistic automata", doc.ptrans.front().line, 1);
  }
  const Alphabet& alphabet = *doc.alphabet;

  std::map<std::string, std::size_t, std::less<>> ids;
  for (std::size_t i = 0; i < doc.states.size(); ++i) ids.emplace(doc.states[i], i);
  auto lookup = [&](const std::string& s, int line) {
    auto it = ids.find(s);
    if (it == ids.end()) throw ParseError("undeclared state '" + s + "'", line, 1);
    return it->second;
  };

  const std::size_t initial = lookup(*doc.initial, doc.initial_line);
  std::vector<bool> accepting(doc.states.size(), false);
  for (const auto& s : doc.accepting) accepting[lookup(s, doc.accepting_line)] = true;

  std::function<std::optional<State>(std::string_view)> resolve =
      [&](std::string_view s) -> std::optional<State> {
    auto it = ids.find(s);
    if (it == ids.end()) return std::nullopt;
    return TableAutomaton::state_at(it->second);
  };

  const std::size_t k = alphabet.size();
  std::vector<std::optional<Formula>> table(doc.states.size() * k);
  for (const auto& t : doc.trans) {
    const std::size_t q = lookup(t.state, t.line);
    if (!alphabet.contains(t.letter)) {
      throw ParseError(std::string("undeclared letter '") + t.letter + "'", t.line, 1);
    }
    auto& slot = table[q * k + alphabet.rank(t.letter)];
    if (slot) {
      throw ParseError("duplicate transition for state '" + t.state + "', letter '" +
                           std::string(1, t.letter) + "'",
                       t.line, 1);
    }
    slot = FormulaParser(t.body, t.line, t.body_column, resolve).parse();
  }

  std::vector<Formula> transitions;
  transitions.reserve(table.size());
  for (std::size_t q = 0; q < doc.states.size(); ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      if (!table[q * k + a]) {
        throw InputError("missing transition for state '" + doc.states[q] + "', letter '" +
                         std::string(1, alphabet[a]) + "'");
      }
      transitions.push_back(std::move(*table[q * k + a]));
    }
  }
  return TableAutomaton(std::move(name), alphabet, doc.states, initial, std::move(accepting),
                        std::move(transitions));
}

std::string serialize(const TableAutomaton& automaton) {
  const auto& alphabet = automaton.alphabet();
  const auto& names = automaton.state_names();
  std::string out = "alphabet:";
  for (Letter a : alphabet.letters()) (out += ' ') += a;
  out += "\nstates:";
  for (const auto& s : names) (out += ' ') += s;
  out += "\ninitial: " + names[automaton.initial_index()] + "\naccepting:";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (automaton.accepting_index(i)) (out += ' ') += names[i];
  }
  out += '\n';
  auto label = [&](const State& q) { return automaton.state_label(q); };
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (Letter a : alphabet.letters()) {
      out += "trans " + names[i] + ' ' + a + " -> " + format_formula(automaton.transition(i, a), label) + '\n';
    }
  }
  return out;
}

}  // namespace statelab
