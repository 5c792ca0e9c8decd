#include "statelab/prob.hpp"

#include <cctype>
#include <map>

#include "statelab/error.hpp"
#include "statelab/interchange.hpp"

namespace statelab {

Rational parse_rational(std::string_view text) {
  auto valid = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

void check_binary(std::string_view u) {
  for (char c : u) {
    if (c != '0' && c != '1') {
      throw InputError(std::string("letter '") + c + "' of \"" + std::string(u) + "\" is not binary");
    }
  }
}

}  // namespace

Rational bin_frac(std::string_view u) {
  check_binary(u);
  Rational x = 0;
  for (char c : u) {
    x = (x + (c == '1' ? 1 : 0)) / 2;
  }
  return x;
}

std::uint64_t bin_int(std::string_view u) {
  check_binary(u);
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == '1') {
      if (i >= 64) throw Unsupported("binary value of \"" + std::string(u) + "\" exceeds 64 bits");
      value |= std::uint64_t{1} << i;
    }
  }
  return value;
}

ProbAutomaton::ProbAutomaton(std::string name, Alphabet alphabet, std::vector<std::string> states,
                             std::size_t initial, std::vector<bool> accepting,
                             std::vector<Matrix> matrices)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      initial_(initial),
      accepting_(std::move(accepting)),
      matrices_(std::move(matrices)) {
  const std::size_t n = states_.size();
  if (n == 0) throw ModelError("probabilistic automaton needs at least one state");
  if (initial_ >= n) throw ModelError("initial state out of range");
  if (accepting_.size() != n) throw ModelError("accepting flags do not match states");
  if (matrices_.size() != alphabet_.size()) throw ModelError("one matrix per letter is required");
  for (const auto& m : matrices_) {
    if (m.size() != n) throw ModelError("transition matrix has the wrong number of rows");
    for (const auto& row : m) {
      if (row.size() != n) throw ModelError("transition matrix has the wrong number of columns");
    }
  }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b.front().size();
  Matrix c(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

Matrix word_matrix(const ProbAutomaton& automaton, std::string_view word) {
  automaton.alphabet().check(word);
  const std::size_t n = automaton.states().size();
  Matrix result(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1;
  for (Letter a : word) result = multiply(result, automaton.matrix(a));
  return result;
}

Rational acceptance_probability(const ProbAutomaton& automaton, std::string_view word) {
  automaton.alphabet().check(word);
  const std::size_t n = automaton.states().size();
  std::vector<Rational> dist(n, Rational(0));
  dist[automaton.initial()] = 1;
  for (Letter a : word) {
    const Matrix& m = automaton.matrix(a);
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t s = 0; s < n; ++s) {
      if (dist[s] == 0) continue;
      for (std::size_t t = 0; t < n; ++t) {
        if (m[s][t] != 0) next[t] += dist[s] * m[s][t];
      }
    }
    dist = std::move(next);
  }
  Rational p = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (automaton.accepting()[t]) p += dist[t];
  }
  return p;
}

ProbAutomaton rabin_automaton() {
  // States: 0 = q0 (initial), 1 = q1 (accepting), 2 = dead sink.
  const Rational half(1, 2);
  auto zero = [] { return Matrix(3, std::vector<Rational>(3, Rational(0))); };
  Matrix on0 = zero(), on1 = zero(), on_sharp = zero();
  on0[0][0] = 1;
  on0[1][1] = half;
  on0[1][0] = half;
  on0[2][2] = 1;
  on1[0][1] = half;
  on1[0][0] = half;
  on1[1][1] = 1;
  on1[2][2] = 1;
  on_sharp[1][0] = 1;
  on_sharp[0][2] = 1;
  on_sharp[2][2] = 1;
  return ProbAutomaton("rabin", Alphabet("01#"), {"q0", "q1", "dead"}, 0, {false, true, false},
                       {on0, on1, on_sharp});
}

ThresholdLanguage make_threshold_language(ProbAutomaton automaton, Rational threshold) {
  if (threshold <= 0 || threshold >= 1) throw InputError("threshold must lie strictly between 0 and 1");
  return ThresholdLanguage{std::move(automaton), std::move(threshold)};
}

bool threshold_member(const ThresholdLanguage& language, std::string_view word) {
  return acceptance_probability(language.automaton, word) > language.threshold;
}

Word dyadic_witness(const Rational& lo, const Rational& hi) {
  if (lo < 0 || hi > 1) throw InputError("dyadic_witness needs 0 <= lo < hi <= 1");
  if (lo >= hi) throw InputError("degenerate interval [" + to_string(lo) + ", " + to_string(hi) + "]");
  // Length-k words realise exactly the values a/2^k for 0 <= a < 2^k, with
  // u(i) the i-th least significant bit of a.
  for (unsigned k = 1;; ++k) {
    mpz_class scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
    // Smallest a with a/2^k > lo, largest with a/2^k < hi.
    Rational lo_scaled = lo * scale;
    mpz_class first;
    mpz_fdiv_q(first.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
    first += 1;
    Rational hi_scaled = hi * scale;
    mpz_class last;
    mpz_cdiv_q(last.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
    last -= 1;
    if (first > last) continue;
    Word best;
    for (mpz_class a = first; a <= last; ++a) {
      Word w(k, '0');
      for (unsigned i = 0; i < k; ++i) {
        if (mpz_tstbit(a.get_mpz_t(), i)) w[i] = '1';
      }
      if (best.empty() || w < best) best = std::move(w);
    }
    return best;
  }
}

Word separate_quotients(std::string_view u, std::string_view v) {
  if (u.size() != v.size()) throw InputError("separate_quotients needs words of equal length");
  if (u == v) throw InputError("separate_quotients needs distinct words");
  Word u1 = std::string(u) + '1';
  Word v1 = std::string(v) + '1';
  Rational bu = bin_frac(u1), bv = bin_frac(v1);
  const Rational& lo = bu < bv ? bu : bv;
  const Rational& hi = bu < bv ? bv : bu;
  Rational lower = 1 / (2 * hi);
  Rational upper = 1 / (2 * lo);
  Word suffix = "#" + dyadic_witness(lower, upper);

  static const ThresholdLanguage half = make_threshold_language(rabin_automaton(), Rational(1, 2));
  if (threshold_member(half, u1 + suffix) == threshold_member(half, v1 + suffix)) {
    throw ModelError("separator " + suffix + " failed to split " + u1 + " and " + v1);
  }
  return suffix;
}

std::vector<StochasticViolation> validate_stochastic(const ProbAutomaton& automaton) {
  std::vector<StochasticViolation> out;
  const auto& states = automaton.states();
  for (Letter a : automaton.alphabet().letters()) {
    const Matrix& m = automaton.matrix(a);
    for (std::size_t s = 0; s < states.size(); ++s) {
      Rational sum = 0;
      for (std::size_t t = 0; t < states.size(); ++t) {
        if (m[s][t] < 0 || m[s][t] > 1) {
          out.push_back({a, states[s], "entry to " + states[t] + " is " + to_string(m[s][t]) + ", outside [0,1]"});
        }
        sum += m[s][t];
      }
      if (sum != 1) out.push_back({a, states[s], "row sums to " + to_string(sum)});
    }
  }
  return out;
}

ProbAutomaton load_prob_automaton(std::string_view text, std::string name) {
  InterchangeDocument doc = parse_document(text);
  if (!doc.alphabet) throw InputError("missing 'alphabet:' line");
  if (doc.states.empty()) throw InputError("missing 'states:' line");
  if (!doc.initial) throw InputError("missing 'initial:' line");
  if (!doc.trans.empty()) {
    throw ParseError("'trans' lines belong to alternating automata", doc.trans.front().line, 1);
  }
  const Alphabet& alphabet = *doc.alphabet;
  std::map<std::string, std::size_t, std::less<>> ids;
  for (std::size_t i = 0; i < doc.states.size(); ++i) ids.emplace(doc.states[i], i);
  auto lookup = [&](std::string_view s, int line, int col) {
    auto it = ids.find(s);
    if (it == ids.end()) throw ParseError("undeclared state '" + std::string(s) + "'", line, col);
    return it->second;
  };

  const std::size_t n = doc.states.size();
  std::vector<bool> accepting(n, false);
  for (const auto& s : doc.accepting) accepting[lookup(s, doc.accepting_line, 1)] = true;
  std::vector<Matrix> matrices(alphabet.size(), Matrix(n, std::vector<Rational>(n, Rational(0))));
  std::vector<bool> seen(alphabet.size() * n, false);
  for (const auto& t : doc.ptrans) {
    const std::size_t s = lookup(t.state, t.line, 1);
    if (!alphabet.contains(t.letter)) {
      throw ParseError(std::string("undeclared letter '") + t.letter + "'", t.line, 1);
    }
    const std::size_t a = alphabet.rank(t.letter);
    if (seen[a * n + s]) {
      throw ParseError("duplicate ptrans for state '" + t.state + "', letter '" + std::string(1, t.letter) + "'",
                       t.line, 1);
    }
    seen[a * n + s] = true;
    std::size_t pos = 0;
    const std::string& body = t.body;
    while (pos < body.size()) {
      while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
      if (pos == body.size()) break;
      std::size_t end = pos;
      while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end]))) ++end;
      std::string_view item(body.data() + pos, end - pos);
      const int col = t.body_column + static_cast<int>(pos);
      auto colon = item.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected <state>:<probability>", t.line, col);
      const std::size_t target = lookup(item.substr(0, colon), t.line, col);
      Rational p;
      try {
        p = parse_rational(item.substr(colon + 1));
      } catch (const InputError& e) {
        throw ParseError(e.what(), t.line, col + static_cast<int>(colon) + 1);
      }
      matrices[a][s][target] += p;
      pos = end;
    }
  }
  ProbAutomaton automaton(std::move(name), alphabet, doc.states, lookup(*doc.initial, doc.initial_line, 1),
                          std::move(accepting), std::move(matrices));
  auto violations = validate_stochastic(automaton);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw InputError("not stochastic: state '" + v.state + "', letter '" + std::string(1, v.letter) + "': " + v.reason);
  }
  return automaton;
}

}  // namespace statelab
