#include "statelab/profiler.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "statelab/error.hpp"

namespace statelab {

GrowthClass GrowthClass::parse(std::string_view text) {
  if (text == "const" || text == "1") return constant();
  if (text == "n") return polynomial(1);
  if (text == "2^n") return exponential();
  if (text.starts_with("n^")) {
    unsigned degree = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), degree);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && degree >= 1) {
      return polynomial(degree);
    }
  }
  throw InputError("unknown growth class '" + std::string(text) + "' (expected const, n, n^k or 2^n)");
}

std::string GrowthClass::name() const {
  switch (shape) {
    case Shape::kConstant:
      return "const";
    case Shape::kExponential:
      return "2^n";
    case Shape::kPolynomial:
      return degree == 1 ? "n" : "n^" + std::to_string(degree);
  }
  return "const";
}

std::uint64_t GrowthClass::at(std::size_t n) const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  switch (shape) {
    case Shape::kConstant:
      return 1;
    case Shape::kExponential:
      return n >= 64 ? kMax : std::uint64_t{1} << n;
    case Shape::kPolynomial: {
      const std::uint64_t base = std::max<std::uint64_t>(n, 1);
      std::uint64_t v = 1;
      for (unsigned i = 0; i < degree; ++i) {
        if (v > kMax / base) return kMax;
        v *= base;
      }
      return v;
    }
  }
  return 1;
}

ComplexityProfile profile(const Automaton& automaton, std::size_t n_max, std::size_t state_cap) {
  return ComplexityProfile{automaton.name(), reachable_counts(automaton, n_max, state_cap)};
}

BoundCheck check_bound(const ComplexityProfile& profile, const GrowthClass& f, std::uint64_t constant) {
  BoundCheck check;
  check.f = f;
  check.constant = constant;
  for (std::size_t n = 0; n < profile.counts.size(); ++n) {
    const std::uint64_t fn = f.at(n);
    const unsigned __int128 limit = static_cast<unsigned __int128>(fn) * constant;
    const bool ok = static_cast<unsigned __int128>(profile.counts[n]) <= limit;
    check.verdicts.push_back(ok);
    check.passed = check.passed && ok;
    const double ratio = static_cast<double>(profile.counts[n]) / static_cast<double>(fn);
    if (ratio > check.max_ratio) {
      check.max_ratio = ratio;
      check.max_ratio_at = n;
    }
  }
  return check;
}

}  // namespace statelab
