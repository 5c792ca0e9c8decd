#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "statelab/automaton.hpp"

namespace statelab {

// The reference function f of a state-complexity class C*f(n).
// Polynomial classes are evaluated at max(n, 1) so that f(0) = 1.
struct GrowthClass {
  enum class Shape { kConstant, kPolynomial, kExponential };

  Shape shape = Shape::kConstant;
  unsigned degree = 0;

  static GrowthClass constant() { return {Shape::kConstant, 0}; }
  static GrowthClass polynomial(unsigned degree) { return {Shape::kPolynomial, degree}; }
  static GrowthClass exponential() { return {Shape::kExponential, 0}; }
  // "const", "n", "n^2", "n^3", ..., "2^n".
  static GrowthClass parse(std::string_view text);

  std::string name() const;
  // Saturates at UINT64_MAX.
  std::uint64_t at(std::size_t n) const;

  friend bool operator==(const GrowthClass&, const GrowthClass&) = default;
};

// A class claim "|reachable(n)| <= constant * f(n)", sampled up to max_n.
struct DeclaredBound {
  GrowthClass f;
  std::uint64_t constant = 1;
  std::size_t max_n = 40;
};

struct ComplexityProfile {
  std::string automaton;
  // counts[n] = |reachable(A, n)|.
  std::vector<std::uint64_t> counts;
};

struct BoundCheck {
  GrowthClass f;
  std::uint64_t constant = 1;
  std::vector<bool> verdicts;
  // Largest count(n) / f(n) over the sampled n, and where it occurs.
  double max_ratio = 0.0;
  std::size_t max_ratio_at = 0;
  bool passed = true;
};

ComplexityProfile profile(const Automaton& automaton, std::size_t n_max,
                          std::size_t state_cap = kDefaultStateCap);

BoundCheck check_bound(const ComplexityProfile& profile, const GrowthClass& f, std::uint64_t constant);

}  // namespace statelab
