#include "statelab/primes.hpp"

#include <array>
#include <string>

#include "statelab/error.hpp"

namespace statelab {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kBases) {
    if (k % p == 0) return k == p;
  }
  std::uint64_t d = k - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3 * 10^24.
  for (auto base : kBases) {
    std::uint64_t x = pow_mod(base, d, k);
    if (x == 1 || x == k - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, k);
      if (x == k - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::uint64_t> find_isolated_prime(std::uint64_t a, unsigned bits, std::uint64_t limit) {
  if (bits == 0 || bits >= 62) throw InputError("bits must lie in [1, 61]");
  const std::uint64_t radius = std::uint64_t{1} << bits;
  if (a % 2 == 0) throw InputError("residue " + std::to_string(a) + " must be odd");
  if (a >= radius) throw InputError("residue must be smaller than 2^bits");
  for (std::uint64_t k = 0; k <= limit; ++k) {
    if (k > (UINT64_MAX - a - radius) / radius) throw Unsupported("search range exceeds 64 bits");
    const std::uint64_t p = a + radius * k;
    if (!is_prime(p)) continue;
    // p is odd, so only odd neighbours can be prime (2 matters when p <= radius + 2).
    bool isolated = true;
    const std::uint64_t lo = p > radius ? p - radius : 0;
    for (std::uint64_t q = lo; q <= p + radius && isolated; ++q) {
      if (q != p && (q == 2 || (q & 1U)) && is_prime(q)) isolated = false;
    }
    if (isolated) return k;
  }
  return std::nullopt;
}

}  // namespace statelab
