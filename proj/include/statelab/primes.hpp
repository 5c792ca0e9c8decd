#pragma once

#include <cstdint>
#include <optional>

namespace statelab {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t k);

// Smallest k <= limit such that p = a + 2^bits * k is prime and no other
// prime lies in [p - 2^bits, p + 2^bits]. Requires a odd and a < 2^bits.
std::optional<std::uint64_t> find_isolated_prime(std::uint64_t a, unsigned bits, std::uint64_t limit);

}  // namespace statelab
