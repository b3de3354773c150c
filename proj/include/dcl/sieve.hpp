#pragma once

#include <cstdint>
#include <vector>

#include "dcl/config.hpp"

namespace dcl {

// Incrementally grown Eratosthenes cache shared by nth_prime and the
// prime-index transform. Growth is synchronized; lookups against the already
// published table take a shared lock, so concurrent workers can read freely.
class PrimeSieve {
  public:
    // p_1 = 2, p_2 = 3, ... Raises a resource error when i exceeds the
    // configured index budget.
    std::uint64_t nth_prime(std::uint64_t i, const Config &cfg = Config::defaults());

    // Number of primes currently materialized (for tests/diagnostics).
    std::uint64_t cached_count() const;

    static PrimeSieve &global();

  private:
    void grow_to_count(std::uint64_t count);
};

std::uint64_t nth_prime(std::uint64_t i, const Config &cfg = Config::defaults());

// Primes <= limit in increasing order (independent of the shared cache).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

} // namespace dcl
