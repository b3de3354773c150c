#pragma once

#include <cstdint>
#include <string>

namespace dcl {

// Tunable budgets. Library entry points take a const Config& with these
// defaults; the CLI layers flag > config-file > default precedence on top.
struct Config {
    // Largest prime index nth_prime will serve before raising a resource error.
    std::uint64_t sieve_index_budget = 2'000'000;
    // Cap on the bit length of a single materialized label (1 Mi-bit).
    std::uint64_t exact_label_bits = 1u << 20;
    // Pollard rho iteration budget per cofactor before factorization gives up.
    std::uint64_t rho_iteration_budget = 1u << 26;
    // Largest multiplicative-group order generates_full_group will close over.
    std::uint64_t closure_budget = 1'000'000;
    // Default verification horizon for maps without a structural guarantee.
    std::uint32_t default_horizon = 64;

    static const Config &defaults() {
        static const Config c{};
        return c;
    }
};

} // namespace dcl
