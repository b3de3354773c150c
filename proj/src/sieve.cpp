#include "dcl/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "dcl/error.hpp"

namespace dcl {

namespace {

std::shared_mutex sieve_mutex;
std::vector<std::uint64_t> prime_table; // guarded by sieve_mutex

// Upper bound on p_n (Rosser-Schoenfeld style, padded for small n).
std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
    if (n < 6) return 16;
    double nd = double(n);
    return std::uint64_t(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;
}

} // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    // Odd-only sieve; index i represents 2i+3.
    std::uint64_t odd_count = (limit - 1) / 2; // odds in [3, limit]
    std::vector<bool> composite(odd_count, false);
    out.push_back(2);
    for (std::uint64_t i = 0; i < odd_count; ++i) {
        if (composite[i]) continue;
        std::uint64_t p = 2 * i + 3;
        out.push_back(p);
        if (p <= limit / p)
            for (std::uint64_t j = (p * p - 3) / 2; j < odd_count; j += p) composite[j] = true;
    }
    return out;
}

void PrimeSieve::grow_to_count(std::uint64_t count) {
    std::unique_lock lock(sieve_mutex);
    if (prime_table.size() >= count) return;
    std::uint64_t target = std::max<std::uint64_t>(count, 1024);
    std::uint64_t limit = nth_prime_upper_bound(target);
    auto table = primes_up_to(limit);
    while (table.size() < count) { // bound was too tight; should not happen
        limit *= 2;
        table = primes_up_to(limit);
    }
    prime_table = std::move(table);
}

std::uint64_t PrimeSieve::nth_prime(std::uint64_t i, const Config &cfg) {
    if (i < 1) fail(errc::invalid_parameter, "nth_prime requires i >= 1");
    if (i > cfg.sieve_index_budget)
        fail(errc::resource_budget, "prime index " + std::to_string(i) +
                                        " exceeds the sieve budget of " +
                                        std::to_string(cfg.sieve_index_budget));
    {
        std::shared_lock lock(sieve_mutex);
        if (i <= prime_table.size()) return prime_table[i - 1];
    }
    grow_to_count(std::max<std::uint64_t>(i, 2 * i < cfg.sieve_index_budget ? 2 * i : i));
    std::shared_lock lock(sieve_mutex);
    return prime_table[i - 1];
}

std::uint64_t PrimeSieve::cached_count() const {
    std::shared_lock lock(sieve_mutex);
    return prime_table.size();
}

PrimeSieve &PrimeSieve::global() {
    static PrimeSieve sieve;
    return sieve;
}

std::uint64_t nth_prime(std::uint64_t i, const Config &cfg) {
    return PrimeSieve::global().nth_prime(i, cfg);
}

} // namespace dcl
