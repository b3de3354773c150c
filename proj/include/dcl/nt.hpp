#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dcl/bigint.hpp"
#include "dcl/config.hpp"

namespace dcl {

// Complete prime-power factorization, sorted by prime. `certified` is false
// only when a factor above the deterministic Miller-Rabin range was accepted
// on the strength of a probabilistic test.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;
    bool certified = true;

    Int value() const {
        Int v = 1;
        for (const auto &[p, e] : factors) v *= pow_ui(p, e);
        return v;
    }
    bool square_free() const {
        for (const auto &[p, e] : factors)
            if (e > 1) return false;
        return true;
    }
};

// Deterministic below 2^64 (fixed Miller-Rabin base set); strong probabilistic
// above. certified_out, when given, reports which regime applied.
bool is_prime(const Int &n, bool *certified_out = nullptr);
bool is_prime_u64(std::uint64_t n);

// Trial division for small factors plus Brent-cycle Pollard rho with a
// deterministic primality certificate for every emitted factor. Raises
// factorization_incomplete if a cofactor resists the iteration budget.
Factorization factorize(const Int &n, const Config &cfg = Config::defaults());
Factorization factorize_u64(std::uint64_t n, const Config &cfg = Config::defaults());

// Euler phi from a factorization.
Int euler_phi(const Factorization &f);

// Carmichael function: lambda(p^e) = phi(p^e) for odd p and p^e in {2,4},
// lambda(2^e) = 2^(e-2) for e >= 3, lcm over prime powers.
Int carmichael_lambda(const Int &n, const Config &cfg = Config::defaults());

// Modulus with precomputed group metadata (exponent, square-freeness).
struct ModulusContext {
    Int n;
    Factorization factorization;
    Int lambda;
    bool square_free = false;

    static ModulusContext create(const Int &n, const Config &cfg = Config::defaults());
};

// Least T > 0 with a^T = 1 mod n. Computed by lambda(n)-divisor descent,
// never by scanning. Requires gcd(a, n) = 1.
Int multiplicative_order(const Int &a, const Int &n, const Config &cfg = Config::defaults());
Int multiplicative_order(const Int &a, const ModulusContext &ctx,
                         const Config &cfg = Config::defaults());
// Descent with the factorization of lambda(n) already in hand (profiling
// many labels against one modulus).
Int multiplicative_order(const Int &a, const ModulusContext &ctx,
                         const Factorization &lambda_factors);

// Korselt certificate: n is Carmichael iff composite, square-free, and
// p-1 | n-1 for every prime p | n.
struct KorseltCertificate {
    Int n;
    bool is_carmichael = false;
    bool composite = false;
    bool square_free = false;
    bool certified = true;
    std::vector<std::pair<Int, bool>> divisibility; // (p, p-1 divides n-1)
};

KorseltCertificate korselt_check(const Int &n, const Config &cfg = Config::defaults());

// The cyclic subgroup <p> of (Z/qZ)^x for prime q not dividing p, by direct
// iteration until 1 recurs. Residues in first-visit order starting at 1.
std::vector<Int> cyclic_subgroup(const Int &p, const Int &q);

// Multiplicative closure of S (BFS over products mod n) compared against
// phi(n). Every element of S must be a unit; group order must fit the
// configured closure budget.
bool generates_full_group(const std::vector<Int> &S, const Int &n,
                          const Config &cfg = Config::defaults());

} // namespace dcl
