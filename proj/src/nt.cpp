#include "dcl/nt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "dcl/error.hpp"
#include "dcl/sieve.hpp"

namespace dcl {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 addmod(u64 a, u64 b, u64 m) { return u64((u128(a) + b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    for (; e; e >>= 1) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool miller_rabin_u64(u64 n, u64 a, u64 d, int s) {
    a %= n;
    if (a == 0) return true;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Base set deterministic for all n < 3.3 * 10^24, in particular below 2^64.
constexpr u64 kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : kMrBases)
        if (!miller_rabin_u64(n, a, d, s)) return false;
    return true;
}

bool is_prime(const Int &n, bool *certified_out) {
    if (certified_out) *certified_out = true;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    if (sgn(n) <= 0) return false;
    if (mpz_even_p(n.get_mpz_t())) return false;
    Int nm1 = n - 1;
    Int d = nm1;
    int s = 0;
    while (mpz_even_p(d.get_mpz_t())) d >>= 1, ++s;
    auto witness = [&](const Int &a) {
        Int x = powm(a, d, n);
        if (x == 1 || x == nm1) return false;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == nm1) return false;
        }
        return true;
    };
    for (u64 a : kMrBases)
        if (witness(Int(from_u64(a)))) return false;
    // Extra fixed bases; beyond the deterministic range the verdict is a
    // strong probabilistic one, flagged to the caller.
    for (u64 a = 41; a <= 163; a += 2)
        if (is_prime_u64(a) && witness(Int(from_u64(a)))) return false;
    if (certified_out) *certified_out = false;
    return true;
}

namespace {

// Brent-cycle Pollard rho. Returns a nontrivial factor of composite odd n,
// or 0 if the iteration budget ran out.
u64 pollard_brent_u64(u64 n, u64 &budget) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return addmod(mulmod(x, x, n), c, n); };
        u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        const u64 batch = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += batch) {
                ys = y;
                u64 lim = std::min(batch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
                if (budget < lim) return 0;
                budget -= lim;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time from the last batch start.
            do {
                if (budget == 0) return 0;
                --budget;
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

Int pollard_brent_mpz(const Int &n, u64 &budget) {
    for (unsigned long c = 1;; ++c) {
        auto f = [&](const Int &x) { return Int((x * x + c) % n); };
        Int y = 2, q = 1, g = 1, x = 0, ys = 0;
        u64 r = 1;
        const u64 batch = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += batch) {
                ys = y;
                u64 lim = std::min(batch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                if (budget < lim) return 0;
                budget -= lim;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                if (budget == 0) return 0;
                --budget;
                ys = f(ys);
                g = gcd(Int(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_u64_into(u64 n, std::map<Int, unsigned> &out, u64 &budget) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[from_u64(n)] += 1;
        return;
    }
    // Perfect squares defeat rho's x^2+c iteration cheaply; peel them first.
    u64 root = u64(std::sqrt(double(n)));
    for (u64 r = root > 1 ? root - 1 : 1; r <= root + 1; ++r)
        if (r > 1 && r * r == n) {
            factor_u64_into(r, out, budget);
            factor_u64_into(r, out, budget);
            return;
        }
    u64 d = pollard_brent_u64(n, budget);
    if (d == 0)
        fail(errc::factorization_incomplete,
             "cofactor " + std::to_string(n) + " resisted the rho iteration budget");
    factor_u64_into(d, out, budget);
    factor_u64_into(n / d, out, budget);
}

} // namespace

Factorization factorize_u64(u64 n, const Config &cfg) {
    if (n < 1) fail(errc::invalid_parameter, "factorize requires n >= 1");
    std::map<Int, unsigned> acc;
    // Trial division below 1000 clears everything the sieve criteria touch.
    static const std::vector<u64> small = primes_up_to(1000);
    for (u64 p : small) {
        while (n % p == 0) {
            acc[from_u64(p)] += 1;
            n /= p;
        }
        if (p * p > n) break;
    }
    u64 budget = cfg.rho_iteration_budget;
    factor_u64_into(n, acc, budget);
    Factorization f;
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

namespace {

void factor_mpz_into(const Int &n, std::map<Int, unsigned> &out, u64 &budget, bool &certified) {
    if (n == 1) return;
    bool cert = true;
    if (is_prime(n, &cert)) {
        certified = certified && cert;
        out[n] += 1;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        factor_mpz_into(r, out, budget, certified);
        factor_mpz_into(r, out, budget, certified);
        return;
    }
    Int d = pollard_brent_mpz(n, budget);
    if (d == 0)
        fail(errc::factorization_incomplete,
             "cofactor " + to_string(n) + " resisted the rho iteration budget");
    factor_mpz_into(d, out, budget, certified);
    factor_mpz_into(Int(n / d), out, budget, certified);
}

} // namespace

Factorization factorize(const Int &n, const Config &cfg) {
    if (sgn(n) <= 0) fail(errc::invalid_parameter, "factorize requires n >= 1");
    if (fits_u64(n)) return factorize_u64(to_u64(n), cfg);
    std::map<Int, unsigned> acc;
    Int m = n;
    static const std::vector<u64> small = primes_up_to(100000);
    for (u64 p : small) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            acc[from_u64(p)] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    Factorization f;
    u64 budget = cfg.rho_iteration_budget;
    if (fits_u64(m)) {
        factor_u64_into(to_u64(m), acc, budget);
    } else {
        factor_mpz_into(m, acc, budget, f.certified);
    }
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

Int euler_phi(const Factorization &f) {
    Int phi = 1;
    for (const auto &[p, e] : f.factors) phi *= pow_ui(p, e - 1) * (p - 1);
    return phi;
}

namespace {

Int lambda_prime_power(const Int &p, unsigned e) {
    if (p == 2) {
        if (e == 1) return 1;
        if (e == 2) return 2;
        return pow_ui(Int(2), e - 2);
    }
    return pow_ui(p, e - 1) * (p - 1);
}

Int lambda_from_factorization(const Factorization &f) {
    Int l = 1;
    for (const auto &[p, e] : f.factors) l = lcm(l, lambda_prime_power(p, e));
    return l;
}

} // namespace

Int carmichael_lambda(const Int &n, const Config &cfg) {
    if (sgn(n) <= 0) fail(errc::invalid_parameter, "carmichael_lambda requires n >= 1");
    if (n == 1) return 1;
    return lambda_from_factorization(factorize(n, cfg));
}

ModulusContext ModulusContext::create(const Int &n, const Config &cfg) {
    if (n < 2) fail(errc::invalid_parameter, "modulus must be >= 2");
    ModulusContext ctx;
    ctx.n = n;
    ctx.factorization = factorize(n, cfg);
    ctx.lambda = lambda_from_factorization(ctx.factorization);
    ctx.square_free = ctx.factorization.square_free();
    return ctx;
}

Int multiplicative_order(const Int &a, const ModulusContext &ctx,
                         const Factorization &lambda_factors) {
    Int r = a % ctx.n;
    if (sgn(r) < 0) r += ctx.n;
    if (gcd(r, ctx.n) != 1)
        fail(errc::non_unit, to_string(a) + " is not a unit modulo " + to_string(ctx.n));
    // Divisor descent: start from lambda(n) and strip prime factors of the
    // exponent while the power stays at 1.
    Int T = ctx.lambda;
    for (const auto &[p, e] : lambda_factors.factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (T % p != 0) break;
            Int candidate = T / p;
            if (powm(r, candidate, ctx.n) == 1)
                T = candidate;
            else
                break;
        }
    }
    return T;
}

Int multiplicative_order(const Int &a, const ModulusContext &ctx, const Config &cfg) {
    return multiplicative_order(a, ctx, factorize(ctx.lambda, cfg));
}

Int multiplicative_order(const Int &a, const Int &n, const Config &cfg) {
    return multiplicative_order(a, ModulusContext::create(n, cfg), cfg);
}

KorseltCertificate korselt_check(const Int &n, const Config &cfg) {
    if (n < 2) fail(errc::invalid_parameter, "korselt_check requires n >= 2");
    KorseltCertificate cert;
    cert.n = n;
    Factorization f = factorize(n, cfg);
    cert.certified = f.certified;
    cert.composite = !(f.factors.size() == 1 && f.factors[0].second == 1);
    cert.square_free = f.square_free();
    Int nm1 = n - 1;
    bool all_divide = true;
    for (const auto &[p, e] : f.factors) {
        bool divides = nm1 % (p - 1) == 0;
        cert.divisibility.emplace_back(p, divides);
        all_divide = all_divide && divides;
    }
    cert.is_carmichael = cert.composite && cert.square_free && all_divide;
    return cert;
}

std::vector<Int> cyclic_subgroup(const Int &p, const Int &q) {
    if (q < 2 || !is_prime(q)) fail(errc::invalid_parameter, "q must be prime");
    if (sgn(p) >= 0 && p % q == 0)
        fail(errc::invalid_parameter,
             "degenerate modulus: " + to_string(q) + " divides " + to_string(p));
    std::vector<Int> orbit{1};
    Int r = p % q;
    if (sgn(r) < 0) r += q;
    Int cur = r;
    while (cur != 1) {
        orbit.push_back(cur);
        cur = cur * r % q;
    }
    return orbit;
}

bool generates_full_group(const std::vector<Int> &S, const Int &n, const Config &cfg) {
    if (n < 2) fail(errc::invalid_parameter, "modulus must be >= 2");
    std::vector<Int> gens;
    for (const Int &s : S) {
        Int r = s % n;
        if (sgn(r) < 0) r += n;
        if (gcd(r, n) != 1)
            fail(errc::non_unit, to_string(s) + " is not a unit modulo " + to_string(n));
        gens.push_back(r);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Int phi = euler_phi(factorize(n, cfg));
    if (phi > from_u64(cfg.closure_budget))
        fail(errc::resource_budget, "group order " + to_string(phi) +
                                        " exceeds the closure budget of " +
                                        std::to_string(cfg.closure_budget));
    // Literal closure: a finite subsemigroup containing 1 is a subgroup, so
    // products alone suffice.
    std::set<Int> seen{Int(1)};
    std::vector<Int> frontier{Int(1)};
    for (const Int &g : gens)
        if (seen.insert(g).second) frontier.push_back(g);
    while (!frontier.empty()) {
        std::vector<Int> next;
        for (const Int &x : frontier)
            for (const Int &g : gens) {
                Int y = x * g % n;
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return from_u64(seen.size()) == phi;
}

} // namespace dcl
