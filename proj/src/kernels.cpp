#include "dcl/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dcl/sieve.hpp"

namespace dcl::kernels {

namespace {

using u64 = std::uint64_t;

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

std::vector<EdgeViolation> edge_gcd_violations_serial(const std::vector<Int> &labels,
                                                      const std::vector<Edge> &edges) {
    std::vector<EdgeViolation> out;
    for (const Edge &e : edges) {
        Int d = gcd(labels[e.a], labels[e.b]);
        if (d > 1) out.push_back({e, d});
    }
    return out;
}

std::vector<EdgeViolation> edge_gcd_violations(const std::vector<Int> &labels,
                                               const std::vector<Edge> &edges) {
    // Fill a dense gcd slot per edge in parallel, collect serially so the
    // violation order matches the serial reference exactly.
    std::vector<Int> gcds(edges.size());
    const std::int64_t m = std::int64_t(edges.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i)
        gcds[std::size_t(i)] = gcd(labels[edges[std::size_t(i)].a], labels[edges[std::size_t(i)].b]);
    std::vector<EdgeViolation> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (gcds[i] > 1) out.push_back({edges[i], gcds[i]});
    return out;
}

namespace {

bool power_identity_row(u64 a, u64 amax, const std::vector<Int> &powk, unsigned /*k*/) {
    for (u64 b = 1; b <= amax; ++b) {
        u64 g = gcd_u64(a, b);
        if (gcd(powk[a], powk[b]) != powk[g]) return false;
    }
    return true;
}

std::vector<Int> power_table(u64 amax, unsigned k) {
    std::vector<Int> powk(amax + 1);
    for (u64 a = 0; a <= amax; ++a) powk[a] = pow_ui(from_u64(a), k);
    return powk;
}

} // namespace

bool power_identity_holds_serial(u64 amax, unsigned kmax) {
    for (unsigned k = 1; k <= kmax; ++k) {
        auto powk = power_table(amax, k);
        for (u64 a = 1; a <= amax; ++a)
            if (!power_identity_row(a, amax, powk, k)) return false;
    }
    return true;
}

bool power_identity_holds(u64 amax, unsigned kmax) {
    bool ok = true;
    for (unsigned k = 1; k <= kmax; ++k) {
        auto powk = power_table(amax, k);
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
        for (std::int64_t a = 1; a <= std::int64_t(amax); ++a)
            ok = ok && power_identity_row(u64(a), amax, powk, k);
        if (!ok) break;
    }
    return ok;
}

namespace {

// Word-sized Korselt test: trial division by the precomputed primes, then
// square-freeness and p-1 | n-1 for every prime factor.
bool korselt_u64(u64 n, const std::vector<u64> &primes) {
    if (n < 9) return false; // smallest Carmichael is 561; tiny n never qualify
    u64 m = n;
    unsigned factor_count = 0;
    for (u64 p : primes) {
        if (p * p > m) break;
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return false; // not square-free
        ++factor_count;
        if ((n - 1) % (p - 1) != 0) return false;
    }
    if (m > 1) {
        ++factor_count;
        if ((n - 1) % (m - 1) != 0) return false;
    }
    return factor_count >= 2; // composite
}

} // namespace

std::vector<u64> carmichael_scan_serial(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    u64 root = u64(std::sqrt(double(limit))) + 2;
    const auto primes = primes_up_to(root);
    for (u64 n = 2; n <= limit; ++n)
        if (korselt_u64(n, primes)) out.push_back(n);
    return out;
}

std::vector<u64> carmichael_scan(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    u64 root = u64(std::sqrt(double(limit))) + 2;
    const auto primes = primes_up_to(root);
    std::vector<std::uint8_t> hit(limit + 1, 0);
#pragma omp parallel for schedule(dynamic, 1024)
    for (std::int64_t n = 2; n <= std::int64_t(limit); ++n)
        hit[std::size_t(n)] = korselt_u64(u64(n), primes) ? 1 : 0;
    for (u64 n = 2; n <= limit; ++n)
        if (hit[n]) out.push_back(n);
    return out;
}

std::vector<Int> order_profile_serial(const std::vector<Int> &labels, const ModulusContext &ctx,
                                      const Config &cfg) {
    Factorization lf = factorize(ctx.lambda, cfg);
    std::vector<Int> orders(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        orders[i] = multiplicative_order(labels[i], ctx, lf);
    return orders;
}

std::vector<Int> order_profile(const std::vector<Int> &labels, const ModulusContext &ctx,
                               const Config &cfg) {
    Factorization lf = factorize(ctx.lambda, cfg);
    std::vector<Int> orders(labels.size());
    const std::int64_t m = std::int64_t(labels.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < m; ++i)
        orders[std::size_t(i)] = multiplicative_order(labels[std::size_t(i)], ctx, lf);
    return orders;
}

namespace {

// Scan order: pairs (a, a+d) with a >= 2, by d ascending then a ascending,
// followed by (1, b) with b ascending. Flattened into one index space.
struct PairOrder {
    u64 bound;
    u64 main_total;
    std::vector<u64> block_start; // block_start[d-1] = first index of block d

    explicit PairOrder(u64 bound) : bound(bound) {
        u64 acc = 0;
        if (bound >= 3)
            for (u64 d = 1; d <= bound - 2; ++d) {
                block_start.push_back(acc);
                acc += bound - d - 1; // a in [2, bound-d]
            }
        main_total = acc;
    }

    u64 total() const { return bound < 2 ? 0 : main_total + (bound - 1); }

    std::pair<u64, u64> pair_at(u64 i) const {
        if (i < main_total) {
            auto it = std::upper_bound(block_start.begin(), block_start.end(), i);
            u64 d = u64(it - block_start.begin()); // 1-based block number
            u64 a = 2 + (i - block_start[d - 1]);
            return {a, a + d};
        }
        return {1, 2 + (i - main_total)};
    }
};

} // namespace

PreservationScan preservation_scan_serial(const std::vector<Int> &images, u64 bound) {
    PairOrder order(bound);
    PreservationScan r;
    for (u64 i = 0; i < order.total(); ++i) {
        auto [a, b] = order.pair_at(i);
        if (gcd_u64(a, b) != 1) continue;
        ++r.trials;
        if (gcd(images[a], images[b]) > 1) {
            r.failed = true;
            r.a = a;
            r.b = b;
            return r;
        }
    }
    return r;
}

PreservationScan preservation_scan(const std::vector<Int> &images, u64 bound) {
    PairOrder order(bound);
    const u64 total = order.total();
    u64 first_fail = total;
#pragma omp parallel for schedule(static) reduction(min : first_fail)
    for (std::int64_t i = 0; i < std::int64_t(total); ++i) {
        auto [a, b] = order.pair_at(u64(i));
        if (gcd_u64(a, b) != 1) continue;
        if (gcd(images[a], images[b]) > 1) first_fail = std::min(first_fail, u64(i));
    }
    PreservationScan r;
    for (u64 i = 0; i <= first_fail && i < total; ++i)
        if (gcd_u64(order.pair_at(i).first, order.pair_at(i).second) == 1) ++r.trials;
    if (first_fail < total) {
        r.failed = true;
        auto [a, b] = order.pair_at(first_fail);
        r.a = a;
        r.b = b;
    }
    return r;
}

} // namespace dcl::kernels
