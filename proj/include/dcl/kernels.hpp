#pragma once

#include <cstdint>
#include <vector>

#include "dcl/bigint.hpp"
#include "dcl/config.hpp"
#include "dcl/graph.hpp"
#include "dcl/nt.hpp"

// Data-parallel inner loops, each in two builds: a plain serial reference and
// an OpenMP variant. The library calls the OpenMP build; the serial build is
// the test oracle and the baseline for tools/bench.

namespace dcl::kernels {

struct EdgeViolation {
    Edge edge;
    Int gcd;
};

// Every edge whose endpoint labels share a factor, sorted by edge.
std::vector<EdgeViolation> edge_gcd_violations_serial(const std::vector<Int> &labels,
                                                      const std::vector<Edge> &edges);
std::vector<EdgeViolation> edge_gcd_violations(const std::vector<Int> &labels,
                                               const std::vector<Edge> &edges);

// Exhaustive check of gcd(a^k, b^k) == gcd(a,b)^k over 1 <= a,b <= amax,
// 1 <= k <= kmax.
bool power_identity_holds_serial(std::uint64_t amax, unsigned kmax);
bool power_identity_holds(std::uint64_t amax, unsigned kmax);

// Carmichael numbers <= limit, ascending (Korselt certificates over a
// word-sized trial-division factorizer).
std::vector<std::uint64_t> carmichael_scan_serial(std::uint64_t limit);
std::vector<std::uint64_t> carmichael_scan(std::uint64_t limit);

// Multiplicative order of every label modulo ctx.n.
std::vector<Int> order_profile_serial(const std::vector<Int> &labels, const ModulusContext &ctx,
                                      const Config &cfg = Config::defaults());
std::vector<Int> order_profile(const std::vector<Int> &labels, const ModulusContext &ctx,
                               const Config &cfg = Config::defaults());

// First coprime pair whose images collide, in the documented scan order:
// pairs 2 <= a < b <= bound by increasing difference then increasing a,
// followed by the pairs containing 1. images[x] = g(x) for 1 <= x <= bound.
struct PreservationScan {
    bool failed = false;
    std::uint64_t a = 0, b = 0; // valid when failed
    std::uint64_t trials = 0;   // coprime pairs tested in scan order
};

PreservationScan preservation_scan_serial(const std::vector<Int> &images, std::uint64_t bound);
PreservationScan preservation_scan(const std::vector<Int> &images, std::uint64_t bound);

} // namespace dcl::kernels
