#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dcl/kernels.hpp"
#include "dcl/transform.hpp"

using namespace dcl;

TEST_CASE("edge gcd kernels agree") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t n = 2 + rng() % 40;
        std::vector<Int> labels(n);
        for (auto &x : labels) x = from_u64(1 + rng() % 1000);
        std::vector<Edge> edges;
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b)
                if (rng() % 100 < 25) edges.push_back({a, b});
        auto serial = kernels::edge_gcd_violations_serial(labels, edges);
        auto parallel = kernels::edge_gcd_violations(labels, edges);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].edge == parallel[i].edge);
            CHECK(serial[i].gcd == parallel[i].gcd);
        }
    }
}

TEST_CASE("power identity kernels agree and hold") {
    CHECK(kernels::power_identity_holds_serial(40, 3));
    CHECK(kernels::power_identity_holds(40, 3));
}

TEST_CASE("carmichael scans agree and match the known prefix") {
    auto serial = kernels::carmichael_scan_serial(3000);
    auto parallel = kernels::carmichael_scan(3000);
    CHECK(serial == parallel);
    CHECK(serial == std::vector<std::uint64_t>{561, 1105, 1729, 2465, 2821});
    CHECK(kernels::carmichael_scan(500).empty());
}

TEST_CASE("order profile kernels agree") {
    ModulusContext ctx = ModulusContext::create(Int(561));
    std::vector<Int> labels{Int(2), Int(5), Int(10), Int(50), Int(560)};
    auto serial = kernels::order_profile_serial(labels, ctx);
    auto parallel = kernels::order_profile(labels, ctx);
    CHECK(serial == parallel);
}

TEST_CASE("preservation scan kernels agree on hits and misses") {
    auto images_for = [](const TransformSpec &spec, std::uint64_t bound) {
        std::vector<Int> images(bound + 1);
        for (std::uint64_t x = 1; x <= bound; ++x) images[x] = apply(spec, from_u64(x));
        return images;
    };
    for (std::uint64_t bound : {2ull, 3ull, 10ull, 57ull, 200ull}) {
        for (auto spec : {TransformSpec::power(2), TransformSpec::additive_shift(Int(1)),
                          TransformSpec::additive_shift(Int(6)), TransformSpec::affine(Int(2))}) {
            auto images = images_for(spec, bound);
            auto serial = kernels::preservation_scan_serial(images, bound);
            auto parallel = kernels::preservation_scan(images, bound);
            CHECK(serial.failed == parallel.failed);
            CHECK(serial.a == parallel.a);
            CHECK(serial.b == parallel.b);
            CHECK(serial.trials == parallel.trials);
        }
    }
    // The documented scan order makes (3,5) the first additive-shift hit.
    auto images = images_for(TransformSpec::additive_shift(Int(1)), 10);
    auto scan = kernels::preservation_scan_serial(images, 10);
    REQUIRE(scan.failed);
    CHECK(scan.a == 3);
    CHECK(scan.b == 5);
}
