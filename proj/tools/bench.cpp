// Compares the serial reference kernels against the OpenMP builds.
// Usage: dcl-bench [scale]   (scale 1 = quick, 2 = default, 3 = heavy)

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dcl/kernels.hpp"
#include "dcl/nt.hpp"
#include "dcl/transform.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <class F> double time_ms(F &&fn) {
    auto start = clock_type::now();
    fn();
    auto stop = clock_type::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const std::string &name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main(int argc, char **argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 2;
    if (scale < 1) scale = 1;

#ifdef _OPENMP
    std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif
    std::printf("%-28s %13s %13s   speedup\n", "kernel", "serial", "parallel");

    {
        std::uint64_t limit = scale >= 3 ? 1'000'000 : scale == 2 ? 300'000 : 100'000;
        std::vector<std::uint64_t> a, b;
        double s = time_ms([&] { a = dcl::kernels::carmichael_scan_serial(limit); });
        double p = time_ms([&] { b = dcl::kernels::carmichael_scan(limit); });
        row("carmichael_scan(" + std::to_string(limit) + ")", s, p);
        if (a != b) std::printf("  MISMATCH!\n");
    }

    {
        std::uint64_t amax = scale >= 3 ? 400 : 200;
        bool a = false, b = false;
        double s = time_ms([&] { a = dcl::kernels::power_identity_holds_serial(amax, 5); });
        double p = time_ms([&] { b = dcl::kernels::power_identity_holds(amax, 5); });
        row("power_identity(" + std::to_string(amax) + ",5)", s, p);
        if (a != b) std::printf("  MISMATCH!\n");
    }

    {
        std::uint64_t bound = scale >= 3 ? 3000 : scale == 2 ? 1500 : 600;
        auto spec = dcl::TransformSpec::power(2);
        std::vector<dcl::Int> images(bound + 1);
        for (std::uint64_t x = 1; x <= bound; ++x) images[x] = dcl::apply(spec, dcl::from_u64(x));
        dcl::kernels::PreservationScan a, b;
        double s = time_ms([&] { a = dcl::kernels::preservation_scan_serial(images, bound); });
        double p = time_ms([&] { b = dcl::kernels::preservation_scan(images, bound); });
        row("preservation_scan(" + std::to_string(bound) + ")", s, p);
        if (a.failed != b.failed || a.a != b.a || a.b != b.b) std::printf("  MISMATCH!\n");
    }

    {
        dcl::Int n = 104729 * dcl::Int(104723);
        auto ctx = dcl::ModulusContext::create(n);
        std::mt19937_64 rng(7);
        std::vector<dcl::Int> labels;
        while (labels.size() < std::size_t(scale >= 3 ? 4000 : 1500)) {
            dcl::Int x = dcl::from_u64(rng() % 1'000'000'000 + 2);
            if (dcl::gcd(x, n) == 1) labels.push_back(x);
        }
        std::vector<dcl::Int> a, b;
        double s = time_ms([&] { a = dcl::kernels::order_profile_serial(labels, ctx); });
        double p = time_ms([&] { b = dcl::kernels::order_profile(labels, ctx); });
        row("order_profile(" + std::to_string(labels.size()) + ")", s, p);
        if (a != b) std::printf("  MISMATCH!\n");
    }

    {
        // One dense frame of squared labels.
        std::uint32_t nv = scale >= 3 ? 4000 : 2000;
        std::vector<dcl::Int> labels(nv);
        for (std::uint32_t v = 0; v < nv; ++v)
            labels[v] = dcl::pow_ui(dcl::from_u64(v + 2), 64);
        std::vector<dcl::Edge> edges;
        for (std::uint32_t v = 0; v + 1 < nv; ++v) edges.push_back({v, v + 1});
        std::vector<dcl::kernels::EdgeViolation> a, b;
        double s = time_ms([&] { a = dcl::kernels::edge_gcd_violations_serial(labels, edges); });
        double p = time_ms([&] { b = dcl::kernels::edge_gcd_violations(labels, edges); });
        row("edge_gcd(" + std::to_string(edges.size()) + " edges)", s, p);
        if (a.size() != b.size()) std::printf("  MISMATCH!\n");
    }

    return 0;
}
