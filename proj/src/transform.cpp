#include "dcl/transform.hpp"

#include <map>
#include <set>

#include "dcl/error.hpp"
#include "dcl/kernels.hpp"
#include "dcl/nt.hpp"
#include "dcl/sieve.hpp"

namespace dcl {

std::string map_kind_name(MapKind kind) {
    switch (kind) {
    case MapKind::power: return "power";
    case MapKind::prime_index: return "prime_index";
    case MapKind::modular_power: return "modular_power";
    case MapKind::affine: return "affine";
    case MapKind::additive_shift: return "additive_shift";
    }
    return "?";
}

TransformSpec TransformSpec::power(std::uint32_t k) {
    if (k < 1) fail(errc::invalid_parameter, "power map requires k >= 1");
    TransformSpec s;
    s.kind_ = MapKind::power;
    s.k_ = k;
    return s;
}

TransformSpec TransformSpec::prime_index() {
    TransformSpec s;
    s.kind_ = MapKind::prime_index;
    return s;
}

TransformSpec TransformSpec::modular_power(std::uint32_t k, Int m) {
    if (k < 1) fail(errc::invalid_parameter, "modular power map requires k >= 1");
    if (m < 2) fail(errc::invalid_parameter, "modular power map requires m >= 2");
    TransformSpec s;
    s.kind_ = MapKind::modular_power;
    s.k_ = k;
    s.m_ = std::move(m);
    return s;
}

TransformSpec TransformSpec::affine(Int p) {
    if (!is_prime(p)) fail(errc::invalid_parameter, "affine map requires a prime p");
    TransformSpec s;
    s.kind_ = MapKind::affine;
    s.p_ = std::move(p);
    return s;
}

TransformSpec TransformSpec::additive_shift(Int c) {
    if (c < 1) fail(errc::invalid_parameter, "additive shift requires c >= 1");
    TransformSpec s;
    s.kind_ = MapKind::additive_shift;
    s.c_ = std::move(c);
    return s;
}

Preservation TransformSpec::declared_preservation() const {
    switch (kind_) {
    case MapKind::power:
    case MapKind::prime_index: return Preservation::always;
    case MapKind::modular_power: return Preservation::units_only;
    case MapKind::affine:
    case MapKind::additive_shift: return Preservation::none;
    }
    return Preservation::none;
}

std::string TransformSpec::describe() const {
    switch (kind_) {
    case MapKind::power: return "x^" + std::to_string(k_);
    case MapKind::prime_index: return "p_x";
    case MapKind::modular_power:
        return "x^" + std::to_string(k_) + " mod " + to_string(m_);
    case MapKind::affine: return to_string(p_) + "x+1";
    case MapKind::additive_shift: return "x+" + to_string(c_);
    }
    return "?";
}

Int apply(const TransformSpec &spec, const Int &x, const Config &cfg) {
    if (x < 1) fail(errc::invalid_parameter, "transform inputs must be >= 1");
    switch (spec.kind()) {
    case MapKind::power: return pow_ui(x, spec.exponent());
    case MapKind::prime_index: {
        if (!fits_u64(x))
            fail(errc::resource_budget, "prime index " + to_string(x) + " exceeds any sieve budget");
        return from_u64(nth_prime(to_u64(x), cfg));
    }
    case MapKind::modular_power: {
        Int r = powm(x % spec.modulus(), from_u64(spec.exponent()), spec.modulus());
        if (sgn(r) == 0)
            fail(errc::non_unit, "residue 0 from non-unit input " + to_string(x) + " modulo " +
                                     to_string(spec.modulus()));
        return r;
    }
    case MapKind::affine: return spec.prime() * x + 1;
    case MapKind::additive_shift: return x + spec.shift();
    }
    fail(errc::invalid_parameter, "unknown transform kind");
}

namespace {

// k^t as a machine word, or nullopt if it cannot possibly satisfy the label
// cap (conservative: any exponent above cap bits fails for bases >= 2).
std::optional<std::uint64_t> small_power(std::uint64_t k, std::uint64_t t, std::uint64_t limit) {
    std::uint64_t e = 1;
    for (std::uint64_t i = 0; i < t; ++i) {
        if (e > limit / k) return std::nullopt;
        e *= k;
    }
    return e;
}

} // namespace

Int iterate_closed_form(const TransformSpec &spec, const Int &x0, std::uint64_t t,
                        const Config &cfg) {
    if (x0 < 1) fail(errc::invalid_parameter, "transform inputs must be >= 1");
    switch (spec.kind()) {
    case MapKind::power: {
        if (x0 == 1 || spec.exponent() == 1 || t == 0) return x0;
        auto e = small_power(spec.exponent(), t, cfg.exact_label_bits);
        if (!e || bit_length(x0) * *e > cfg.exact_label_bits)
            fail(errc::overflow_policy,
                 "materializing " + to_string(x0) + "^(" + std::to_string(spec.exponent()) + "^" +
                     std::to_string(t) + ") exceeds the exact-size cap; use the power-form "
                     "representation");
        return pow_ui(x0, static_cast<unsigned long>(*e));
    }
    case MapKind::affine: {
        // g^t(x) = p^t x + c_t with c_t = (p^t - 1)/(p - 1).
        if (t * bit_length(spec.prime()) > cfg.exact_label_bits)
            fail(errc::overflow_policy, "affine horizon too deep for the exact-size cap");
        Int pt = pow_ui(spec.prime(), static_cast<unsigned long>(t));
        Int ct = (pt - 1) / (spec.prime() - 1);
        return pt * x0 + ct;
    }
    case MapKind::modular_power: {
        const Int &m = spec.modulus();
        Int r = x0 % m;
        if (sgn(r) < 0) r += m;
        if (t == 0) return r;
        if (t > 64 && gcd(r, m) == 1) {
            // Unit fast path: reduce the tower exponent k^t modulo lambda(m);
            // valid because ord(r) divides lambda(m).
            Int lambda = carmichael_lambda(m, cfg);
            Int e = powm(from_u64(spec.exponent()), from_u64(t), lambda);
            Int out = powm(r, e, m);
            if (sgn(out) == 0) out = m; // cannot happen for units; defensive normalization
            return out;
        }
        for (std::uint64_t i = 0; i < t; ++i) {
            r = powm(r, from_u64(spec.exponent()), m);
            if (sgn(r) == 0)
                fail(errc::non_unit, "residue 0 from non-unit input " + to_string(x0) +
                                         " modulo " + to_string(m));
        }
        return r;
    }
    case MapKind::additive_shift: return x0 + spec.shift() * from_u64(t);
    case MapKind::prime_index:
        fail(errc::invalid_parameter,
             "prime_index has no closed form; iterate apply or verify structurally");
    }
    fail(errc::invalid_parameter, "unknown transform kind");
}

MapVerdict sample_coprime_preservation(const TransformSpec &spec, std::uint64_t bound,
                                       const Config &cfg) {
    if (bound < 2) fail(errc::invalid_parameter, "preservation box requires bound >= 2");
    std::vector<Int> images(bound + 1);
    for (std::uint64_t x = 1; x <= bound; ++x) {
        images[x] = apply(spec, from_u64(x), cfg);
    }
    kernels::PreservationScan scan = kernels::preservation_scan(images, bound);
    MapVerdict verdict;
    verdict.trials = scan.trials;
    verdict.preserved = !scan.failed;
    if (scan.failed) {
        Counterexample ce;
        ce.a = from_u64(scan.a);
        ce.b = from_u64(scan.b);
        ce.ga = images[scan.a];
        ce.gb = images[scan.b];
        ce.witness = gcd(ce.ga, ce.gb);
        verdict.counterexample = ce;
    }
    return verdict;
}

AffineHypothesisReport affine_edge_hypothesis(const Graph &g, const Labeling &f0, const Int &p,
                                              const Config &cfg) {
    if (!is_prime(p)) fail(errc::invalid_parameter, "affine map requires a prime p");
    VerifyReport vr = verify_coprime(g, f0);
    if (!vr.injective) fail(errc::invalid_parameter, "affine hypothesis requires injective f0");

    AffineHypothesisReport report;
    report.p = p;
    std::map<Int, std::set<Int>> subgroup_cache;
    for (const Edge &e : g.edges()) {
        AffineEdgeEntry entry;
        entry.edge = e;
        entry.a = f0[e.a] < f0[e.b] ? f0[e.a] : f0[e.b];
        entry.b = f0[e.a] < f0[e.b] ? f0[e.b] : f0[e.a];
        entry.d = entry.b - entry.a;
        bool indeterminate = false;
        for (const auto &[q, exp] : factorize(entry.d, cfg).factors) {
            AffineDivisorCheck check;
            check.q = q;
            if (q == p) {
                check.status = DivisorStatus::skipped_q_equals_p;
                indeterminate = true;
            } else if ((p - 1) % q == 0) {
                check.status = DivisorStatus::skipped_q_divides_p_minus_1;
                indeterminate = true;
            } else {
                check.status = DivisorStatus::checked;
                check.residue = ((p - 1) * entry.a + 1) % q;
                auto [it, fresh] = subgroup_cache.try_emplace(q);
                if (fresh) {
                    auto orbit = cyclic_subgroup(p, q);
                    it->second.insert(orbit.begin(), orbit.end());
                }
                check.member = it->second.count(check.residue) > 0;
                if (check.member) report.overall = false;
            }
            entry.divisors.push_back(std::move(check));
        }
        if (indeterminate) report.fallback.push_back(e);
        report.edges.push_back(std::move(entry));
    }
    return report;
}

} // namespace dcl
