#include "dcl/evolution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "dcl/error.hpp"
#include "dcl/sieve.hpp"

namespace dcl {

namespace {

void require_total(const Graph &g, const Labeling &f0) {
    if (f0.size() != g.vertex_count())
        fail(errc::invalid_parameter, "labeling covers " + std::to_string(f0.size()) +
                                          " vertices but the graph has " +
                                          std::to_string(g.vertex_count()));
}

std::vector<Int> residues_of(const Labeling &f0, const Int &n) {
    std::vector<Int> r;
    r.reserve(f0.size());
    for (VertexId v = 0; v < f0.size(); ++v) {
        Int x = f0[v] % n;
        if (sgn(x) < 0) x += n;
        r.push_back(x);
    }
    return r;
}

void require_units(const std::vector<Int> &residues, const Int &n) {
    for (std::size_t v = 0; v < residues.size(); ++v)
        if (gcd(residues[v], n) != 1)
            fail(errc::non_unit, "vertex " + std::to_string(v) + " label is not a unit modulo " +
                                     to_string(n));
}

// First pair of equal values, if any.
std::optional<std::pair<VertexId, VertexId>> find_collision(const std::vector<Int> &values) {
    std::map<Int, VertexId> seen;
    for (VertexId v = 0; v < VertexId(values.size()); ++v) {
        auto [it, fresh] = seen.emplace(values[v], v);
        if (!fresh) return std::make_pair(it->second, v);
    }
    return std::nullopt;
}

} // namespace

Frame evolve(const Graph &g, const Labeling &f0, const TransformSpec &spec, std::uint64_t t,
             Representation rep, const Int &modulus, const Config &cfg) {
    require_total(g, f0);
    Frame frame;
    frame.t = t;
    frame.rep = rep;
    switch (rep) {
    case Representation::exact: {
        frame.exact.reserve(f0.size());
        if (spec.kind() == MapKind::prime_index) {
            for (VertexId v = 0; v < f0.size(); ++v) {
                Int x = f0[v];
                for (std::uint64_t i = 0; i < t; ++i) x = apply(spec, x, cfg);
                frame.exact.push_back(std::move(x));
            }
        } else {
            if (spec.kind() == MapKind::modular_power)
                require_units(residues_of(f0, spec.modulus()), spec.modulus());
            for (VertexId v = 0; v < f0.size(); ++v)
                frame.exact.push_back(iterate_closed_form(spec, f0[v], t, cfg));
        }
        return frame;
    }
    case Representation::power_form: {
        if (spec.kind() != MapKind::power)
            fail(errc::invalid_parameter,
                 "power-form representation is only defined for power maps");
        Int e;
        mpz_pow_ui(e.get_mpz_t(), Int(spec.exponent()).get_mpz_t(),
                   static_cast<unsigned long>(t));
        for (VertexId v = 0; v < f0.size(); ++v) frame.powers.push_back({f0[v], e});
        return frame;
    }
    case Representation::modular: {
        if (modulus < 2) fail(errc::invalid_parameter, "modular representation requires n >= 2");
        if (spec.kind() == MapKind::prime_index)
            fail(errc::invalid_parameter,
                 "prime_index does not commute with reduction mod n; use exact");
        frame.modulus = modulus;
        frame.residues = residues_of(f0, modulus);
        if (spec.kind() == MapKind::modular_power)
            require_units(frame.residues, spec.modulus());
        for (std::uint64_t i = 0; i < t; ++i)
            for (auto &r : frame.residues) {
                if (sgn(r) == 0) r = modulus; // representative of the 0 class, kept >= 1
                r = apply(spec, r, cfg) % modulus;
            }
        return frame;
    }
    }
    fail(errc::invalid_parameter, "unknown representation");
}

namespace {

StepReport check_exact_frame(const Graph &g, const std::vector<Int> &labels, std::uint64_t t,
                             CheckMode mode) {
    StepReport step;
    step.t = t;
    step.mode = mode;
    step.violations = kernels::edge_gcd_violations(labels, g.edges());
    step.collision = find_collision(labels);
    step.ok = step.violations.empty() && !step.collision;
    return step;
}

void absorb(DclRun &run, StepReport step, const RunOptions &opts) {
    if (step.collision && opts.allow_modular_collisions && step.mode == CheckMode::modular) {
        step.collision_downgraded = true;
        step.ok = step.violations.empty();
    }
    bool failed = !step.ok;
    if (failed && run.status == RunStatus::verified) {
        run.violation_t = step.t;
        if (!step.violations.empty()) {
            run.status = RunStatus::gcd_violation;
            run.violation_edge = step.violations.front().edge;
            run.violation_gcd = step.violations.front().gcd;
        } else {
            run.status = RunStatus::injectivity_violation;
            run.violation_collision = step.collision;
        }
    }
    run.steps.push_back(std::move(step));
}

} // namespace

DclRun verify_run(const Graph &g, const Labeling &f0, const TransformSpec &spec, std::uint64_t T,
                  const RunOptions &opts, const Config &cfg) {
    require_total(g, f0);
    for (VertexId v = 0; v < f0.size(); ++v)
        if (sgn(f0[v]) <= 0)
            fail(errc::invalid_parameter, "labels must be positive integers");
    DclRun run;
    run.horizon = T;

    switch (spec.kind()) {
    case MapKind::power: {
        // gcd(a^(k^t), b^(k^t)) = gcd(a,b)^(k^t), so one base check covers
        // every horizon; injectivity is preserved by x^k on N.
        StepReport base = check_exact_frame(g, f0.values, 0, CheckMode::base_gcd);
        absorb(run, base, opts);
        if (run.status == RunStatus::verified)
            for (std::uint64_t t = 1; t <= T; ++t) {
                StepReport step;
                step.t = t;
                step.mode = CheckMode::base_gcd;
                run.steps.push_back(step);
            }
        break;
    }
    case MapKind::prime_index: {
        StepReport base = check_exact_frame(g, f0.values, 0, CheckMode::exact);
        absorb(run, base, opts);
        if (run.status == RunStatus::verified)
            for (std::uint64_t t = 1; t <= T; ++t) {
                // Frame t consists of distinct primes (injectivity is kept by
                // strict monotonicity of x -> p_x), so every edge gcd is 1.
                StepReport step;
                step.t = t;
                step.mode = CheckMode::structural;
                run.steps.push_back(step);
            }
        break;
    }
    case MapKind::affine:
    case MapKind::additive_shift: {
        std::vector<Int> labels = f0.values;
        for (std::uint64_t t = 0; t <= T; ++t) {
            if (t > 0)
                for (auto &x : labels) x = apply(spec, x, cfg);
            absorb(run, check_exact_frame(g, labels, t, CheckMode::exact), opts);
            if (run.status != RunStatus::verified) break;
        }
        break;
    }
    case MapKind::modular_power: {
        const Int &m = spec.modulus();
        std::vector<Int> residues = residues_of(f0, m);
        require_units(residues, m);
        for (std::uint64_t t = 0; t <= T; ++t) {
            if (t > 0)
                for (auto &r : residues) r = powm(r, from_u64(spec.exponent()), m);
            absorb(run, check_exact_frame(g, residues, t, CheckMode::modular), opts);
            if (run.status != RunStatus::verified) break;
        }
        break;
    }
    }
    run.structural_guarantee =
        run.status == RunStatus::verified && spec.declared_coprime_preserving();
    return run;
}

namespace {

BoundednessReport unbounded_witness(const Labeling &f0, const TransformSpec &spec,
                                    const Config &cfg) {
    BoundednessReport report;
    report.kind = Boundedness::unbounded;
    // Pick the vertex with the smallest label >= 2 (labels are injective, so
    // at most one vertex carries 1 and every other trajectory grows).
    VertexId best = 0;
    bool found = false;
    for (VertexId v = 0; v < f0.size(); ++v) {
        if (f0[v] < 2) continue;
        if (!found || f0[v] < f0[best]) {
            best = v;
            found = true;
        }
    }
    report.witness_vertex = best;
    Int x = f0[best];
    report.witness_trajectory.push_back(x);
    for (int i = 0; i < 4; ++i) {
        if (spec.kind() == MapKind::power &&
            bit_length(x) * spec.exponent() > cfg.exact_label_bits)
            break;
        try {
            x = apply(spec, x, cfg);
        } catch (const error &) {
            break; // sieve budget; the prefix already shows strict growth
        }
        report.witness_trajectory.push_back(x);
    }
    return report;
}

} // namespace

BoundednessReport classify_boundedness(const Labeling &f0, const TransformSpec &spec,
                                       std::uint64_t probe, const Config &cfg) {
    if (probe < 1) fail(errc::invalid_parameter, "probe budget must be >= 1");
    if (f0.size() == 0) fail(errc::invalid_parameter, "empty labeling");
    BoundednessReport report;
    switch (spec.kind()) {
    case MapKind::power: {
        bool any_growing = false;
        for (VertexId v = 0; v < f0.size(); ++v) any_growing = any_growing || f0[v] >= 2;
        if (spec.exponent() == 1 || !any_growing) {
            report.kind = Boundedness::bounded;
            report.period = 1;
            report.transient = 0;
            report.label_set = f0.values;
            std::sort(report.label_set.begin(), report.label_set.end());
            return report;
        }
        return unbounded_witness(f0, spec, cfg);
    }
    case MapKind::prime_index:
    case MapKind::affine:
    case MapKind::additive_shift:
        // p_x > x, px+1 > x, x+c > x: strictly increasing, never periodic.
        return unbounded_witness(f0, spec, cfg);
    case MapKind::modular_power: {
        const Int &m = spec.modulus();
        std::vector<Int> residues = residues_of(f0, m);
        require_units(residues, m);
        std::set<Int> label_set;
        Int period = 1;
        std::uint64_t transient = 0;
        for (const Int &r0 : residues) {
            std::map<Int, std::uint64_t> first_visit;
            Int r = r0;
            std::uint64_t step = 0;
            while (true) {
                auto [it, fresh] = first_visit.emplace(r, step);
                if (!fresh) {
                    std::uint64_t tail = it->second;
                    Int cycle_len = from_u64(step - tail);
                    period = lcm(period, cycle_len);
                    transient = std::max(transient, tail);
                    break;
                }
                label_set.insert(r);
                if (step >= probe) {
                    report.kind = Boundedness::inconclusive;
                    return report;
                }
                r = powm(r, from_u64(spec.exponent()), m);
                ++step;
            }
        }
        report.kind = Boundedness::bounded;
        report.period = period;
        report.transient = transient;
        report.label_set.assign(label_set.begin(), label_set.end());
        return report;
    }
    }
    report.kind = Boundedness::inconclusive;
    return report;
}

std::vector<Int> vertex_order_profile(const Labeling &f0, const Int &n, const Config &cfg) {
    std::vector<Int> residues = residues_of(f0, n);
    require_units(residues, n);
    ModulusContext ctx = ModulusContext::create(n, cfg);
    return kernels::order_profile(residues, ctx, cfg);
}

PeriodReport graph_period(const Labeling &f0, const Int &n, const Config &cfg) {
    std::vector<Int> residues = residues_of(f0, n);
    require_units(residues, n);
    ModulusContext ctx = ModulusContext::create(n, cfg);
    PeriodReport report;
    report.modulus = n;
    report.vertex_orders = kernels::order_profile(residues, ctx, cfg);
    report.lambda_graph = 1;
    for (const Int &T : report.vertex_orders) report.lambda_graph = lcm(report.lambda_graph, T);
    report.lambda = ctx.lambda;
    report.divides = report.lambda % report.lambda_graph == 0;
    report.generates = generates_full_group(residues, n, cfg);
    report.equality = report.lambda_graph == report.lambda;
    return report;
}

std::optional<Labeling> find_generating_labeling(const Graph &g, const Int &n, std::uint64_t seed,
                                                 const Config &cfg) {
    if (n < 2) fail(errc::invalid_parameter, "modulus must be >= 2");
    ModulusContext ctx = ModulusContext::create(n, cfg);
    Factorization lambda_factors = factorize(ctx.lambda, cfg);

    std::vector<Int> pool;
    for (Int u = 1; u < n && pool.size() < 100'000; ++u)
        if (gcd(u, n) == 1) pool.push_back(u);
    if (pool.size() < g.vertex_count()) return std::nullopt;
    if (seed != 0) {
        std::uint64_t state = seed;
        auto next = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (std::size_t i = pool.size(); i > 1; --i)
            std::swap(pool[i - 1], pool[next() % i]);
    }

    std::vector<Int> chosen(g.vertex_count(), 0);
    std::vector<bool> used(pool.size(), false);
    std::uint64_t budget = 200'000;

    auto order_of = [&](const Int &u) { return multiplicative_order(u, ctx, lambda_factors); };

    std::function<bool(VertexId)> dfs = [&](VertexId v) -> bool {
        if (v == g.vertex_count()) {
            // lcm-of-orders pre-filter before the closure test.
            Int l = 1;
            for (const Int &x : chosen) l = lcm(l, order_of(x));
            if (l != ctx.lambda) return false;
            return generates_full_group(chosen, n, cfg);
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (used[i]) continue;
            bool compatible = true;
            for (VertexId w : g.neighbors(v))
                if (w < v && gcd(pool[i], chosen[w]) != 1) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            if (budget == 0) return false;
            --budget;
            used[i] = true;
            chosen[v] = pool[i];
            if (dfs(v + 1)) return true;
            used[i] = false;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    Labeling f;
    f.values = chosen;
    return f;
}

bool verify_modular_period(const Graph &g, const Labeling &f0, const Int &n, const Int &T,
                           const Config &cfg) {
    (void)cfg;
    require_total(g, f0);
    if (T < 1) fail(errc::invalid_parameter, "claimed period must be >= 1");
    std::vector<Int> residues = residues_of(f0, n);
    require_units(residues, n);
    for (const Int &r : residues)
        if (powm(r, T, n) != 1) return false;
    return true;
}

} // namespace dcl
