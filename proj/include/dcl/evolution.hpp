#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dcl/bigint.hpp"
#include "dcl/config.hpp"
#include "dcl/graph.hpp"
#include "dcl/kernels.hpp"
#include "dcl/labeling.hpp"
#include "dcl/nt.hpp"
#include "dcl/transform.hpp"

namespace dcl {

enum class Representation { exact, power_form, modular };

// base^exponent without materializing it; under power(k) evolution the
// exponent at time t is k^t.
struct PowerFormLabel {
    Int base;
    Int exponent;
};

struct Frame {
    std::uint64_t t = 0;
    Representation rep = Representation::exact;
    std::vector<Int> exact;               // rep == exact
    std::vector<PowerFormLabel> powers;   // rep == power_form
    std::vector<Int> residues;            // rep == modular
    Int modulus = 0;                      // rep == modular
};

// Frame at time t. Exact uses closed forms where they exist (prime_index is
// iterated against the sieve budget); power-form is valid only for power
// maps; modular reduces every step mod n. modular_power runs require unit
// labels.
Frame evolve(const Graph &g, const Labeling &f0, const TransformSpec &spec, std::uint64_t t,
             Representation rep, const Int &modulus = 0, const Config &cfg = Config::defaults());

// How a frame's checks were discharged.
enum class CheckMode {
    exact,      // literal per-edge gcd on materialized labels
    base_gcd,   // gcd of power-form bases (equivalent by the power identity)
    structural, // distinct primes after a prime_index step
    modular,    // per-edge gcd on residues
};

struct StepReport {
    std::uint64_t t = 0;
    CheckMode mode = CheckMode::exact;
    bool ok = true;
    std::vector<kernels::EdgeViolation> violations;
    std::optional<std::pair<VertexId, VertexId>> collision; // equal labels
    bool collision_downgraded = false;                      // policy warning, not a failure
};

enum class RunStatus { verified, gcd_violation, injectivity_violation };

struct RunOptions {
    bool allow_modular_collisions = false;
};

struct DclRun {
    std::uint64_t horizon = 0;
    RunStatus status = RunStatus::verified;
    bool structural_guarantee = false; // verified for all t, not just the horizon
    std::vector<StepReport> steps;     // frames 0..first failure (or 0..T)
    // First failure, when status != verified:
    std::uint64_t violation_t = 0;
    std::optional<Edge> violation_edge;
    Int violation_gcd = 0;
    std::optional<std::pair<VertexId, VertexId>> violation_collision;
};

// Checks every frame 0..T for edge coprimality and injectivity. Power maps
// are discharged through the base-gcd equivalence and prime indexing through
// the distinct-primes argument, so the horizon does not force label
// materialization; affine/additive runs iterate exactly; modular_power runs
// check residues with the configured collision policy.
DclRun verify_run(const Graph &g, const Labeling &f0, const TransformSpec &spec, std::uint64_t T,
                  const RunOptions &opts = {}, const Config &cfg = Config::defaults());

enum class Boundedness { bounded, unbounded, inconclusive };

struct BoundednessReport {
    Boundedness kind = Boundedness::inconclusive;
    // bounded: least T with f_{t+T} = f_t for all t >= transient.
    Int period = 0;
    std::uint64_t transient = 0;
    std::vector<Int> label_set; // the label-evolution set, sorted
    // unbounded:
    VertexId witness_vertex = 0;
    std::vector<Int> witness_trajectory; // strictly increasing prefix
};

BoundednessReport classify_boundedness(const Labeling &f0, const TransformSpec &spec,
                                       std::uint64_t probe = 1u << 20,
                                       const Config &cfg = Config::defaults());

// T_v = ord_n(f0(v)) per vertex. Raises non_unit naming the offending vertex.
std::vector<Int> vertex_order_profile(const Labeling &f0, const Int &n,
                                      const Config &cfg = Config::defaults());

struct PeriodReport {
    Int modulus;
    std::vector<Int> vertex_orders;
    Int lambda_graph; // lcm of vertex orders
    Int lambda;       // Carmichael lambda(n)
    bool divides = false;
    bool generates = false;
    bool equality = false;
};

PeriodReport graph_period(const Labeling &f0, const Int &n, const Config &cfg = Config::defaults());

// Periodicity certificate for exponentiation dynamics: f0(v)^T = 1 mod n
// for every vertex.
bool verify_modular_period(const Graph &g, const Labeling &f0, const Int &n, const Int &T,
                           const Config &cfg = Config::defaults());

// Backtracking search for an injective, edge-coprime unit labeling whose
// label set generates (Z/nZ)^x (checked by literal closure, with an
// lcm-of-orders pre-filter). Candidates are units in ascending order; a
// nonzero seed shuffles the candidate pool for randomized demos.
std::optional<Labeling> find_generating_labeling(const Graph &g, const Int &n,
                                                 std::uint64_t seed = 0,
                                                 const Config &cfg = Config::defaults());

} // namespace dcl
