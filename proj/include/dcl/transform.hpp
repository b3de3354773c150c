#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcl/bigint.hpp"
#include "dcl/config.hpp"
#include "dcl/graph.hpp"
#include "dcl/labeling.hpp"

namespace dcl {

enum class MapKind { power, prime_index, modular_power, affine, additive_shift };

// What the map's definition promises about coprimality, before any sampling.
enum class Preservation {
    always,     // proved for all of N (power maps, prime indexing)
    units_only, // meaningful on residues and only for units modulo m
    none,       // known non-example (affine, additive shifts)
};

std::string map_kind_name(MapKind kind);

// Immutable description of a transformation g: N -> N.
class TransformSpec {
  public:
    static TransformSpec power(std::uint32_t k);
    static TransformSpec prime_index();
    static TransformSpec modular_power(std::uint32_t k, Int m);
    static TransformSpec affine(Int p); // g(x) = p*x + 1, p prime
    static TransformSpec additive_shift(Int c);

    MapKind kind() const { return kind_; }
    std::uint32_t exponent() const { return k_; }
    const Int &modulus() const { return m_; }
    const Int &prime() const { return p_; }
    const Int &shift() const { return c_; }

    Preservation declared_preservation() const;
    bool declared_coprime_preserving() const {
        return declared_preservation() == Preservation::always;
    }
    std::string describe() const;

  private:
    TransformSpec() = default;
    MapKind kind_ = MapKind::power;
    std::uint32_t k_ = 1; // power / modular_power exponent
    Int m_ = 0;           // modular_power modulus
    Int p_ = 0;           // affine prime
    Int c_ = 0;           // additive shift
};

// One application of g. modular_power treats x as a residue representative;
// a zero residue (possible only for non-unit inputs) is reported as a
// unit-domain violation.
Int apply(const TransformSpec &spec, const Int &x, const Config &cfg = Config::defaults());

// g^t(x0) in closed form: power -> x0^(k^t), affine -> p^t*x0 + (p^t-1)/(p-1),
// modular_power -> t-fold modular exponentiation (lambda-reduced for units on
// long horizons). Power results are subject to the exact-size cap.
Int iterate_closed_form(const TransformSpec &spec, const Int &x0, std::uint64_t t,
                        const Config &cfg = Config::defaults());

struct Counterexample {
    Int a, b;     // gcd(a, b) = 1
    Int ga, gb;   // images
    Int witness;  // gcd(ga, gb) > 1
};

struct MapVerdict {
    bool preserved = false;
    std::optional<Counterexample> counterexample;
    std::uint64_t trials = 0; // coprime pairs tested up to and including the hit
};

// Exhaustively tests every coprime pair 1 <= a < b <= bound. Pairs are
// scanned by increasing difference b-a, then increasing a; pairs containing
// the unit 1 (coprime to everything, so the least informative witnesses) are
// scanned last. The verdict speaks for the box only.
MapVerdict sample_coprime_preservation(const TransformSpec &spec, std::uint64_t bound,
                                       const Config &cfg = Config::defaults());

// Per-edge sufficient condition for g(x) = p*x + 1: an edge with labels
// a < b stays coprime for all t whenever, for every prime q dividing b-a,
// the residue (p-1)*a + 1 avoids the subgroup <p> of (Z/qZ)^x. Divisors
// with q = p or q | p-1 fall outside that argument (p-1 need not be
// invertible mod q) and are recorded as indeterminate; such edges need
// horizon verification instead.
enum class DivisorStatus { checked, skipped_q_equals_p, skipped_q_divides_p_minus_1 };

struct AffineDivisorCheck {
    Int q;
    DivisorStatus status = DivisorStatus::checked;
    Int residue = 0; // (p-1)*a + 1 mod q, when checked
    bool member = false;
};

struct AffineEdgeEntry {
    Edge edge;
    Int a, b, d;
    std::vector<AffineDivisorCheck> divisors;
};

struct AffineHypothesisReport {
    Int p;
    std::vector<AffineEdgeEntry> edges;
    bool overall = true;            // no subgroup membership anywhere
    std::vector<Edge> fallback;     // edges with an indeterminate divisor
};

AffineHypothesisReport affine_edge_hypothesis(const Graph &g, const Labeling &f0, const Int &p,
                                              const Config &cfg = Config::defaults());

} // namespace dcl
