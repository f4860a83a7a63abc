#ifndef STATESUM_CECH_HPP
#define STATESUM_CECH_HPP

#include <map>
#include <vector>

#include "statesum/homology.hpp"
#include "statesum/labelings.hpp"

namespace statesum {

/// Outcome of a local verification: the simplices where a law fails.
struct Verdict {
    bool ok = true;
    std::vector<Simplex> violations;
};

/// Abelian gauge data on vertices, for abelian bundle cocycles.
struct AbelianVertexGauge {
    ComplexPtr complex;
    CoeffGroup group;
    std::vector<AbValue> values;  // indexed by vertex

    static AbelianVertexGauge zero(ComplexPtr k, CoeffGroup g);
    void validate() const;
};

/// Check g_ij·g_jk·g_ik⁻¹ = 1 on every 2-simplex of the nerve.
Verdict verify_bundle_cocycle(const BundleCocycle& c);

/// Check h_ijk − h_ijl + h_ikl − h_jkl = 0 on every 3-simplex.
Verdict verify_gerbe_cocycle(const GerbeCocycle& c);

/// Additive bundle condition c_ij + c_jk − c_ik = 0 on every 2-simplex.
Verdict verify_abelian_bundle_cocycle(const AbelianEdgeLabeling& c);

/// g'_ij = λ_i · g_ij · λ_j⁻¹.
BundleCocycle apply_gauge(const BundleCocycle& c, const VertexGauge& lambda);

/// h'_ijk = h_ijk + λ_ij − λ_ik + λ_jk.
GerbeCocycle apply_gauge(const GerbeCocycle& c, const AbelianEdgeLabeling& lambda);

/// c'_ij = c_ij + λ_i − λ_j.
AbelianEdgeLabeling apply_gauge(const AbelianEdgeLabeling& c, const AbelianVertexGauge& lambda);

/// An integral cohomology class on the nerve: a representative cocycle in
/// the canonical simplex basis together with its coordinates in
/// H^degree(nerve; ℤ) (torsion coordinates first, then free ones).
struct CohomologyClass {
    int degree = 0;
    std::vector<Int> representative;
    FinAbelianGroup group;
    std::vector<Int> coords;

    bool is_zero() const;
};

/// Discrete Dixmier–Douady class of a gerbe cocycle: lift values to the
/// rational representative in [0,1), take the simplicial coboundary (an
/// integer 3-cocycle) and read its class in H³(nerve; ℤ). Optional offsets
/// shift individual lifts by integers; the class is unchanged.
CohomologyClass characteristic_class(const GerbeCocycle& c,
                                     const std::map<Simplex, Int>* lift_offsets = nullptr);

/// Degree-2 analog for abelian bundle cocycles (discrete Chern class),
/// with offsets keyed by canonical edges as 2-element tuples.
CohomologyClass characteristic_class_bundle(const AbelianEdgeLabeling& c,
                                            const std::map<Simplex, Int>* lift_offsets = nullptr);

struct BundleClassification {
    Int cocycle_count = 0;
    Int class_count = 0;
    std::vector<BundleCocycle> representatives;  // one per gauge class
};

/// Brute-force orbit count of bundle cocycles modulo vertex gauge on small
/// nerves (≤ 6 vertices, |G| ≤ 8); the enumeration aborts above 10⁷ states.
BundleClassification classify_bundles_smallcase(ComplexPtr nerve, GroupPtr g);

}  // namespace statesum

#endif
