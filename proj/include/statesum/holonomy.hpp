#ifndef STATESUM_HOLONOMY_HPP
#define STATESUM_HOLONOMY_HPP

#include <optional>

#include "statesum/cech.hpp"
#include "statesum/homs.hpp"
#include "statesum/labelings.hpp"

namespace statesum {

/// Ordered product of edge values along a closed path (inverses on steps
/// against the canonical orientation).
int loop_holonomy(const EdgeLabeling& a, const EdgePath& p);

/// Flat iff every 2-simplex boundary has trivial holonomy.
Verdict is_flat(const EdgeLabeling& a);

/// Holonomy homomorphism of a flat connection on the edge-path presentation:
/// each generator maps to the holonomy of its tree loop.
GroupHom holonomy_hom(const EdgeLabeling& a, const Presentation& p);
GroupHom holonomy_hom(const EdgeLabeling& a, Vertex basepoint);

/// Tree edges carry the identity, generator edges carry their images.
EdgeLabeling hom_to_connection(const Presentation& p, const GroupHom& phi);

/// Σ_t z(t)·B(t).
AbValue two_cycle_holonomy(const TriangleLabeling& b, const TwoCycle& z);

/// Flat iff the signed face sum vanishes on every 3-simplex (δB = 0).
Verdict is_gerbe_flat(const TriangleLabeling& b);

/// Holonomy of a flat gerbe-connection on an SNF basis of H₂(K;ℤ).
AbelianHom gerbe_holonomy_hom(const TriangleLabeling& b);
AbelianHom gerbe_holonomy_hom(const TriangleLabeling& b, const ChainQuotient& h2);

/// Solve for the flat labeling realizing ψ on H₂, normalized to vanish on
/// the SNF complement of the cycle space. Throws NoSolutionError when a
/// torsion image is not killed by its invariant factor.
TriangleLabeling hom_to_gerbe_connection(ComplexPtr k, const AbelianHom& psi);
TriangleLabeling hom_to_gerbe_connection(ComplexPtr k, const AbelianHom& psi,
                                         const ChainQuotient& h2);

/// Find λ with apply_gauge(b1, λ) = b2, i.e. δλ = b2 − b1; nullopt when the
/// labelings are not gauge equivalent.
std::optional<AbelianEdgeLabeling> gauge_between(const TriangleLabeling& b1,
                                                 const TriangleLabeling& b2);

/// Elementary homotopy move: replace steps (u→v, v→w) at `pos` by (u→w)
/// when {u,v,w} spans a 2-simplex; nullopt when the move does not apply.
std::optional<EdgePath> contract_across_triangle(const SimplicialComplex& k, const EdgePath& p,
                                                 std::size_t pos);

/// Inverse move: replace step (u→w) at `pos` by (u→via, via→w).
std::optional<EdgePath> expand_across_triangle(const SimplicialComplex& k, const EdgePath& p,
                                               std::size_t pos, Vertex via);

}  // namespace statesum

#endif
