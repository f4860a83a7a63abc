#ifndef STATESUM_LABELINGS_HPP
#define STATESUM_LABELINGS_HPP

#include <map>

#include "statesum/abelian.hpp"
#include "statesum/finite_group.hpp"
#include "statesum/simplicial_complex.hpp"

namespace statesum {

/// Group elements on the 1-skeleton; reading an edge against its canonical
/// orientation yields the inverse. Doubles as a Čech bundle cocycle (where
/// the triangle condition is checked separately) and as a discrete
/// connection.
struct EdgeLabeling {
    ComplexPtr complex;
    GroupPtr group;
    std::map<Edge, int> values;

    /// Total labeling by the identity element.
    static EdgeLabeling identity(ComplexPtr k, GroupPtr g);

    int value(Vertex a, Vertex b) const;
    void set(Vertex a, Vertex b, int element);

    /// Check totality on the 1-skeleton and element ranges.
    void validate() const;

    bool operator==(const EdgeLabeling& other) const {
        return values == other.values;
    }
};

using BundleCocycle = EdgeLabeling;

/// Abelian values on the 2-skeleton; odd permutations of a triangle read the
/// negation. Doubles as a Čech gerbe cocycle and as a discrete
/// gerbe-connection.
struct TriangleLabeling {
    ComplexPtr complex;
    CoeffGroup group;
    std::map<Simplex, AbValue> values;

    static TriangleLabeling zero(ComplexPtr k, CoeffGroup g);

    AbValue value(Vertex i, Vertex j, Vertex k) const;
    void set(Vertex i, Vertex j, Vertex k, const AbValue& v);

    void validate() const;

    bool operator==(const TriangleLabeling& other) const {
        return group == other.group && values == other.values;
    }
};

using GerbeCocycle = TriangleLabeling;

/// Abelian values on the 1-skeleton, antisymmetric in orientation. Doubles
/// as gerbe gauge data λ_ij and as an abelian bundle cocycle.
struct AbelianEdgeLabeling {
    ComplexPtr complex;
    CoeffGroup group;
    std::map<Edge, AbValue> values;

    static AbelianEdgeLabeling zero(ComplexPtr k, CoeffGroup g);

    AbValue value(Vertex a, Vertex b) const;
    void set(Vertex a, Vertex b, const AbValue& v);

    void validate() const;

    bool operator==(const AbelianEdgeLabeling& other) const {
        return group == other.group && values == other.values;
    }
};

/// Bundle gauge data: one group element per vertex.
struct VertexGauge {
    ComplexPtr complex;
    GroupPtr group;
    std::vector<int> values;  // indexed by vertex

    static VertexGauge identity(ComplexPtr k, GroupPtr g);

    void validate() const;
};

/// Simplicial coboundary of gauge data: (δλ)(i,j,k) = λ_ij − λ_ik + λ_jk.
TriangleLabeling delta_labeling(const AbelianEdgeLabeling& lambda);

}  // namespace statesum

#endif
