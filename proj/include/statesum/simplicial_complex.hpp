#ifndef STATESUM_SIMPLICIAL_COMPLEX_HPP
#define STATESUM_SIMPLICIAL_COMPLEX_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "statesum/int_matrix.hpp"

namespace statesum {

using Vertex = int;

/// A simplex in canonical form: strictly increasing vertex tuple.
using Simplex = std::vector<Vertex>;

/// Undirected edge in canonical form (u < v).
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A simplex written with its vertices in arbitrary order, together with the
/// sign of the permutation that sorts them. Duplicated vertices are rejected.
struct OrientedSimplex {
    Simplex vertices;  // as given, not sorted
    int sign = 1;      // parity of the sorting permutation

    /// Canonicalize an arbitrary distinct-vertex tuple.
    static OrientedSimplex from_tuple(const std::vector<Vertex>& tuple);

    Simplex canonical() const;
};

/// Finite abstract simplicial complex, closed under faces. Simplices of each
/// dimension are kept sorted lexicographically; that order fixes the bases
/// of all chain groups and boundary matrices.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    int vertex_count() const { return vertex_count_; }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<Simplex>& simplices(int d) const;
    std::size_t count(int d) const;

    bool contains(const Simplex& canonical) const;
    /// Index of a canonical simplex in the lexicographic order of its
    /// dimension, or -1 if absent.
    int index_of(const Simplex& canonical) const;

    bool has_edge(Vertex a, Vertex b) const;

    std::vector<int> f_vector() const;
    Int euler_characteristic() const;

    /// Path-connectivity of the vertex set through the 1-skeleton.
    bool is_connected() const;

    bool operator==(const SimplicialComplex& other) const;

    friend SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal);

private:
    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, int>> index_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// Close the given simplices under faces and canonicalize. Vertices must be
/// the dense range 0..V-1; tuples must not repeat a vertex.
SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal);

/// Matrix of the boundary operator from d-chains to (d-1)-chains in the
/// canonical bases. The face omitting vertex position i carries sign (-1)^i.
IntMatrix boundary_matrix(const SimplicialComplex& k, int d);

/// One step of an edge path, directed.
struct EdgeStep {
    Vertex from, to;
    bool operator==(const EdgeStep&) const = default;
};

/// A walk in the 1-skeleton: consecutive steps are head-to-tail.
struct EdgePath {
    Vertex basepoint = 0;
    std::vector<EdgeStep> steps;

    bool operator==(const EdgePath&) const = default;
    bool is_loop() const;
};

/// Check well-formedness against a complex: edges exist, steps chain, and
/// the path starts at its basepoint. Throws on violation.
void validate_path(const SimplicialComplex& k, const EdgePath& p);

/// Remove backtracking step pairs (u->v, v->u) until none remain. The
/// reduced representative is unique regardless of cancellation order.
EdgePath simplify_path(const EdgePath& p);

/// Integer 2-chain, finitely supported on canonical triangles.
class TwoCycle {
public:
    TwoCycle() = default;

    /// Accumulate a signed contribution on one (possibly unsorted) triangle.
    void add(const std::vector<Vertex>& triangle, const Int& coefficient);

    const std::map<Simplex, Int>& coefficients() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    TwoCycle operator-() const;
    TwoCycle operator+(const TwoCycle& other) const;
    TwoCycle scaled(const Int& n) const;

    bool operator==(const TwoCycle&) const = default;

    /// Dense coefficient vector in the canonical triangle basis of k.
    std::vector<Int> dense(const SimplicialComplex& k) const;
    static TwoCycle from_dense(const SimplicialComplex& k, const std::vector<Int>& v);

private:
    std::map<Simplex, Int> coeffs_;  // canonical triangle -> nonzero coefficient
};

/// True iff the simplicial boundary of z vanishes. The support must lie in k.
bool is_cycle(const SimplicialComplex& k, const TwoCycle& z);

}  // namespace statesum

#endif
