#ifndef STATESUM_HOMS_HPP
#define STATESUM_HOMS_HPP

#include <string>
#include <vector>

#include "statesum/finite_group.hpp"
#include "statesum/presentation.hpp"

namespace statesum {

/// Homomorphism from a presented group into a finite group, stored as one
/// image per generator. Relators are verified on construction paths.
struct GroupHom {
    GroupPtr group;
    std::vector<int> images;

    bool operator==(const GroupHom& other) const { return images == other.images; }
};

/// Evaluate a word under generator images.
int eval_word(const FiniteGroup& g, const Word& w, const std::vector<int>& images);

bool satisfies_relators(const Presentation& p, const FiniteGroup& g,
                        const std::vector<int>& images);

enum class EnumMode { kCountOnly, kCollect };

struct HomEnumeration {
    Int count = 0;
    std::vector<GroupHom> homs;  // filled in collect mode, lexicographic by images
};

/// Backtracking enumeration of Hom(presented group, G). Generators are
/// assigned in descending relator-occurrence order; a relator prunes as soon
/// as all its letters are assigned. `threads` ≤ 1 means sequential; the
/// parallel split is by the first assigned generator's image and the result
/// is identical to the sequential one.
HomEnumeration enumerate_homs(const Presentation& p, GroupPtr g, EnumMode mode,
                              int threads = 1);

/// #Hom(π₁(K, min vertex), G).
Int dw_invariant(const SimplicialComplex& k, GroupPtr g, int threads = 1);

struct YetterResult {
    Int invariant = 0;
    bool verified_simply_connected = false;
    std::string warning;  // set when unverified
    FinAbelianGroup h2;
};

/// #Hom(H₂(K;ℤ), H) with a Hurewicz caveat: the value equals #Hom(π₂, H)
/// only when simply-connectedness could be verified; otherwise the warning
/// explains what blocked verification.
YetterResult yetter_invariant(const SimplicialComplex& k, const FinAbelianGroup& h);

/// Homomorphism from a finitely generated abelian group (rank + invariant
/// factors) into a coefficient group: one image per free generator and one
/// per torsion generator, the latter killed by its factor.
struct AbelianHom {
    FinAbelianGroup source;
    CoeffGroup target;
    std::vector<AbValue> torsion_images;  // aligned with source.factors()
    std::vector<AbValue> free_images;     // aligned with free generators

    bool operator==(const AbelianHom&) const = default;
};

/// Throws NoSolutionError when a torsion image is not killed by its factor,
/// MalformedInputError on arity mismatch.
void validate_abelian_hom(const AbelianHom& h);

}  // namespace statesum

#endif
