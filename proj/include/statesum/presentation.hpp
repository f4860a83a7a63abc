#ifndef STATESUM_PRESENTATION_HPP
#define STATESUM_PRESENTATION_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "statesum/abelian.hpp"
#include "statesum/simplicial_complex.hpp"

namespace statesum {

/// A word in a finitely presented group: letters are ±(generator index + 1).
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word invert_word(const Word& w);
Word concat_reduced(const Word& a, const Word& b);

/// Finite presentation of an edge-path group. Generators correspond to
/// directed non-tree edges (direction = increasing vertices); one relator
/// per 2-simplex. The originating complex, basepoint and spanning tree are
/// kept so that paths can be read as words and homomorphisms can be turned
/// back into edge labelings.
struct Presentation {
    ComplexPtr complex;
    Vertex basepoint = 0;
    int generators = 0;
    std::vector<Word> relators;
    std::vector<Edge> generator_edges;       // generator -> its canonical edge
    std::map<Edge, int> edge_to_generator;   // inverse map (raw presentations)
    std::set<Edge> tree_edges;
    std::vector<Vertex> tree_parent;         // BFS parent, -1 at basepoint
};

/// Edge-path presentation of π₁(K, basepoint). The spanning tree is BFS from
/// the basepoint with neighbors visited in ascending vertex order.
Presentation present_pi1(ComplexPtr k, Vertex basepoint);

/// Read a loop at the presentation's basepoint as a freely reduced word.
Word word_of_path(const Presentation& p, const EdgePath& path);

/// Tietze simplification: free/cyclic relator reduction, removal of empty
/// and duplicate relators, and elimination of generators occurring exactly
/// once in some relator. Bounded by the step budget; never adds generators.
Presentation simplify_presentation(Presentation p, int effort);

/// Abelianized group of the presentation, via SNF of the exponent matrix.
FinAbelianGroup abelianization(const Presentation& p);

struct SimplyConnectedCheck {
    bool verified = false;
    std::string reason;  // empty when verified
};

/// Certify π₁ = 1 where possible: trivial abelianization plus simplification
/// to the empty presentation within the budget. Inconclusive results are
/// reported as unverified, never as a silent pass.
SimplyConnectedCheck check_simply_connected(const Presentation& p, int effort = 1000);

/// Vertex sequence of the tree path basepoint -> v.
std::vector<Vertex> tree_path_vertices(const Presentation& p, Vertex v);

/// The loop representing a generator: tree path to the edge tail, the edge
/// itself (in its generator direction), tree path back from the head.
EdgePath generator_loop(const Presentation& p, int generator);

}  // namespace statesum

#endif
