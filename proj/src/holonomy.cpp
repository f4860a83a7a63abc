#include "statesum/holonomy.hpp"

#include "statesum/errors.hpp"
#include "statesum/smith.hpp"

namespace statesum {

int loop_holonomy(const EdgeLabeling& a, const EdgePath& p) {
    a.validate();
    validate_path(*a.complex, p);
    if (!p.is_loop()) throw PreconditionError("holonomy requires a closed path");
    const FiniteGroup& g = *a.group;
    int acc = g.identity();
    for (const auto& s : p.steps) acc = g.mul(acc, a.value(s.from, s.to));
    return acc;
}

Verdict is_flat(const EdgeLabeling& a) {
    a.validate();
    Verdict v;
    const FiniteGroup& g = *a.group;
    for (const auto& t : a.complex->simplices(2)) {
        int hol = g.mul(g.mul(a.value(t[0], t[1]), a.value(t[1], t[2])), a.value(t[2], t[0]));
        if (hol != g.identity()) {
            v.ok = false;
            v.violations.push_back(t);
        }
    }
    return v;
}

GroupHom holonomy_hom(const EdgeLabeling& a, const Presentation& p) {
    if (!(*a.complex == *p.complex)) {
        throw PreconditionError("labeling and presentation live on different complexes");
    }
    Verdict flat = is_flat(a);
    if (!flat.ok) {
        throw PreconditionError("holonomy_hom requires a flat connection (" +
                                std::to_string(flat.violations.size()) +
                                " violating triangles)");
    }
    GroupHom hom;
    hom.group = a.group;
    for (int g = 0; g < p.generators; ++g) {
        hom.images.push_back(loop_holonomy(a, generator_loop(p, g)));
    }
    return hom;
}

GroupHom holonomy_hom(const EdgeLabeling& a, Vertex basepoint) {
    return holonomy_hom(a, present_pi1(a.complex, basepoint));
}

EdgeLabeling hom_to_connection(const Presentation& p, const GroupHom& phi) {
    if (!phi.group) throw PreconditionError("hom carries no group");
    if (static_cast<int>(phi.images.size()) != p.generators) {
        throw MalformedInputError("hom image count does not match generator count");
    }
    for (int img : phi.images) {
        if (img < 0 || img >= phi.group->order()) {
            throw MalformedInputError("hom image index out of range");
        }
    }
    if (!satisfies_relators(p, *phi.group, phi.images)) {
        throw PreconditionError("images violate a relator of the presentation");
    }
    EdgeLabeling a = EdgeLabeling::identity(p.complex, phi.group);
    for (int g = 0; g < p.generators; ++g) {
        const Edge& e = p.generator_edges[static_cast<std::size_t>(g)];
        a.values[e] = phi.images[static_cast<std::size_t>(g)];
    }
    // A raw presentation covers every non-tree edge; anything else would
    // leave edges implicitly labeled with the identity, silently changing
    // the connection.
    for (const auto& e : p.complex->simplices(1)) {
        Edge edge{e[0], e[1]};
        if (!p.tree_edges.count(edge) && !p.edge_to_generator.count(edge)) {
            throw PreconditionError("presentation does not cover edge {" +
                                    std::to_string(e[0]) + "," + std::to_string(e[1]) +
                                    "}; use the unsimplified presentation");
        }
    }
    return a;
}

AbValue two_cycle_holonomy(const TriangleLabeling& b, const TwoCycle& z) {
    b.validate();
    if (!is_cycle(*b.complex, z)) {
        throw PreconditionError("two_cycle_holonomy requires a 2-cycle");
    }
    AbValue acc = b.group.zero();
    for (const auto& [t, c] : z.coefficients()) {
        acc = b.group.add(acc, b.group.scale(c, b.values.at(t)));
    }
    return acc;
}

Verdict is_gerbe_flat(const TriangleLabeling& b) {
    b.validate();
    Verdict v;
    for (const auto& s : b.complex->simplices(3)) {
        AbValue sum = b.group.sub(b.value(s[1], s[2], s[3]), b.value(s[0], s[2], s[3]));
        sum = b.group.add(sum, b.value(s[0], s[1], s[3]));
        sum = b.group.sub(sum, b.value(s[0], s[1], s[2]));
        if (!b.group.is_zero(sum)) {
            v.ok = false;
            v.violations.push_back(s);
        }
    }
    return v;
}

AbelianHom gerbe_holonomy_hom(const TriangleLabeling& b, const ChainQuotient& h2) {
    Verdict flat = is_gerbe_flat(b);
    if (!flat.ok) {
        throw PreconditionError("gerbe_holonomy_hom requires a flat labeling (" +
                                std::to_string(flat.violations.size()) +
                                " violating tetrahedra)");
    }
    AbelianHom psi;
    psi.source = h2.group();
    psi.target = b.group;
    for (std::size_t i = 0; i < h2.torsion_count(); ++i) {
        TwoCycle z = TwoCycle::from_dense(*b.complex, h2.torsion_generator(i));
        psi.torsion_images.push_back(two_cycle_holonomy(b, z));
    }
    for (std::size_t i = 0; i < h2.free_count(); ++i) {
        TwoCycle z = TwoCycle::from_dense(*b.complex, h2.free_generator(i));
        psi.free_images.push_back(two_cycle_holonomy(b, z));
    }
    return psi;
}

AbelianHom gerbe_holonomy_hom(const TriangleLabeling& b) {
    return gerbe_holonomy_hom(b, homology_quotient(*b.complex, 2));
}

TriangleLabeling hom_to_gerbe_connection(ComplexPtr k, const AbelianHom& psi,
                                         const ChainQuotient& h2) {
    if (!k) throw PreconditionError("null complex");
    validate_abelian_hom(psi);
    if (!(psi.source == h2.group())) {
        throw PreconditionError("hom source " + psi.source.describe() +
                                " does not match H2 = " + h2.group().describe());
    }
    IntMatrix ainv = h2.adapted_inverse();
    std::size_t torsion_row = h2.complement_dim() + h2.killed_count();
    std::size_t free_row = h2.complement_dim() + h2.image_rank();

    TriangleLabeling b;
    b.complex = k;
    b.group = psi.target;
    const auto& tris = k->simplices(2);
    for (std::size_t t = 0; t < tris.size(); ++t) {
        AbValue val = psi.target.zero();
        for (std::size_t i = 0; i < psi.torsion_images.size(); ++i) {
            val = psi.target.add(
                val, psi.target.scale(ainv.at(torsion_row + i, t), psi.torsion_images[i]));
        }
        for (std::size_t i = 0; i < psi.free_images.size(); ++i) {
            val = psi.target.add(
                val, psi.target.scale(ainv.at(free_row + i, t), psi.free_images[i]));
        }
        b.values[tris[t]] = val;
    }
    return b;
}

TriangleLabeling hom_to_gerbe_connection(ComplexPtr k, const AbelianHom& psi) {
    if (!k) throw PreconditionError("null complex");
    return hom_to_gerbe_connection(k, psi, homology_quotient(*k, 2));
}

std::optional<AbelianEdgeLabeling> gauge_between(const TriangleLabeling& b1,
                                                 const TriangleLabeling& b2) {
    b1.validate();
    b2.validate();
    if (!(*b1.complex == *b2.complex)) {
        throw PreconditionError("labelings live on different complexes");
    }
    if (!(b1.group == b2.group)) {
        throw PreconditionError("labelings use different coefficient groups");
    }
    const SimplicialComplex& k = *b1.complex;
    const CoeffGroup& grp = b1.group;
    const auto& tris = k.simplices(2);
    const auto& edges = k.simplices(1);

    std::vector<AbValue> diff;
    diff.reserve(tris.size());
    for (const auto& t : tris) {
        diff.push_back(grp.sub(b2.values.at(t), b1.values.at(t)));
    }

    // δ as a matrix C¹ → C² is the transpose of ∂₂; solve δλ = diff by SNF.
    IntMatrix delta = k.dimension() >= 2 ? boundary_matrix(k, 2).transposed()
                                         : IntMatrix(0, edges.size());
    SmithForm snf = smith_normal_form(delta);
    std::size_t rank = snf.rank();

    std::vector<AbValue> c(tris.size(), grp.zero());
    for (std::size_t i = 0; i < tris.size(); ++i) {
        AbValue acc = grp.zero();
        for (std::size_t j = 0; j < tris.size(); ++j) {
            const Int& u = snf.u.at(i, j);
            if (u != 0) acc = grp.add(acc, grp.scale(u, diff[j]));
        }
        c[i] = acc;
    }
    std::vector<AbValue> y(edges.size(), grp.zero());
    for (std::size_t i = 0; i < tris.size(); ++i) {
        if (i < rank && i < edges.size()) {
            AbValue sol;
            if (!grp.try_solve_scale(snf.d.at(i, i), c[i], &sol)) return std::nullopt;
            y[i] = sol;
        } else if (!grp.is_zero(c[i])) {
            return std::nullopt;
        }
    }

    AbelianEdgeLabeling lambda;
    lambda.complex = b1.complex;
    lambda.group = grp;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        AbValue acc = grp.zero();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Int& v = snf.v.at(e, i);
            if (v != 0) acc = grp.add(acc, grp.scale(v, y[i]));
        }
        lambda.values[{edges[e][0], edges[e][1]}] = acc;
    }
    return lambda;
}

std::optional<EdgePath> contract_across_triangle(const SimplicialComplex& k, const EdgePath& p,
                                                 std::size_t pos) {
    if (pos + 1 >= p.steps.size()) return std::nullopt;
    Vertex u = p.steps[pos].from, v = p.steps[pos].to, w = p.steps[pos + 1].to;
    if (u == w || u == v || v == w) return std::nullopt;
    Simplex t = OrientedSimplex::from_tuple({u, v, w}).canonical();
    if (!k.contains(t)) return std::nullopt;
    EdgePath out = p;
    out.steps.erase(out.steps.begin() + static_cast<std::ptrdiff_t>(pos),
                    out.steps.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    out.steps.insert(out.steps.begin() + static_cast<std::ptrdiff_t>(pos), EdgeStep{u, w});
    return out;
}

std::optional<EdgePath> expand_across_triangle(const SimplicialComplex& k, const EdgePath& p,
                                               std::size_t pos, Vertex via) {
    if (pos >= p.steps.size()) return std::nullopt;
    Vertex u = p.steps[pos].from, w = p.steps[pos].to;
    if (via == u || via == w) return std::nullopt;
    Simplex t = OrientedSimplex::from_tuple({u, via, w}).canonical();
    if (!k.contains(t)) return std::nullopt;
    EdgePath out = p;
    out.steps[pos] = EdgeStep{u, via};
    out.steps.insert(out.steps.begin() + static_cast<std::ptrdiff_t>(pos) + 1, EdgeStep{via, w});
    return out;
}

}  // namespace statesum
