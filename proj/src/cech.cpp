#include "statesum/cech.hpp"

#include <algorithm>
#include <functional>

#include "statesum/errors.hpp"

namespace statesum {

AbelianVertexGauge AbelianVertexGauge::zero(ComplexPtr k, CoeffGroup g) {
    AbelianVertexGauge lam;
    lam.complex = std::move(k);
    lam.group = std::move(g);
    lam.values.assign(static_cast<std::size_t>(lam.complex->vertex_count()), lam.group.zero());
    return lam;
}

void AbelianVertexGauge::validate() const {
    if (!complex) throw PreconditionError("gauge lacks a complex");
    if (static_cast<int>(values.size()) != complex->vertex_count()) {
        throw MalformedInputError("gauge must assign one value to every vertex");
    }
    for (const AbValue& v : values) group.reduce(v);
}

Verdict verify_bundle_cocycle(const BundleCocycle& c) {
    c.validate();
    Verdict v;
    const FiniteGroup& g = *c.group;
    for (const auto& t : c.complex->simplices(2)) {
        int prod = g.mul(g.mul(c.value(t[0], t[1]), c.value(t[1], t[2])),
                         g.inv(c.value(t[0], t[2])));
        if (prod != g.identity()) {
            v.ok = false;
            v.violations.push_back(t);
        }
    }
    return v;
}

Verdict verify_gerbe_cocycle(const GerbeCocycle& c) {
    c.validate();
    Verdict v;
    for (const auto& s : c.complex->simplices(3)) {
        AbValue sum = c.group.sub(c.value(s[0], s[1], s[2]), c.value(s[0], s[1], s[3]));
        sum = c.group.add(sum, c.value(s[0], s[2], s[3]));
        sum = c.group.sub(sum, c.value(s[1], s[2], s[3]));
        if (!c.group.is_zero(sum)) {
            v.ok = false;
            v.violations.push_back(s);
        }
    }
    return v;
}

Verdict verify_abelian_bundle_cocycle(const AbelianEdgeLabeling& c) {
    c.validate();
    Verdict v;
    for (const auto& t : c.complex->simplices(2)) {
        AbValue sum = c.group.add(c.value(t[0], t[1]), c.value(t[1], t[2]));
        sum = c.group.sub(sum, c.value(t[0], t[2]));
        if (!c.group.is_zero(sum)) {
            v.ok = false;
            v.violations.push_back(t);
        }
    }
    return v;
}

namespace {

void require_same_complex(const ComplexPtr& a, const ComplexPtr& b) {
    if (!a || !b || !(*a == *b)) {
        throw PreconditionError("gauge data and cocycle live on different complexes");
    }
}

}  // namespace

BundleCocycle apply_gauge(const BundleCocycle& c, const VertexGauge& lambda) {
    c.validate();
    lambda.validate();
    require_same_complex(c.complex, lambda.complex);
    if (!(*c.group == *lambda.group)) {
        throw PreconditionError("gauge data and cocycle use different groups");
    }
    const FiniteGroup& g = *c.group;
    BundleCocycle out = c;
    for (auto& [e, val] : out.values) {
        val = g.mul(g.mul(lambda.values[static_cast<std::size_t>(e.first)], val),
                    g.inv(lambda.values[static_cast<std::size_t>(e.second)]));
    }
    return out;
}

GerbeCocycle apply_gauge(const GerbeCocycle& c, const AbelianEdgeLabeling& lambda) {
    c.validate();
    lambda.validate();
    require_same_complex(c.complex, lambda.complex);
    if (!(c.group == lambda.group)) {
        throw PreconditionError("gauge data and cocycle use different coefficient groups");
    }
    GerbeCocycle out = c;
    for (auto& [t, val] : out.values) {
        AbValue d = c.group.sub(lambda.value(t[0], t[1]), lambda.value(t[0], t[2]));
        d = c.group.add(d, lambda.value(t[1], t[2]));
        val = c.group.add(val, d);
    }
    return out;
}

AbelianEdgeLabeling apply_gauge(const AbelianEdgeLabeling& c, const AbelianVertexGauge& lambda) {
    c.validate();
    lambda.validate();
    require_same_complex(c.complex, lambda.complex);
    if (!(c.group == lambda.group)) {
        throw PreconditionError("gauge data and cocycle use different coefficient groups");
    }
    AbelianEdgeLabeling out = c;
    for (auto& [e, val] : out.values) {
        val = c.group.add(val, c.group.sub(lambda.values[static_cast<std::size_t>(e.first)],
                                           lambda.values[static_cast<std::size_t>(e.second)]));
    }
    return out;
}

bool CohomologyClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
}

namespace {

Rational component_value(const CoeffGroup& g, const AbValue& v) {
    if (g.components() != 1) {
        throw UnsupportedError(
            "characteristic classes require a single-component coefficient group "
            "(Q/Z or one cyclic factor); compute per component instead");
    }
    return v[0];
}

Int integer_of(const Rational& q) {
    if (boost::multiprecision::denominator(q) != 1) {
        throw PreconditionError("coboundary of the lift is not integral");
    }
    return boost::multiprecision::numerator(q);
}

}  // namespace

CohomologyClass characteristic_class(const GerbeCocycle& c,
                                     const std::map<Simplex, Int>* lift_offsets) {
    Verdict v = verify_gerbe_cocycle(c);
    if (!v.ok) throw PreconditionError("characteristic_class requires a gerbe cocycle");

    const SimplicialComplex& k = *c.complex;
    std::map<Simplex, Rational> lift;
    for (const auto& t : k.simplices(2)) {
        Rational q = component_value(c.group, c.values.at(t));
        if (lift_offsets) {
            auto it = lift_offsets->find(t);
            if (it != lift_offsets->end()) q += Rational(it->second);
        }
        lift[t] = q;
    }

    CohomologyClass cls;
    cls.degree = 3;
    if (k.dimension() < 3) return cls;  // no 3-simplices: H³ = 0

    const auto& tets = k.simplices(3);
    cls.representative.reserve(tets.size());
    for (const auto& s : tets) {
        Rational d = lift.at({s[1], s[2], s[3]}) - lift.at({s[0], s[2], s[3]}) +
                     lift.at({s[0], s[1], s[3]}) - lift.at({s[0], s[1], s[2]});
        cls.representative.push_back(integer_of(d));
    }
    ChainQuotient q3 = cohomology_quotient(k, 3);
    cls.coords = q3.coords(cls.representative);
    cls.group = q3.group();
    return cls;
}

CohomologyClass characteristic_class_bundle(const AbelianEdgeLabeling& c,
                                            const std::map<Simplex, Int>* lift_offsets) {
    Verdict v = verify_abelian_bundle_cocycle(c);
    if (!v.ok) throw PreconditionError("characteristic_class_bundle requires a bundle cocycle");

    const SimplicialComplex& k = *c.complex;
    std::map<Edge, Rational> lift;
    for (const auto& e : k.simplices(1)) {
        Edge edge{e[0], e[1]};
        Rational q = component_value(c.group, c.values.at(edge));
        if (lift_offsets) {
            auto it = lift_offsets->find(e);
            if (it != lift_offsets->end()) q += Rational(it->second);
        }
        lift[edge] = q;
    }

    CohomologyClass cls;
    cls.degree = 2;
    if (k.dimension() < 2) return cls;

    const auto& tris = k.simplices(2);
    cls.representative.reserve(tris.size());
    for (const auto& t : tris) {
        Rational d = lift.at({t[1], t[2]}) - lift.at({t[0], t[2]}) + lift.at({t[0], t[1]});
        cls.representative.push_back(integer_of(d));
    }
    ChainQuotient q2 = cohomology_quotient(k, 2);
    cls.coords = q2.coords(cls.representative);
    cls.group = q2.group();
    return cls;
}

BundleClassification classify_bundles_smallcase(ComplexPtr nerve, GroupPtr g) {
    if (!nerve || !g) throw PreconditionError("null nerve or group");
    if (nerve->vertex_count() > 6) {
        throw UnsupportedError("classify_bundles_smallcase supports at most 6 vertices");
    }
    if (g->order() > 8) {
        throw UnsupportedError("classify_bundles_smallcase supports groups of order at most 8");
    }
    const SimplicialComplex& k = *nerve;
    const FiniteGroup& grp = *g;
    const auto& edges = k.simplices(1);
    std::size_t ne = edges.size();
    std::map<Edge, std::size_t> edge_index;
    for (std::size_t i = 0; i < ne; ++i) edge_index[{edges[i][0], edges[i][1]}] = i;

    // For each triangle, the last of its three edges in the assignment order.
    struct TriCheck {
        std::size_t e01, e02, e12;
    };
    std::vector<std::vector<TriCheck>> ready(ne);
    for (const auto& t : k.simplices(2)) {
        TriCheck tc{edge_index.at(make_edge(t[0], t[1])), edge_index.at(make_edge(t[0], t[2])),
                    edge_index.at(make_edge(t[1], t[2]))};
        std::size_t last = std::max({tc.e01, tc.e02, tc.e12});
        ready[last].push_back(tc);
    }

    constexpr long long kStateCap = 10'000'000;
    long long visited = 0;
    std::vector<std::vector<int>> cocycles;
    std::vector<int> cur(ne, 0);
    std::function<void(std::size_t)> enumerate = [&](std::size_t pos) {
        if (++visited > kStateCap) {
            throw UnsupportedError("bundle enumeration exceeded the state cap");
        }
        if (pos == ne) {
            cocycles.push_back(cur);
            return;
        }
        for (int val = 0; val < grp.order(); ++val) {
            cur[pos] = val;
            bool ok = true;
            for (const TriCheck& tc : ready[pos]) {
                int prod = grp.mul(grp.mul(cur[tc.e01], cur[tc.e12]), grp.inv(cur[tc.e02]));
                if (prod != grp.identity()) {
                    ok = false;
                    break;
                }
            }
            if (ok) enumerate(pos + 1);
        }
    };
    enumerate(0);

    std::map<std::vector<int>, int> orbit_of;
    int orbits = 0;
    std::vector<std::vector<int>> reps;
    for (const auto& seed : cocycles) {
        if (orbit_of.count(seed)) continue;
        int id = orbits++;
        reps.push_back(seed);
        std::vector<std::vector<int>> frontier{seed};
        orbit_of[seed] = id;
        while (!frontier.empty()) {
            std::vector<int> state = std::move(frontier.back());
            frontier.pop_back();
            for (int vtx = 0; vtx < k.vertex_count(); ++vtx) {
                for (int a = 0; a < grp.order(); ++a) {
                    std::vector<int> next = state;
                    for (std::size_t ei = 0; ei < ne; ++ei) {
                        Vertex u = edges[ei][0], w = edges[ei][1];
                        int val = next[ei];
                        if (u == vtx) val = grp.mul(a, val);
                        if (w == vtx) val = grp.mul(val, grp.inv(a));
                        next[ei] = val;
                    }
                    if (!orbit_of.count(next)) {
                        orbit_of[next] = id;
                        frontier.push_back(next);
                    }
                }
            }
        }
    }

    BundleClassification out;
    out.cocycle_count = static_cast<long long>(cocycles.size());
    out.class_count = orbits;
    for (const auto& rep : reps) {
        BundleCocycle c;
        c.complex = nerve;
        c.group = g;
        for (std::size_t i = 0; i < ne; ++i) c.values[{edges[i][0], edges[i][1]}] = rep[i];
        out.representatives.push_back(std::move(c));
    }
    return out;
}

}  // namespace statesum
