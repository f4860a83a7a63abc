#include <doctest.h>

#include <memory>
#include <random>
#include <vector>

#include "statesum/errors.hpp"
#include "statesum/holonomy.hpp"
#include "statesum/json_io.hpp"

using namespace statesum;

namespace {

GroupPtr make_group(const std::string& spec) {
    return std::make_shared<FiniteGroup>(group_from_spec(spec));
}

// Suspension of the projective plane: poles 6 and 7 over every triangle.
// H2 = Z/2, so gerbe holonomy picks up a genuine torsion constraint.
ComplexPtr sigma_rp2() {
    ComplexPtr rp2 = fixture_complex("rp2");
    std::vector<std::vector<Vertex>> max;
    for (const auto& t : rp2->simplices(2)) {
        max.push_back({t[0], t[1], t[2], 6});
        max.push_back({t[0], t[1], t[2], 7});
    }
    return std::make_shared<SimplicialComplex>(build_complex(max));
}

EdgePath path_concat(const EdgePath& a, const EdgePath& b) {
    EdgePath out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

EdgeLabeling random_labeling(ComplexPtr k, GroupPtr g, std::mt19937& rng) {
    EdgeLabeling a = EdgeLabeling::identity(k, g);
    std::uniform_int_distribution<int> el(0, g->order() - 1);
    for (auto& [e, v] : a.values) v = el(rng);
    return a;
}

AbelianEdgeLabeling random_edge_gauge(ComplexPtr k, const CoeffGroup& g, std::mt19937& rng) {
    AbelianEdgeLabeling lam = AbelianEdgeLabeling::zero(k, g);
    auto els = g.elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (auto& [e, v] : lam.values) v = els[pick(rng)];
    return lam;
}

}  // namespace

TEST_CASE("loop holonomy multiplies edge values in order") {
    ComplexPtr k = fixture_complex("sphere");
    GroupPtr s3 = make_group("sym:3");
    EdgeLabeling a = EdgeLabeling::identity(k, s3);
    a.set(0, 1, 2);
    a.set(1, 2, 3);
    a.set(0, 2, 4);

    EdgePath tri{0, {{0, 1}, {1, 2}, {2, 0}}};
    CHECK(loop_holonomy(a, tri) == s3->mul(s3->mul(2, 3), s3->inv(4)));
    CHECK(loop_holonomy(a, EdgePath{3, {}}) == s3->identity());

    EdgePath there_and_back{0, {{0, 1}, {1, 0}}};
    CHECK(loop_holonomy(a, there_and_back) == s3->identity());

    CHECK_THROWS_AS(loop_holonomy(a, EdgePath{0, {{0, 1}}}), PreconditionError);
}

TEST_CASE("flatness detects exactly the violated triangles") {
    ComplexPtr k = fixture_complex("sphere");
    GroupPtr z3 = make_group("cyclic:3");
    CHECK(is_flat(EdgeLabeling::identity(k, z3)).ok);

    EdgeLabeling a = EdgeLabeling::identity(k, z3);
    a.set(0, 1, 1);
    Verdict v = is_flat(a);
    CHECK_FALSE(v.ok);
    CHECK(v.violations.size() == 2);  // the two triangles on edge {0,1}
}

TEST_CASE("connections built from homomorphisms are flat and give them back") {
    struct Case {
        const char* fixture;
        const char* group;
    };
    for (const Case& c : {Case{"circle", "sym:3"}, Case{"sphere", "sym:3"},
                          Case{"rp2", "cyclic:2"}, Case{"torus", "cyclic:3"},
                          Case{"torus", "sym:3"}}) {
        Presentation p = present_pi1(fixture_complex(c.fixture), 0);
        GroupPtr g = make_group(c.group);
        HomEnumeration homs = enumerate_homs(p, g, EnumMode::kCollect);
        for (const GroupHom& phi : homs.homs) {
            EdgeLabeling conn = hom_to_connection(p, phi);
            CHECK(is_flat(conn).ok);
            GroupHom back = holonomy_hom(conn, p);
            CHECK(back.images == phi.images);
        }
    }
}

TEST_CASE("holonomy against the convenience basepoint overload") {
    Presentation p = present_pi1(fixture_complex("circle"), 0);
    GroupPtr g = make_group("cyclic:4");
    EdgeLabeling conn = hom_to_connection(p, GroupHom{g, {3}});
    GroupHom h = holonomy_hom(conn, 0);
    CHECK(h.images == std::vector<int>{3});
}

TEST_CASE("holonomy of a gauged connection is the conjugated homomorphism") {
    std::mt19937 rng(53);
    struct Case {
        const char* fixture;
        const char* group;
    };
    for (const Case& c : {Case{"torus", "sym:3"}, Case{"rp2", "dihedral:4"}}) {
        ComplexPtr k = fixture_complex(c.fixture);
        Presentation p = present_pi1(k, 0);
        GroupPtr g = make_group(c.group);
        HomEnumeration homs = enumerate_homs(p, g, EnumMode::kCollect);
        std::uniform_int_distribution<std::size_t> pick(0, homs.homs.size() - 1);
        std::uniform_int_distribution<int> el(0, g->order() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            const GroupHom& phi = homs.homs[pick(rng)];
            EdgeLabeling conn = hom_to_connection(p, phi);
            VertexGauge lam = VertexGauge::identity(k, g);
            for (auto& v : lam.values) v = el(rng);
            EdgeLabeling gauged = apply_gauge(conn, lam);
            CHECK(is_flat(gauged).ok);
            GroupHom h = holonomy_hom(gauged, p);
            int c0 = lam.values[0];  // basepoint gauge
            for (std::size_t i = 0; i < h.images.size(); ++i)
                CHECK(h.images[i] == g->mul(g->mul(c0, phi.images[i]), g->inv(c0)));
        }
    }
}

TEST_CASE("non-flat labelings refuse to produce a holonomy homomorphism") {
    ComplexPtr k = fixture_complex("sphere");
    GroupPtr z2 = make_group("cyclic:2");
    EdgeLabeling a = EdgeLabeling::identity(k, z2);
    a.set(0, 1, 1);
    Presentation p = present_pi1(k, 0);
    CHECK_THROWS_AS(holonomy_hom(a, p), PreconditionError);
}

TEST_CASE("hom_to_connection validates images and edge coverage") {
    Presentation p = present_pi1(fixture_complex("sphere"), 0);
    GroupPtr z2 = make_group("cyclic:2");
    CHECK_THROWS_AS(hom_to_connection(p, GroupHom{z2, {0, 0}}), MalformedInputError);
    CHECK_THROWS_AS(hom_to_connection(p, GroupHom{z2, {5, 0, 0}}), MalformedInputError);
    CHECK_THROWS_AS(hom_to_connection(p, GroupHom{z2, {1, 0, 0}}), PreconditionError);

    Presentation s = simplify_presentation(p, 1000);
    CHECK_THROWS_AS(hom_to_connection(s, GroupHom{z2, {}}), PreconditionError);
}

TEST_CASE("two-cycle holonomy pairs chains with triangle values") {
    ComplexPtr k = fixture_complex("sphere");
    CoeffGroup u1 = CoeffGroup::qmodz();
    TriangleLabeling b = TriangleLabeling::zero(k, u1);
    b.set(0, 1, 2, AbValue{Rational(1, 3)});
    b.set(0, 1, 3, AbValue{Rational(1, 4)});

    TwoCycle z;
    z.add({0, 1, 2}, 1);
    z.add({0, 1, 3}, -1);
    z.add({0, 2, 3}, 1);
    z.add({1, 2, 3}, -1);
    // 1/3 - 1/4 = 1/12
    CHECK(two_cycle_holonomy(b, z) == AbValue{Rational(1, 12)});
    CHECK(two_cycle_holonomy(b, -z) == AbValue{Rational(11, 12)});
    CHECK(two_cycle_holonomy(b, TwoCycle{}) == u1.zero());
    CHECK(u1.is_zero(two_cycle_holonomy(b, z + (-z))));

    TwoCycle not_cycle;
    not_cycle.add({0, 1, 2}, 1);
    CHECK_THROWS_AS(two_cycle_holonomy(b, not_cycle), PreconditionError);
}

TEST_CASE("gerbe flatness on the 3-sphere boundary") {
    ComplexPtr k = fixture_complex("s3");
    CoeffGroup z6 = parse_coeff_spec("cyclic:6");
    CHECK(is_gerbe_flat(TriangleLabeling::zero(k, z6)).ok);

    std::mt19937 rng(61);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(is_gerbe_flat(delta_labeling(random_edge_gauge(k, z6, rng))).ok);

    TriangleLabeling bad = TriangleLabeling::zero(k, z6);
    bad.set(0, 1, 2, AbValue{Rational(1, 6)});
    Verdict v = is_gerbe_flat(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.violations.size() == 2);
}

TEST_CASE("gerbe connections reconstruct free holonomy on spheres and tori") {
    for (const char* name : {"sphere", "torus"}) {
        ComplexPtr k = fixture_complex(name);
        ChainQuotient h2 = homology_quotient(*k, 2);
        REQUIRE(h2.group().describe() == "Z");
        for (int n = 2; n <= 6; ++n) {
            CoeffGroup target = parse_coeff_spec("cyclic:" + std::to_string(n));
            for (int img = 0; img < n; ++img) {
                AbelianHom psi;
                psi.source = h2.group();
                psi.target = target;
                psi.free_images = {AbValue{Rational(img, n)}};
                TriangleLabeling b = hom_to_gerbe_connection(k, psi, h2);
                CHECK(is_gerbe_flat(b).ok);
                AbelianHom back = gerbe_holonomy_hom(b, h2);
                CHECK(back.free_images == psi.free_images);
                CHECK(back.source == psi.source);
            }
        }
        AbelianHom q;
        q.source = h2.group();
        q.target = CoeffGroup::qmodz();
        q.free_images = {AbValue{Rational(5, 12)}};
        TriangleLabeling b = hom_to_gerbe_connection(k, q, h2);
        CHECK(gerbe_holonomy_hom(b, h2).free_images == q.free_images);
    }
}

TEST_CASE("the zero homomorphism reconstructs to the zero labeling") {
    for (const char* name : {"sphere", "s3", "rp2"}) {
        ComplexPtr k = fixture_complex(name);
        ChainQuotient h2 = homology_quotient(*k, 2);
        AbelianHom psi;
        psi.source = h2.group();
        psi.target = parse_coeff_spec("cyclic:4");
        psi.torsion_images.assign(h2.torsion_count(), psi.target.zero());
        psi.free_images.assign(h2.free_count(), psi.target.zero());
        TriangleLabeling b = hom_to_gerbe_connection(k, psi, h2);
        for (const auto& [t, v] : b.values) CHECK(psi.target.is_zero(v));
    }
}

TEST_CASE("suspended projective plane: torsion holonomy round trip") {
    ComplexPtr k = sigma_rp2();
    CHECK(homology(*k, 2).describe() == "Z/2");
    CHECK(homology(*k, 3).is_trivial());
    CHECK(cohomology_quotient(*k, 3).group().describe() == "Z/2");

    ChainQuotient h2 = homology_quotient(*k, 2);
    for (const char* spec : {"cyclic:2", "cyclic:4", "cyclic:6"}) {
        CoeffGroup target = parse_coeff_spec(spec);
        AbelianHom psi;
        psi.source = h2.group();
        psi.target = target;
        psi.torsion_images = {AbValue{Rational(1, 2)}};
        TriangleLabeling b = hom_to_gerbe_connection(k, psi, h2);
        CHECK(is_gerbe_flat(b).ok);
        AbelianHom back = gerbe_holonomy_hom(b, h2);
        CHECK(back.torsion_images == psi.torsion_images);
    }

    AbelianHom u1psi;
    u1psi.source = h2.group();
    u1psi.target = CoeffGroup::qmodz();
    u1psi.torsion_images = {AbValue{Rational(1, 2)}};
    TriangleLabeling b = hom_to_gerbe_connection(k, u1psi, h2);
    CHECK(gerbe_holonomy_hom(b, h2).torsion_images == u1psi.torsion_images);

    AbelianHom bad = u1psi;
    bad.torsion_images = {AbValue{Rational(1, 4)}};  // 2 * 1/4 != 0
    CHECK_THROWS_AS(hom_to_gerbe_connection(k, bad, h2), NoSolutionError);

    AbelianHom mismatched;
    mismatched.source = FinAbelianGroup::from_factors({}, 1);
    mismatched.target = CoeffGroup::qmodz();
    mismatched.free_images = {AbValue{Rational(1, 3)}};
    CHECK_THROWS_AS(hom_to_gerbe_connection(k, mismatched, h2), PreconditionError);
}

TEST_CASE("gauge_between recovers an explicit gauge or reports obstruction") {
    std::mt19937 rng(67);
    ComplexPtr k = fixture_complex("sphere");
    ChainQuotient h2 = homology_quotient(*k, 2);
    CoeffGroup z6 = parse_coeff_spec("cyclic:6");

    AbelianHom psi;
    psi.source = h2.group();
    psi.target = z6;
    psi.free_images = {AbValue{Rational(1, 6)}};
    TriangleLabeling b1 = hom_to_gerbe_connection(k, psi, h2);

    for (int trial = 0; trial < 10; ++trial) {
        AbelianEdgeLabeling lam = random_edge_gauge(k, z6, rng);
        TriangleLabeling b2 = apply_gauge(b1, lam);
        auto found = gauge_between(b1, b2);
        REQUIRE(found.has_value());
        CHECK(apply_gauge(b1, *found) == b2);
    }

    AbelianHom other = psi;
    other.free_images = {AbValue{Rational(5, 6)}};
    TriangleLabeling b3 = hom_to_gerbe_connection(k, other, h2);
    CHECK_FALSE(gauge_between(b1, b3).has_value());

    CHECK(gauge_between(b1, b1).has_value());
}

TEST_CASE("flat gauge classes on the projective plane include an exotic one") {
    // dim 2 means every labeling is flat, yet H2(rp2) = 0: the gauge classes
    // are measured by H^2(rp2; Z/2) = Z/2, invisible to gerbe holonomy.
    ComplexPtr k = fixture_complex("rp2");
    CoeffGroup z2 = parse_coeff_spec("cyclic:2");
    TriangleLabeling zero = TriangleLabeling::zero(k, z2);
    const auto& tris = k->simplices(2);
    REQUIRE(tris.size() == 10);
    int equivalent = 0;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        TriangleLabeling b = zero;
        for (std::size_t i = 0; i < 10; ++i)
            if (mask & (1u << i)) b.values[tris[i]] = AbValue{Rational(1, 2)};
        if (gauge_between(zero, b).has_value()) ++equivalent;
    }
    CHECK(equivalent == 512);  // exactly the coboundaries; two classes total
}

TEST_CASE("elementary homotopy moves apply only across triangles") {
    ComplexPtr sphere = fixture_complex("sphere");
    EdgePath p{0, {{0, 1}, {1, 2}, {2, 0}}};
    auto contracted = contract_across_triangle(*sphere, p, 0);
    REQUIRE(contracted.has_value());
    CHECK(contracted->steps == std::vector<EdgeStep>{{0, 2}, {2, 0}});

    auto expanded = expand_across_triangle(*sphere, *contracted, 0, 1);
    REQUIRE(expanded.has_value());
    CHECK(*expanded == p);

    CHECK_FALSE(contract_across_triangle(*sphere, p, 5).has_value());
    EdgePath backtrack{0, {{0, 1}, {1, 0}}};
    CHECK_FALSE(contract_across_triangle(*sphere, backtrack, 0).has_value());
    CHECK_FALSE(expand_across_triangle(*sphere, p, 0, 0).has_value());

    ComplexPtr circle = fixture_complex("circle");
    EdgePath walk{0, {{0, 1}, {1, 2}}};
    CHECK_FALSE(contract_across_triangle(*circle, walk, 0).has_value());
    CHECK_FALSE(expand_across_triangle(*circle, EdgePath{0, {{0, 1}}}, 0, 2).has_value());
}

TEST_CASE("flat holonomy is invariant under homotopy moves, non-flat is not") {
    std::mt19937 rng(73);
    ComplexPtr k = fixture_complex("torus");
    Presentation p = present_pi1(k, 0);
    GroupPtr g = make_group("sym:3");
    HomEnumeration homs = enumerate_homs(p, g, EnumMode::kCollect);
    std::uniform_int_distribution<std::size_t> pick(0, homs.homs.size() - 1);
    std::uniform_int_distribution<int> gen(0, p.generators - 1);

    for (int trial = 0; trial < 20; ++trial) {
        EdgeLabeling conn = hom_to_connection(p, homs.homs[pick(rng)]);
        EdgePath loop = path_concat(generator_loop(p, gen(rng)), generator_loop(p, gen(rng)));
        int base = loop_holonomy(conn, loop);
        for (std::size_t pos = 0; pos < loop.steps.size(); ++pos) {
            if (auto moved = contract_across_triangle(*k, loop, pos))
                CHECK(loop_holonomy(conn, *moved) == base);
            for (Vertex via = 0; via < k->vertex_count(); ++via) {
                if (auto moved = expand_across_triangle(*k, loop, pos, via))
                    CHECK(loop_holonomy(conn, *moved) == base);
            }
        }
    }

    // A curvature witness: contracting across a non-flat triangle shifts
    // the holonomy by exactly that curvature.
    ComplexPtr sphere = fixture_complex("sphere");
    GroupPtr z3 = make_group("cyclic:3");
    EdgeLabeling bent = EdgeLabeling::identity(sphere, z3);
    bent.set(0, 1, 1);
    EdgePath loop{0, {{0, 1}, {1, 2}, {2, 0}}};
    auto moved = contract_across_triangle(*sphere, loop, 0);
    REQUIRE(moved.has_value());
    CHECK(loop_holonomy(bent, loop) != loop_holonomy(bent, *moved));
}

TEST_CASE("holonomy only depends on the thin homotopy class") {
    std::mt19937 rng(79);
    ComplexPtr k = fixture_complex("torus");
    GroupPtr g = make_group("dihedral:4");
    std::uniform_int_distribution<int> nins(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        EdgeLabeling a = random_labeling(k, g, rng);  // need not be flat
        Presentation p = present_pi1(k, 0);
        std::uniform_int_distribution<int> gen(0, p.generators - 1);
        EdgePath loop = generator_loop(p, gen(rng));
        EdgePath padded = loop;
        int inserts = nins(rng);
        for (int i = 0; i < inserts; ++i) {
            std::uniform_int_distribution<std::size_t> at(0, padded.steps.size());
            std::size_t pos = at(rng);
            Vertex anchor = pos == 0 ? padded.basepoint : padded.steps[pos - 1].to;
            std::vector<Vertex> nbrs;
            for (const auto& e : k->simplices(1)) {
                if (e[0] == anchor) nbrs.push_back(e[1]);
                if (e[1] == anchor) nbrs.push_back(e[0]);
            }
            std::uniform_int_distribution<std::size_t> n(0, nbrs.size() - 1);
            Vertex other = nbrs[n(rng)];
            padded.steps.insert(padded.steps.begin() + static_cast<std::ptrdiff_t>(pos),
                                {EdgeStep{anchor, other}, EdgeStep{other, anchor}});
        }
        validate_path(*k, padded);
        CHECK(simplify_path(padded) == simplify_path(loop));
        CHECK(loop_holonomy(a, padded) == loop_holonomy(a, loop));
    }
}
