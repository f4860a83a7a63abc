#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "statesum/abelian.hpp"
#include "statesum/errors.hpp"
#include "statesum/finite_group.hpp"
#include "statesum/int_matrix.hpp"
#include "statesum/smith.hpp"

using namespace statesum;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Oracle: determinant by cofactor expansion along the first row.
Int det_cofactor(const IntMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Int term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// Oracle: rank by Gaussian elimination over the rationals.
std::size_t rank_rational(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m.at(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][col] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim = 6, int max_entry = 9) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-max_entry, max_entry);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    return m;
}

// All isomorphism types of finite abelian groups of order n, as factor lists.
void factor_lists_rec(Int n, Int min_factor, std::vector<Int>& cur,
                      std::vector<std::vector<Int>>& out) {
    if (n == 1) {
        out.push_back(cur);
        return;
    }
    for (Int f = min_factor; f <= n; ++f) {
        if (n % f != 0) continue;
        cur.push_back(f);
        factor_lists_rec(n / f, f, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Int>> factor_lists(int n) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    factor_lists_rec(Int(n), Int(2), cur, out);
    return out;
}

}  // namespace

TEST_CASE("integer matrices: products, transpose, determinant, rank") {
    IntMatrix a = from_rows({{1, 2}, {3, 4}});
    IntMatrix b = from_rows({{0, 1}, {1, 0}});
    IntMatrix ab = a * b;
    CHECK(ab == from_rows({{2, 1}, {4, 3}}));
    CHECK(a.transposed() == from_rows({{1, 3}, {2, 4}}));
    CHECK(a.determinant() == -2);
    CHECK(IntMatrix::identity(4).determinant() == 1);
    CHECK(a.rank() == 2);
    CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
    CHECK(IntMatrix(3, 5).rank() == 0);
    CHECK(IntMatrix(3, 5).is_zero());

    std::vector<Int> x{Int(5), Int(7)};
    auto ax = a.apply(x);
    CHECK(ax == std::vector<Int>{Int(19), Int(43)});
    auto xa = a.apply_left(x);
    CHECK(xa == std::vector<Int>{Int(26), Int(38)});
    CHECK(a.column(1) == std::vector<Int>{Int(2), Int(4)});
}

TEST_CASE("determinant and rank agree with elimination-free oracles") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::uniform_int_distribution<int> entry(-9, 9);
        std::size_t n = dim(rng);
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        CHECK(m.determinant() == det_cofactor(m));
    }
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m = random_matrix(rng);
        CHECK(m.rank() == rank_rational(m));
    }
}

TEST_CASE("smith normal form of [[2,4],[6,8]] is diag(2,4)") {
    SmithForm s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 4);
    CHECK(s.d.at(0, 1) == 0);
    CHECK(s.d.at(1, 0) == 0);
    CHECK(s.rank() == 2);
}

TEST_CASE("smith normal form: degenerate shapes") {
    SmithForm z = smith_normal_form(IntMatrix(3, 2));
    CHECK(z.d.is_zero());
    CHECK(z.rank() == 0);
    CHECK(z.u == IntMatrix::identity(3));
    CHECK(z.v == IntMatrix::identity(2));

    SmithForm id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.d == IntMatrix::identity(3));

    SmithForm row = smith_normal_form(from_rows({{6, 10, 15}}));
    CHECK(row.diagonal() == std::vector<Int>{Int(1)});

    SmithForm empty = smith_normal_form(IntMatrix(0, 4));
    CHECK(empty.rank() == 0);
    CHECK(empty.v == IntMatrix::identity(4));
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a = random_matrix(rng);
        SmithForm s = smith_normal_form(a);

        CHECK(s.u * a * s.v == s.d);
        CHECK(s.u * s.u_inv == IntMatrix::identity(a.rows()));
        CHECK(s.v * s.v_inv == IntMatrix::identity(a.cols()));
        Int du = s.u.determinant();
        Int dv = s.v.determinant();
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));

        auto diag = s.diagonal();
        for (std::size_t i = 0; i < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (i + 1 < diag.size() && diag[i] != 0) {
                if (diag[i + 1] != 0) CHECK(diag[i + 1] % diag[i] == 0);
            }
            if (diag[i] == 0 && i + 1 < diag.size()) CHECK(diag[i + 1] == 0);
        }
        for (std::size_t i = 0; i < s.d.rows(); ++i)
            for (std::size_t j = 0; j < s.d.cols(); ++j)
                if (i != j) CHECK(s.d.at(i, j) == 0);

        CHECK(s.rank() == rank_rational(a));
    }
}

TEST_CASE("smith diagonal matches the gcd-of-minors invariants on random 3x3") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = entry(rng);

        Int g1 = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) g1 = gcd_int(g1, m.at(i, j));
        Int g2 = 0;
        for (std::size_t i1 = 0; i1 < 3; ++i1)
            for (std::size_t i2 = i1 + 1; i2 < 3; ++i2)
                for (std::size_t j1 = 0; j1 < 3; ++j1)
                    for (std::size_t j2 = j1 + 1; j2 < 3; ++j2) {
                        Int minor = m.at(i1, j1) * m.at(i2, j2) - m.at(i1, j2) * m.at(i2, j1);
                        g2 = gcd_int(g2, minor);
                    }
        Int g3 = det_cofactor(m);
        if (g3 < 0) g3 = -g3;

        auto d = smith_normal_form(m).diagonal();
        CHECK(d[0] == g1);
        CHECK(d[0] * d[1] == g2);
        CHECK(d[0] * d[1] * d[2] == g3);
    }
}

TEST_CASE("finitely generated abelian groups normalize to invariant factors") {
    CHECK(FinAbelianGroup::from_factors({Int(2), Int(3)}).factors() == std::vector<Int>{Int(6)});
    CHECK(FinAbelianGroup::from_factors({Int(4), Int(6)}).factors() ==
          std::vector<Int>{Int(2), Int(12)});
    CHECK(FinAbelianGroup::from_factors({Int(2), Int(2), Int(4)}).factors() ==
          std::vector<Int>{Int(2), Int(2), Int(4)});
    CHECK(FinAbelianGroup::from_factors({Int(1), Int(5), Int(1)}).factors() ==
          std::vector<Int>{Int(5)});
    CHECK(FinAbelianGroup::from_factors({Int(12), Int(18)}).factors() ==
          std::vector<Int>{Int(6), Int(36)});

    FinAbelianGroup g = FinAbelianGroup::from_factors({Int(2), Int(4)}, 2);
    CHECK(g.free_rank() == 2);
    CHECK_FALSE(g.is_finite());
    CHECK_THROWS_AS(g.order(), PreconditionError);
    CHECK(g.describe() == "Z^2 + Z/2 + Z/4");

    CHECK(FinAbelianGroup().is_trivial());
    CHECK(FinAbelianGroup().describe() == "0");
    CHECK(FinAbelianGroup().order() == 1);
    CHECK(FinAbelianGroup::from_factors({Int(6)}).order() == 6);
    CHECK(FinAbelianGroup::from_factors({}, 1).describe() == "Z");
}

TEST_CASE("abelian hom counts match generator-by-generator brute force") {
    FinAbelianGroup z = FinAbelianGroup::from_factors({}, 1);
    CHECK(count_abelian_homs(z, FinAbelianGroup::from_factors({Int(5)})) == 5);
    CHECK(count_abelian_homs(FinAbelianGroup::from_factors({Int(2)}),
                             FinAbelianGroup::from_factors({Int(2)})) == 2);
    FinAbelianGroup a = FinAbelianGroup::from_factors({Int(4)}, 1);
    FinAbelianGroup h = FinAbelianGroup::from_factors({Int(2), Int(4)});
    CHECK(count_abelian_homs(a, h) == 64);
    CHECK(count_abelian_homs(FinAbelianGroup(), h) == 1);
    CHECK_THROWS_AS(count_abelian_homs(a, z), UnsupportedError);

    // Oracle: a generator of order d can map to exactly the elements of H
    // killed by d; find those by repeated addition in the mixed-radix model.
    for (int na = 1; na <= 16; ++na) {
        for (const auto& fa : factor_lists(na)) {
            for (int nh = 1; nh <= 16; ++nh) {
                for (const auto& fh : factor_lists(nh)) {
                    FinAbelianGroup ga = FinAbelianGroup::from_factors(fa);
                    FinAbelianGroup gh = FinAbelianGroup::from_factors(fh);
                    Int expected = 1;
                    for (const Int& d : ga.factors()) {
                        Int killed = 0;
                        std::vector<Int> tuple(gh.factors().size(), 0);
                        bool done = false;
                        while (!done) {
                            bool dies = true;
                            for (std::size_t c = 0; c < tuple.size(); ++c) {
                                Int sum = 0;
                                for (Int rep = 0; rep < d; ++rep)
                                    sum = (sum + tuple[c]) % gh.factors()[c];
                                if (sum != 0) dies = false;
                            }
                            if (dies) ++killed;
                            done = true;
                            for (std::size_t c = tuple.size(); c-- > 0;) {
                                tuple[c] += 1;
                                if (tuple[c] < gh.factors()[c]) {
                                    done = false;
                                    break;
                                }
                                tuple[c] = 0;
                            }
                        }
                        expected *= killed;
                    }
                    CHECK(count_abelian_homs(ga, gh) == expected);
                }
            }
        }
    }
}

TEST_CASE("mod1 canonical representatives") {
    CHECK(mod1(Rational(7, 2)) == Rational(1, 2));
    CHECK(mod1(Rational(-1, 3)) == Rational(2, 3));
    CHECK(mod1(Rational(5)) == 0);
    CHECK(mod1(Rational(-9, 4)) == Rational(3, 4));
    CHECK(mod1(Rational(0)) == 0);
}

TEST_CASE("coefficient group parsing and description") {
    CHECK(parse_coeff_spec("u1").is_pure_qmodz());
    CHECK(parse_coeff_spec("U1").is_pure_qmodz());
    CHECK(parse_coeff_spec("U(1)").is_pure_qmodz());
    CHECK(parse_coeff_spec("qmodz").is_pure_qmodz());
    CHECK(parse_coeff_spec("cyclic:12").moduli() == std::vector<Int>{Int(12)});
    CHECK(parse_coeff_spec("abelian:2,4").moduli() == std::vector<Int>{Int(2), Int(4)});
    CHECK(parse_coeff_spec("u1").describe() == "u1");
    CHECK(parse_coeff_spec("cyclic:5").describe() == "cyclic:5");
    CHECK(parse_coeff_spec("abelian:2,4").describe() == "abelian:2,4");
    CHECK_THROWS_AS(parse_coeff_spec("so3"), MalformedInputError);
    CHECK_THROWS_AS(parse_coeff_spec("cyclic:x"), MalformedInputError);

    CHECK(CoeffGroup::from_group(FinAbelianGroup::from_factors({Int(6)})).describe() == "cyclic:6");
    CHECK_FALSE(parse_coeff_spec("u1").is_finite());
    CHECK(parse_coeff_spec("abelian:2,4").order() == 8);
    CHECK_THROWS_AS(parse_coeff_spec("u1").order(), PreconditionError);
}

TEST_CASE("coefficient group arithmetic and membership") {
    CoeffGroup z4 = parse_coeff_spec("cyclic:4");
    AbValue a{Rational(3, 4)};
    AbValue b{Rational(1, 2)};
    CHECK(z4.add(a, b) == AbValue{Rational(1, 4)});
    CHECK(z4.sub(b, a) == AbValue{Rational(3, 4)});
    CHECK(z4.negate(a) == AbValue{Rational(1, 4)});
    CHECK(z4.scale(Int(3), a) == AbValue{Rational(1, 4)});
    CHECK(z4.scale(Int(-1), a) == AbValue{Rational(1, 4)});
    CHECK(z4.is_zero(z4.scale(Int(4), a)));

    CHECK_THROWS_AS(z4.reduce(AbValue{Rational(1, 3)}), MalformedInputError);
    CHECK_THROWS_AS(z4.reduce(AbValue{Rational(0), Rational(0)}), MalformedInputError);
    CHECK(z4.reduce(AbValue{Rational(9, 4)}) == AbValue{Rational(1, 4)});

    CoeffGroup u1 = CoeffGroup::qmodz();
    CHECK(u1.reduce(AbValue{Rational(22, 7)}) == AbValue{Rational(1, 7)});

    auto els = z4.elements();
    REQUIRE(els.size() == 4);
    CHECK(els[0] == AbValue{Rational(0)});
    CHECK(els[1] == AbValue{Rational(1, 4)});
    CHECK(els[3] == AbValue{Rational(3, 4)});

    CoeffGroup z23 = parse_coeff_spec("abelian:2,3");
    auto e6 = z23.elements();
    REQUIRE(e6.size() == 6);
    CHECK(e6[1] == AbValue{Rational(0), Rational(1, 3)});  // last component fastest
    CHECK(e6[3] == AbValue{Rational(1, 2), Rational(0)});
}

TEST_CASE("solving d*x = c in coefficient groups") {
    CoeffGroup z4 = parse_coeff_spec("cyclic:4");
    AbValue x;
    REQUIRE(z4.try_solve_scale(Int(2), AbValue{Rational(1, 2)}, &x));
    CHECK(x == AbValue{Rational(1, 4)});
    CHECK(z4.reduce(z4.scale(Int(2), x)) == AbValue{Rational(1, 2)});
    CHECK_FALSE(z4.try_solve_scale(Int(2), AbValue{Rational(1, 4)}, &x));

    CoeffGroup z6 = parse_coeff_spec("cyclic:6");
    REQUIRE(z6.try_solve_scale(Int(4), AbValue{Rational(1, 3)}, &x));
    CHECK(x == AbValue{Rational(1, 3)});  // smallest of the two solutions

    CoeffGroup u1 = CoeffGroup::qmodz();
    REQUIRE(u1.try_solve_scale(Int(3), AbValue{Rational(1, 3)}, &x));
    CHECK(x == AbValue{Rational(1, 9)});
    REQUIRE(u1.try_solve_scale(Int(0), AbValue{Rational(0)}, &x));
    CHECK(x == AbValue{Rational(0)});
    CHECK_FALSE(u1.try_solve_scale(Int(0), AbValue{Rational(1, 2)}, &x));

    // Every solvable instance round-trips across all small cases.
    for (int m = 2; m <= 8; ++m) {
        CoeffGroup g = CoeffGroup::from_group(FinAbelianGroup::from_factors({Int(m)}));
        for (int d = 0; d <= 6; ++d) {
            for (int c = 0; c < m; ++c) {
                AbValue target{Rational(c, m)};
                AbValue sol;
                bool ok = g.try_solve_scale(Int(d), target, &sol);
                bool expect = false;
                for (int cand = 0; cand < m; ++cand)
                    if ((d * cand) % m == c) expect = true;
                CHECK(ok == expect);
                if (ok) CHECK(g.reduce(g.scale(Int(d), sol)) == target);
            }
        }
    }
}

TEST_CASE("rational string round trips") {
    CHECK(rational_to_string(Rational(0)) == "0");
    CHECK(rational_to_string(Rational(1, 2)) == "1/2");
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("0") == Rational(0));
    CHECK_THROWS_AS(rational_from_string("a/b"), MalformedInputError);
    CHECK_THROWS_AS(rational_from_string("1/0"), MalformedInputError);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    for (int i = 0; i < 50; ++i) {
        Rational q(num(rng), den(rng));
        CHECK(rational_from_string(rational_to_string(q)) == q);
    }
}

TEST_CASE("cyclic groups: 3 + 2 = 1 in Z/4") {
    FiniteGroup g = group_from_spec("cyclic:4");
    CHECK(g.order() == 4);
    CHECK(g.mul(3, 2) == 1);
    CHECK(g.identity() == 0);
    CHECK(g.inv(3) == 1);
    CHECK(g.is_abelian());
    CHECK(g.element_order(0) == 1);
    CHECK(g.element_order(1) == 4);
    CHECK(g.element_order(2) == 2);
    REQUIRE(g.abelian_view().has_value());
    CHECK(g.abelian_view()->factors() == std::vector<Int>{Int(4)});
}

TEST_CASE("symmetric groups: order, composition convention, conjugacy") {
    for (int n = 1; n <= 5; ++n) {
        FiniteGroup s = group_from_spec("sym:" + std::to_string(n));
        int fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(s.order() == fact);
    }
    CHECK_THROWS_AS(group_from_spec("sym:7"), UnsupportedError);

    FiniteGroup s3 = group_from_spec("sym:3");
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.conjugacy_class_count() == 3);
    // ranks: 2 = (1,0,2) swaps 0,1; 1 = (0,2,1) swaps 1,2; composite maps
    // 0->1, 1->2, 2->0, which is (1,2,0) = rank 3.
    CHECK(s3.mul(2, 1) == 3);

    std::multiset<int> orders;
    for (int a = 0; a < 6; ++a) orders.insert(s3.element_order(a));
    CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});

    for (int r = 0; r < 24; ++r) CHECK(rank_of_permutation(permutation_of_rank(4, r)) == r);
}

TEST_CASE("dihedral groups") {
    FiniteGroup d4 = group_from_spec("dihedral:4");
    CHECK(d4.order() == 8);
    CHECK_FALSE(d4.is_abelian());
    int r = 1, s = 4;
    CHECK(d4.element_order(r) == 4);
    CHECK(d4.element_order(s) == 2);
    CHECK(d4.mul(s, d4.mul(r, s)) == d4.inv(r));

    CHECK(group_from_spec("dihedral:1").order() == 2);
    CHECK(group_from_spec("dihedral:2").is_abelian());
    FiniteGroup d3 = group_from_spec("dihedral:3");
    CHECK(d3.order() == 6);
    CHECK(d3.conjugacy_class_count() == 3);
}

TEST_CASE("abelian product groups") {
    FiniteGroup g = group_from_spec("abelian:2,4");
    CHECK(g.order() == 8);
    CHECK(g.is_abelian());
    int max_order = 0;
    for (int a = 0; a < 8; ++a) max_order = std::max(max_order, g.element_order(a));
    CHECK(max_order == 4);
    REQUIRE(g.abelian_view().has_value());
    CHECK(g.abelian_view()->factors() == std::vector<Int>{Int(2), Int(4)});
    CHECK(group_from_spec("abelian:2,3").abelian_view()->factors() == std::vector<Int>{Int(6)});
    CHECK(group_from_spec("abelian:1").order() == 1);
}

TEST_CASE("conjugacy class counts match a brute-force orbit partition") {
    for (const char* spec : {"sym:3", "sym:4", "dihedral:4", "dihedral:6", "abelian:2,4",
                             "cyclic:5", "table"}) {
        FiniteGroup g = std::string(spec) == "table"
                            ? FiniteGroup::from_table({{0, 1}, {1, 0}})
                            : group_from_spec(spec);
        std::vector<int> cls(g.order(), -1);
        int classes = 0;
        for (int a = 0; a < g.order(); ++a) {
            if (cls[a] >= 0) continue;
            for (int x = 0; x < g.order(); ++x) cls[g.mul(x, g.mul(a, g.inv(x)))] = classes;
            ++classes;
        }
        CHECK(g.conjugacy_class_count() == classes);
    }
}

TEST_CASE("element orders match repeated multiplication") {
    FiniteGroup s4 = group_from_spec("sym:4");
    for (int a = 0; a < s4.order(); ++a) {
        int acc = a, n = 1;
        while (acc != s4.identity()) {
            acc = s4.mul(acc, a);
            ++n;
        }
        CHECK(s4.element_order(a) == n);
    }
}

TEST_CASE("cayley table validation") {
    FiniteGroup z3 = FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(z3.order() == 3);
    CHECK(z3.inv(1) == 2);

    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), MalformedInputError);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 7}, {1, 0}}), MalformedInputError);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {0, 0}}), MalformedInputError);
    CHECK_THROWS_AS(FiniteGroup::from_table({}), MalformedInputError);

    // Z/5 addition with two entries swapped: still a valid identity row and
    // inverses, but (1*1)*2 != 1*(1*2).
    std::vector<std::vector<int>> tampered(5, std::vector<int>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) tampered[i][j] = (i + j) % 5;
    std::swap(tampered[1][1], tampered[1][2]);
    CHECK_THROWS_AS(FiniteGroup::from_table(tampered), MalformedInputError);
}

TEST_CASE("group specs: table files and rejection of malformed specs") {
    std::string path = "statesum_test_table.json";
    {
        std::ofstream out(path);
        out << "[[0,1,2],[1,2,0],[2,0,1]]";
    }
    FiniteGroup g = group_from_spec("table:" + path);
    CHECK(g.order() == 3);
    std::remove(path.c_str());

    CHECK_THROWS_AS(group_from_spec("table:/no/such/file.json"), MalformedInputError);
    CHECK_THROWS_AS(group_from_spec("quaternion:8"), MalformedInputError);
    CHECK_THROWS_AS(group_from_spec("cyclic:0"), MalformedInputError);
    CHECK_THROWS_AS(group_from_spec("cyclic:-3"), MalformedInputError);
    CHECK_THROWS_AS(group_from_spec("abelian:"), MalformedInputError);
    CHECK_THROWS_AS(group_from_spec(""), MalformedInputError);

    std::string bad = "statesum_test_bad.json";
    {
        std::ofstream out(bad);
        out << "{not json";
    }
    CHECK_THROWS_AS(group_from_spec("table:" + bad), MalformedInputError);
    std::remove(bad.c_str());
}
