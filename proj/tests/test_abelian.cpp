#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "accube/abelian.hpp"

#include <random>

using namespace accube;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    size_t nr = rows.size(), nc = nr ? rows[0].size() : 0;
    IntMatrix m(nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("group literals parse and print") {
    CHECK(FiniteAbelianGroup::parse("1").rank() == 0);
    CHECK(FiniteAbelianGroup::parse("Z2").to_string() == "Z2");
    CHECK(FiniteAbelianGroup::parse("Z2xZ4").to_string() == "Z2xZ4");
    CHECK(FiniteAbelianGroup::parse("Z12xZ2").order() == 24);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("Zx"), ParseError);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z2x"), ParseError);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("Z1"), ParseError);
}

TEST_CASE("canonical form is the invariant factor decomposition") {
    CHECK(FiniteAbelianGroup({4, 2}).canonical().moduli() == std::vector<long>{2, 4});
    CHECK(FiniteAbelianGroup({2, 3}).canonical().moduli() == std::vector<long>{6});
    CHECK(FiniteAbelianGroup({2, 2}).canonical().moduli() == std::vector<long>{2, 2});
    CHECK(FiniteAbelianGroup({6, 4}).canonical().moduli() == std::vector<long>{2, 12});
    // idempotent and order preserving
    auto g = FiniteAbelianGroup({12, 10, 8}).canonical();
    CHECK(g.canonical().moduli() == g.moduli());
    CHECK(g.order() == 12 * 10 * 8);
    CHECK(FiniteAbelianGroup({4, 2}).isomorphic_to(FiniteAbelianGroup({2, 4})));
    CHECK_FALSE(FiniteAbelianGroup({8}).isomorphic_to(FiniteAbelianGroup({2, 4})));
}

TEST_CASE("element algebra") {
    auto g = FiniteAbelianGroup::parse("Z2xZ4");
    CHECK(g.order_index() == 8);
    GroupElem a{1, 3}, b{1, 2};
    CHECK(g.add(a, b) == GroupElem{0, 1});
    CHECK(g.neg(a) == GroupElem{1, 1});
    CHECK(g.is_zero(g.add(a, g.neg(a))));
    CHECK(g.element_order(GroupElem{0, 1}) == 4);
    CHECK(g.element_order(GroupElem{1, 2}) == 2);
    // canonical order is lexicographic on residues
    CHECK(g.element_at(0) == GroupElem{0, 0});
    CHECK(g.element_at(1) == GroupElem{0, 1});
    CHECK(g.element_at(4) == GroupElem{1, 0});
    for (size_t i = 0; i < 8; ++i) CHECK(g.index_of(g.element_at(i)) == i);
    // associativity + commutativity over the whole group
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) {
            auto x = g.element_at(i), y = g.element_at(j);
            CHECK(g.add(x, y) == g.add(y, x));
            for (size_t k = 0; k < 8; ++k) {
                auto z = g.element_at(k);
                CHECK(g.add(g.add(x, y), z) == g.add(x, g.add(y, z)));
            }
        }
}

TEST_CASE("smith normal form on hand-checked matrices") {
    SUBCASE("identity") {
        auto snf = smith_normal_form(IntMatrix::identity(2));
        CHECK(snf.d == IntMatrix::identity(2));
    }
    SUBCASE("hand elimination of [[2,4],[6,8]]") {
        auto m = from_rows({{2, 4}, {6, 8}});
        auto snf = smith_normal_form(m);
        CHECK(snf.d.at(0, 0) == 2);
        CHECK(snf.d.at(1, 1) == 4);
        CHECK(snf.d.at(0, 1) == 0);
        CHECK(snf.d.at(1, 0) == 0);
        CHECK(snf.u * m * snf.v == snf.d);
        CHECK(abs(determinant(snf.u)) == 1);
        CHECK(abs(determinant(snf.v)) == 1);
    }
    SUBCASE("zero 3x2") {
        auto snf = smith_normal_form(IntMatrix::zero(3, 2));
        CHECK(snf.d.is_zero());
    }
}

TEST_CASE("smith normal form random property sweep") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        size_t nr = 1 + rng() % 6, nc = 1 + rng() % 6;
        IntMatrix m(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) m.at(i, j) = static_cast<long>(rng() % 19) - 9;
        auto snf = smith_normal_form(m);
        CHECK(snf.u * m * snf.v == snf.d);
        CHECK(abs(determinant(snf.u)) == 1);
        CHECK(abs(determinant(snf.v)) == 1);
        Int prev = 0;
        for (size_t t = 0; t < std::min(nr, nc); ++t) {
            const Int& d = snf.d.at(t, t);
            CHECK(d >= 0);
            if (prev != 0) {
                if (d != 0) CHECK(d % prev == 0);
            }
            if (d != 0) prev = d;
            for (size_t j = 0; j < nc; ++j)
                if (j != t) CHECK(snf.d.at(t, j) == 0);
        }
    }
}

TEST_CASE("homology_of_pair") {
    SUBCASE("Z / im(2)") {
        IntMatrix d_out(1, 1); // zero map
        IntMatrix d_in(1, 1);
        d_in.at(0, 0) = 2;
        auto h = homology_of_pair(d_out, d_in);
        CHECK(h.free_rank == 0);
        CHECK(h.torsion.to_string() == "Z2");
    }
    SUBCASE("full-rank kernel is zero") {
        auto h = homology_of_pair(IntMatrix::identity(3), IntMatrix::zero(3, 1));
        CHECK(h.free_rank == 0);
        CHECK(h.torsion.rank() == 0);
    }
    SUBCASE("free summand is reported as rank") {
        auto h = homology_of_pair(IntMatrix::zero(1, 1), IntMatrix::zero(1, 1));
        CHECK(h.free_rank == 1);
        CHECK(h.to_string() == "Z^1");
    }
    SUBCASE("rejects non-composable pair") {
        IntMatrix d_out = IntMatrix::identity(2);
        IntMatrix d_in = IntMatrix::identity(2);
        CHECK_THROWS(homology_of_pair(d_out, d_in));
    }
}

TEST_CASE("hom groups") {
    auto z2 = FiniteAbelianGroup::parse("Z2");
    auto z3 = FiniteAbelianGroup::parse("Z3");
    auto z4 = FiniteAbelianGroup::parse("Z4");
    CHECK(hom_group(z2, z4).to_string() == "Z2");
    CHECK(hom_group(z2, z3).to_string() == "1");
    CHECK(hom_group(FiniteAbelianGroup{}, z4).to_string() == "1");

    // order of Hom matches brute-force count for small groups
    std::vector<FiniteAbelianGroup> gs{z2, z3, z4, FiniteAbelianGroup({2, 2}),
                                       FiniteAbelianGroup({2, 4}), FiniteAbelianGroup({16})};
    for (const auto& g : gs)
        for (const auto& b : gs)
            CHECK(hom_group(g, b).order() == count_homomorphisms_bruteforce(g, b));
}

TEST_CASE("solve_affine") {
    IntMatrix m(1, 1);
    m.at(0, 0) = 2;
    SUBCASE("2x = 2 mod 4 has least solution 1") {
        auto x = solve_affine(m, {4}, {2});
        REQUIRE(x.has_value());
        CHECK(*x == std::vector<long>{1});
    }
    SUBCASE("2x = 1 mod 4 is unsolvable") {
        CHECK_FALSE(solve_affine(m, {4}, {1}).has_value());
    }
    SUBCASE("homogeneous system has least solution 0") {
        auto x = solve_affine(m, {4}, {0});
        REQUIRE(x.has_value());
        CHECK(*x == std::vector<long>{0});
    }
    SUBCASE("mixed moduli") {
        // x + y = 1 mod 2, x = 2 mod 3
        IntMatrix a(2, 2);
        a.at(0, 0) = 1;
        a.at(0, 1) = 1;
        a.at(1, 0) = 1;
        auto x = solve_affine(a, {2, 3}, {1, 2});
        REQUIRE(x.has_value());
        CHECK(((*x)[0] + (*x)[1]) % 2 == 1);
        CHECK((*x)[0] % 3 == 2);
        // least solution: x=2 forces parity of y odd => y=1? lex order tries x minimal first
        CHECK((*x)[0] == 2);
    }
    SUBCASE("dimension mismatch is an error") {
        CHECK_THROWS(solve_affine(m, {4, 4}, {0}));
    }
}

TEST_CASE("lex_min_coset and howell machinery") {
    // coset of <(2,0),(0,2)> in (Z/4)^2 through (3,3) has least point (1,1)
    auto x = lex_min_coset({3, 3}, {{2, 0}, {0, 2}}, 4);
    CHECK(x == std::vector<long>{1, 1});
    // subgroup order
    CHECK(subgroup_order_mod_q({{2, 0}, {0, 2}}, 4) == 4);
    auto elems = enumerate_subgroup_mod_q({{2, 0}, {0, 2}}, 4, 2, 100);
    CHECK(elems.size() == 4);
}

TEST_CASE("solve_affine returns the lexicographically least solution") {
    // random small systems, brute-forced over the full solution space
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 120; ++trial) {
        size_t nr = 1 + rng() % 3, nc = 1 + rng() % 3;
        long mods[] = {2, 3, 4, 6};
        std::vector<long> target(nr);
        long L = 1;
        for (auto& m : target) {
            m = mods[rng() % 4];
            L = std::lcm(L, m);
        }
        IntMatrix m(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) m.at(i, j) = static_cast<long>(rng() % 7) - 3;
        std::vector<long> b(nr);
        for (auto& v : b) v = static_cast<long>(rng() % 6);
        auto got = solve_affine(m, target, b);
        // brute force over [0,L)^nc in lexicographic order
        std::optional<std::vector<long>> expect;
        std::vector<long> x(nc, 0);
        for (;;) {
            bool ok = true;
            for (size_t i = 0; i < nr && ok; ++i) {
                long acc = 0;
                for (size_t j = 0; j < nc; ++j) acc += m.at(i, j).get_si() * x[j];
                if (((acc - b[i]) % target[i] + target[i]) % target[i] != 0) ok = false;
            }
            if (ok) {
                expect = x;
                break;
            }
            size_t p = nc;
            bool done = false;
            while (p-- > 0) {
                if (++x[p] < L) break;
                x[p] = 0;
                if (p == 0) done = true;
            }
            if (done) break;
        }
        CHECK(got == expect);
    }
}

TEST_CASE("element orders divide the exponent") {
    for (const char* lit : {"Z2", "Z6", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2"}) {
        auto g = FiniteAbelianGroup::parse(lit);
        Int order = 1;
        for (long m : g.moduli()) order *= m;
        CHECK(g.order() == order);
        for (size_t i = 0; i < g.order_index(); ++i)
            CHECK(g.exponent() % g.element_order(g.element_at(i)) == 0);
    }
}

TEST_CASE("group homomorphisms and isomorphism enumeration") {
    auto z4 = FiniteAbelianGroup::parse("Z4");
    auto z22 = FiniteAbelianGroup::parse("Z2xZ2");
    CHECK(enumerate_isomorphisms(z4, z22).empty());
    CHECK(enumerate_isomorphisms(z4, z4).size() == 2);   // 1, 3
    CHECK(enumerate_isomorphisms(z22, z22).size() == 6); // GL(2,2)
    auto isos = enumerate_isomorphisms(z4, z4);
    CHECK(isos[0].apply(GroupElem{1}) == GroupElem{1}); // identity comes first
    auto triv = FiniteAbelianGroup{};
    CHECK(enumerate_isomorphisms(triv, triv).size() == 1);
}

TEST_CASE("quotients of modular subgroups") {
    // (Z/4)^1: kernel = all, image = <2> -> quotient Z2
    auto q = quotient_group_mod_q({{1}}, {{2}}, 4, 1);
    CHECK(q.to_string() == "Z2");
    auto q2 = quotient_group_mod_q({{1, 0}, {0, 1}}, {}, 2, 2);
    CHECK(q2.to_string() == "Z2xZ2");
}

TEST_CASE("canonicalize_group_table recovers canonical groups with the identity map") {
    for (const char* lit : {"Z2", "Z3", "Z4", "Z2xZ2", "Z2xZ4", "Z3xZ3", "Z6"}) {
        auto g = FiniteAbelianGroup::parse(lit);
        size_t n = g.order_index();
        std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                table[i][j] = g.index_of(g.add(g.element_at(i), g.element_at(j)));
        auto iso = canonicalize_group_table(table, 0);
        CHECK(iso.group.moduli() == g.canonical().moduli());
        if (g.moduli() == g.canonical().moduli()) {
            for (size_t i = 0; i < n; ++i) CHECK(iso.from_canonical[i] == i);
        }
    }
    // a scrambled presentation still canonicalizes to the right group
    auto g = FiniteAbelianGroup({6}); // relabel elements by +1 shift
    std::vector<size_t> perm{3, 1, 4, 0, 5, 2};
    std::vector<size_t> inv(6);
    for (size_t i = 0; i < 6; ++i) inv[perm[i]] = i;
    std::vector<std::vector<size_t>> table(6, std::vector<size_t>(6));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j)
            table[i][j] = perm[g.index_of(g.add(g.element_at(inv[i]), g.element_at(inv[j])))];
    auto iso = canonicalize_group_table(table, perm[0]);
    CHECK(iso.group.to_string() == "Z6");
}

TEST_CASE("row lattice accumulation matches dense SNF") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        size_t nc = 2 + rng() % 4;
        size_t nr = 1 + rng() % 6;
        IntMatrix m(nr, nc);
        RowLattice lat(nc);
        for (size_t i = 0; i < nr; ++i) {
            std::vector<Int> row(nc);
            for (size_t j = 0; j < nc; ++j) {
                m.at(i, j) = static_cast<long>(rng() % 7) - 3;
                row[j] = m.at(i, j);
            }
            lat.add_row(row);
        }
        // the lattice basis and the original rows must generate identical
        // lattices: same SNF invariants of the stacked matrices
        IntMatrix b = lat.basis();
        auto inv_of = [](const IntMatrix& x) {
            auto snf = smith_normal_form(x);
            std::vector<Int> ds;
            for (size_t t = 0; t < std::min(x.rows(), x.cols()); ++t)
                if (snf.d.at(t, t) != 0) ds.push_back(snf.d.at(t, t));
            return ds;
        };
        CHECK(inv_of(m) == inv_of(b));
    }
}
