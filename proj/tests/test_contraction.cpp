#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracon/contraction.hpp"

using namespace paracon;

namespace {

QVector unit(int dim, int a) {
    QVector v = QVector::Zero(dim);
    v(a) = 1;
    return v;
}

struct Setup {
    AlgebraBasis g;
    ParabolicDecomposition p;
    ContractedAlgebra q;
    Setup(LieType t, ParabolicSpec s)
        : g(build_algebra(t)), p(build_parabolic(g, s)), q(contract(p)) {}
};

} // namespace

TEST_CASE("n_- is an abelian ideal of q") {
    Setup s({Family::A, 2}, {{2, 1}, 0});
    for (int i : s.p.idx_nminus)
        for (int j : s.p.idx_nminus)
            CHECK(s.q.bracket(unit(s.q.dim, i), unit(s.q.dim, j)).isZero(0));
}

TEST_CASE("the bracket on p x p is untouched") {
    Setup s({Family::C, 2}, {{1}, 2});
    std::vector<int> idx_p = s.p.idx_n;
    idx_p.insert(idx_p.end(), s.p.idx_levi.begin(), s.p.idx_levi.end());
    for (int i : idx_p)
        for (int j : idx_p)
            CHECK(s.q.bracket(unit(s.q.dim, i), unit(s.q.dim, j)) ==
                  s.g.bracket(unit(s.g.dim, i), unit(s.g.dim, j)));
}

TEST_CASE("mixed brackets lose their p-component") {
    Setup s({Family::A, 2}, {{2, 1}, 0});
    // [E13, E31] lies in the diagonal, so the contracted bracket kills it
    int e13 = -1, e31 = -1;
    for (int a = 0; a < s.g.dim; ++a) {
        if (s.g.lead[a] == std::pair(0, 2)) e13 = a;
        if (s.g.lead[a] == std::pair(2, 0)) e31 = a;
    }
    REQUIRE(e13 >= 0);
    REQUIRE(e31 >= 0);
    CHECK_FALSE(s.g.bracket(unit(s.g.dim, e13), unit(s.g.dim, e31)).isZero(0));
    CHECK(s.q.bracket(unit(s.q.dim, e13), unit(s.q.dim, e31)).isZero(0));
    // generally: mixed brackets agree with the projection of the real bracket
    for (int i : s.p.idx_n)
        for (int j : s.p.idx_nminus) {
            QVector full = s.g.bracket(unit(s.g.dim, i), unit(s.g.dim, j));
            QVector proj = s.p.restrict_to(full, Region::lower);
            CHECK(s.q.bracket(unit(s.q.dim, i), unit(s.q.dim, j)) == proj);
        }
}

TEST_CASE("degenerate contraction is the identity on structure") {
    Setup s({Family::A, 2}, {{3}, 0});
    for (int i = 0; i < s.g.dim; ++i)
        for (int j = 0; j < s.g.dim; ++j)
            CHECK(s.q.bracket_list(i, j) == s.g.bracket_list(i, j));
}

TEST_CASE("contracted bracket satisfies Jacobi on random triples") {
    SplitMix64 gen(9);
    for (auto [t, spec] : std::vector<std::pair<LieType, ParabolicSpec>>{
             {{Family::A, 2}, {{2, 1}, 0}},
             {{Family::C, 3}, {{2}, 2}},
             {{Family::B, 2}, {{1}, 3}}}) {
        Setup s(t, spec);
        for (int trial = 0; trial < 100; ++trial) {
            QVector x = random_point(s.q.dim, gen, 9);
            QVector y = random_point(s.q.dim, gen, 9);
            QVector z = random_point(s.q.dim, gen, 9);
            QVector sum = s.q.bracket(s.q.bracket(x, y), z) +
                          s.q.bracket(s.q.bracket(y, z), x) +
                          s.q.bracket(s.q.bracket(z, x), y);
            CHECK(sum.isZero(0));
        }
    }
}

TEST_CASE("family bracket: t = 1 recovers the original bracket") {
    SplitMix64 gen(13);
    Setup s({Family::A, 2}, {{2, 1}, 0});
    QVector x = random_point(s.g.dim, gen, 9);
    QVector y = random_point(s.g.dim, gen, 9);
    CHECK(family_bracket(s.p, x, y, Rat(1)) == s.g.bracket(x, y));
    CHECK_THROWS_AS(family_bracket(s.p, x, y, Rat(0)), std::invalid_argument);
}

TEST_CASE("family bracket is constant in t on p x p") {
    SplitMix64 gen(14);
    Setup s({Family::C, 2}, {{2}, 0});
    QVector x = QVector::Zero(s.g.dim), y = QVector::Zero(s.g.dim);
    for (int a : s.p.idx_n) x(a) = Rat(gen.int_in(-9, 9));
    for (int a : s.p.idx_levi) y(a) = Rat(gen.int_in(-9, 9));
    QVector at1 = family_bracket(s.p, x, y, Rat(1));
    CHECK(family_bracket(s.p, x, y, Rat(2)) == at1);
    CHECK(family_bracket(s.p, x, y, rat(-1, 3)) == at1);
}

TEST_CASE("limit of the family is the contracted bracket") {
    SplitMix64 gen(15);
    for (auto [t, spec] : std::vector<std::pair<LieType, ParabolicSpec>>{
             {{Family::A, 2}, {{2, 1}, 0}}, {{Family::C, 2}, {{1}, 2}}}) {
        Setup s(t, spec);
        QVector x = random_point(s.g.dim, gen, 9);
        QVector y = random_point(s.g.dim, gen, 9);
        // each coordinate of [x,y]_(t) is a polynomial in t of degree <= 2
        std::vector<Rat> nodes{1, 2, 3};
        std::vector<QVector> vals;
        for (const Rat& tt : nodes) vals.push_back(family_bracket(s.p, x, y, tt));
        QVector qb = s.q.bracket(x, y);
        for (int a = 0; a < s.g.dim; ++a) {
            std::vector<Rat> samples{vals[0](a), vals[1](a), vals[2](a)};
            CHECK(poly_coeffs(nodes, samples, 3)[0] == qb(a));
        }
        // n_- x n_- brackets scale away entirely
        QVector xl = s.p.restrict_to(x, Region::lower);
        QVector yl = s.p.restrict_to(y, Region::lower);
        for (int a = 0; a < s.g.dim; ++a) {
            std::vector<Rat> samples;
            for (const Rat& tt : nodes)
                samples.push_back(family_bracket(s.p, xl, yl, tt)(a));
            CHECK(poly_coeffs(nodes, samples, 3)[0] == 0);
        }
    }
}

TEST_CASE("coadjoint form: antisymmetric, zero at zero, abelian block") {
    SplitMix64 gen(16);
    Setup s({Family::C, 2}, {{1}, 2});
    CHECK(coadjoint_form(s.q, QVector::Zero(s.q.dim)).isZero(0));
    QVector xi = random_point(s.q.dim, gen);
    QMatrix b = coadjoint_form(s.q, xi);
    CHECK(b.transpose() == -b);
    // xi supported on n_- coordinates: the n_- x n_- block still vanishes
    QVector xil = s.p.restrict_to(xi, Region::lower);
    QMatrix bl = coadjoint_form(s.q, xil);
    for (int i : s.p.idx_nminus)
        for (int j : s.p.idx_nminus) CHECK(bl(i, j) == 0);
    // rank of an exact antisymmetric matrix is even
    CHECK(rank_of(b) % 2 == 0);
}

TEST_CASE("stabilizer dimensions and the index probe") {
    Setup borel({Family::A, 2}, {{1, 1, 1}, 0});
    CHECK(stabilizer_dim(borel.q, QVector::Zero(borel.q.dim)) == borel.q.dim);
    CHECK(index_of(borel.q, 10, 1).index == 2);

    Setup sp6(LieType{Family::C, 3}, {{1, 1, 1}, 0});
    CHECK(index_of(sp6.q, 10, 1).index == 3);

    Setup so5(LieType{Family::B, 2}, {{1}, 3});
    CHECK(index_of(so5.q, 10, 1).index == 2);

    Setup sl3(LieType{Family::A, 2}, {{2, 1}, 0});
    CHECK(index_of(sl3.q, 10, 1).index == 2);

    Setup sp4(LieType{Family::C, 2}, {{2}, 0});
    CHECK(index_of(sp4.q, 10, 1).index == 2);
}

TEST_CASE("index report carries its provenance") {
    Setup s({Family::A, 2}, {{2, 1}, 0});
    IndexReport r = index_of(s.q, 12, 99);
    CHECK(r.trials == 12);
    CHECK(r.seed == 99);
    CHECK_THROWS_AS(index_of(s.q, 0, 1), std::invalid_argument);
}

TEST_CASE("coadjoint derivative on sl2 by hand") {
    // basis: e = E12 (0), h (1), f = E21 (2); no contraction
    Setup s({Family::A, 1}, {{2}, 0});
    QVector e_functional = unit(3, 0);
    QVector out = coadjoint_derivative(s.q, 0, e_functional);
    // (ad* e)(e*) = 2 h*: component a = -<e*, [e, b_a]>
    CHECK(out(0) == 0);
    CHECK(out(1) == 2);
    CHECK(out(2) == 0);
    // and the f-functional is killed by ad* e
    CHECK(coadjoint_derivative(s.q, 0, unit(3, 2)).isZero(0));
}

TEST_CASE("central elements act trivially on the coadjoint side") {
    SplitMix64 gen(21);
    Setup s({Family::GL, 1}, {{2}, 0});  // gl2, degenerate contraction
    QVector xi = random_point(s.q.dim, gen, 9);
    int d1 = -1, d2 = -1;
    for (int a = 0; a < s.g.dim; ++a) {
        if (s.g.lead[a] == std::pair(0, 0)) d1 = a;
        if (s.g.lead[a] == std::pair(1, 1)) d2 = a;
    }
    QVector sum = coadjoint_derivative(s.q, d1, xi) + coadjoint_derivative(s.q, d2, xi);
    CHECK(sum.isZero(0));  // the identity matrix is central
}

TEST_CASE("adjoint derivative facts") {
    SplitMix64 gen(22);
    Setup s({Family::A, 2}, {{2, 1}, 0});
    // x, v in n_- commute in q
    for (int x : s.p.idx_nminus)
        for (int v : s.p.idx_nminus)
            CHECK(adjoint_derivative(s.q, x, unit(s.q.dim, v)).isZero(0));
    // x in p acting on v in n_-: the projected bracket
    for (int x : s.p.idx_n)
        for (int v : s.p.idx_nminus) {
            QVector full = s.g.bracket(unit(s.g.dim, x), unit(s.g.dim, v));
            CHECK(adjoint_derivative(s.q, x, unit(s.q.dim, v)) ==
                  s.p.restrict_to(full, Region::lower));
        }
    // [x, x] = 0
    for (int x = 0; x < s.q.dim; ++x)
        CHECK(adjoint_derivative(s.q, x, unit(s.q.dim, x)).isZero(0));
}
