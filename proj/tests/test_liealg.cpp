#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracon/lie_algebra.hpp"
#include "paracon/rng.hpp"

using namespace paracon;

namespace {

QVector unit(int dim, int a) {
    QVector v = QVector::Zero(dim);
    v(a) = 1;
    return v;
}

void check_jacobi_triple(const AlgebraBasis& g, int i, int j, int k) {
    QVector ei = unit(g.dim, i), ej = unit(g.dim, j), ek = unit(g.dim, k);
    QVector s = g.bracket(g.bracket(ei, ej), ek) + g.bracket(g.bracket(ej, ek), ei) +
                g.bracket(g.bracket(ek, ei), ej);
    CHECK(s.isZero(0));
}

} // namespace

TEST_CASE("classical dimension formulas") {
    CHECK(build_algebra({Family::A, 2}).dim == 8);
    CHECK(build_algebra({Family::C, 2}).dim == 10);
    CHECK(build_algebra({Family::B, 2}).dim == 10);
    CHECK(build_algebra({Family::D, 3}).dim == 15);
    CHECK(build_algebra({Family::GL, 2}).dim == 9);
    CHECK(build_algebra({Family::C, 6}).dim == 78);
    CHECK(build_algebra({Family::B, 8}).dim == 136);
    CHECK(build_algebra({Family::D, 6}).dim == 66);
}

TEST_CASE("basis matrices really satisfy the defining relations") {
    for (LieType t : {LieType{Family::B, 2}, LieType{Family::C, 3}, LieType{Family::D, 3}}) {
        AlgebraBasis g = build_algebra(t);
        const int n = g.n;
        QMatrix form = QMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i)
            form(i, n - 1 - i) = (t.family == Family::C && i >= n / 2) ? -1 : 1;
        for (const auto& b : g.basis) {
            QMatrix x = b.dense();
            CHECK(x.transpose() * form + form * x == QMatrix::Zero(n, n));
        }
    }
    AlgebraBasis sl = build_algebra({Family::A, 3});
    for (const auto& b : sl.basis) CHECK(b.dense().trace() == 0);
}

TEST_CASE("structure constants: antisymmetry and closure against matrix commutators") {
    for (LieType t : {LieType{Family::A, 2}, LieType{Family::C, 2}, LieType{Family::B, 2},
                      LieType{Family::GL, 1}}) {
        AlgebraBasis g = build_algebra(t);
        for (int i = 0; i < g.dim; ++i)
            for (int j = 0; j < g.dim; ++j) {
                QMatrix direct = g.basis[i].dense() * g.basis[j].dense() -
                                 g.basis[j].dense() * g.basis[i].dense();
                QVector via_tensor = g.bracket(unit(g.dim, i), unit(g.dim, j));
                CHECK(g.dense_of(via_tensor) == direct);
            }
    }
}

TEST_CASE("Jacobi identity, exhaustive at small rank") {
    for (LieType t : {LieType{Family::A, 2}, LieType{Family::C, 2}, LieType{Family::B, 2}}) {
        AlgebraBasis g = build_algebra(t);
        for (int i = 0; i < g.dim; ++i)
            for (int j = i + 1; j < g.dim; ++j)
                for (int k = j + 1; k < g.dim; ++k) check_jacobi_triple(g, i, j, k);
    }
}

TEST_CASE("Jacobi identity, randomized at rank 3-4") {
    SplitMix64 gen(3);
    for (LieType t : {LieType{Family::A, 3}, LieType{Family::C, 3}, LieType{Family::D, 3},
                      LieType{Family::B, 3}, LieType{Family::C, 4}}) {
        AlgebraBasis g = build_algebra(t);
        for (int trial = 0; trial < 100; ++trial) {
            int i = static_cast<int>(gen.int_in(0, g.dim - 1));
            int j = static_cast<int>(gen.int_in(0, g.dim - 1));
            int k = static_cast<int>(gen.int_in(0, g.dim - 1));
            check_jacobi_triple(g, i, j, k);
        }
    }
}

TEST_CASE("sl2 trace pairing matches the hand computation") {
    AlgebraBasis g = build_algebra({Family::A, 1});
    // basis order: e = E12, h = E11-E22, f = E21
    CHECK(g.gram(0, 2) == 1);  // tr(e f)
    CHECK(g.gram(1, 1) == 2);  // tr(h^2)
    CHECK(g.gram(0, 0) == 0);
    CHECK(g.gram(0, 1) == 0);
}

TEST_CASE("trace pairing duality and structure") {
    for (LieType t : {LieType{Family::A, 2}, LieType{Family::C, 2}, LieType{Family::B, 2},
                      LieType{Family::D, 3}}) {
        AlgebraBasis g = build_algebra(t);
        for (int i = 0; i < g.dim; ++i)
            for (int j = 0; j < g.dim; ++j) {
                Rat want = (i == j) ? 1 : 0;
                CHECK(trace_product(g.dual[i], g.basis[j]) == want);
            }
        // dual of a strictly upper element lives strictly below the diagonal
        for (int i = 0; i < g.upper_count; ++i)
            for (const auto& e : g.dual[i].entries) CHECK(e.row > e.col);
    }
}

TEST_CASE("pairing couples upper with lower: gram vanishes on upper x upper") {
    AlgebraBasis g = build_algebra({Family::C, 3});
    for (int i = 0; i < g.upper_count; ++i)
        for (int j = 0; j < g.upper_count; ++j) CHECK(g.gram(i, j) == 0);
}

TEST_CASE("trace_coords inverts dual_combination") {
    SplitMix64 gen(17);
    for (LieType t : {LieType{Family::A, 2}, LieType{Family::B, 2}}) {
        AlgebraBasis g = build_algebra(t);
        QVector xi = random_point(g.dim, gen, 50);
        CHECK(g.trace_coords(g.dual_combination(xi)) == xi);
    }
}

TEST_CASE("coords_of rejects matrices outside the span") {
    AlgebraBasis g = build_algebra({Family::A, 1});
    QMatrix bad = QMatrix::Identity(2, 2);  // not traceless
    CHECK_THROWS_AS(g.coords_of(bad), std::invalid_argument);
    AlgebraBasis so = build_algebra({Family::B, 2});
    QMatrix notso = QMatrix::Zero(5, 5);
    notso(0, 0) = 1;
    CHECK_THROWS_AS(so.coords_of(notso), std::invalid_argument);
}

TEST_CASE("recorded Killing-to-trace ratios are exact") {
    SplitMix64 gen(23);
    for (LieType t : {LieType{Family::A, 1}, LieType{Family::A, 2}, LieType{Family::C, 2},
                      LieType{Family::B, 2}, LieType{Family::D, 3}}) {
        AlgebraBasis g = build_algebra(t);
        const Rat c(t.killing_to_trace_ratio());
        for (int trial = 0; trial < 5; ++trial) {
            int i = static_cast<int>(gen.int_in(0, g.dim - 1));
            int j = static_cast<int>(gen.int_in(0, g.dim - 1));
            QMatrix adi = g.ad_matrix(unit(g.dim, i));
            QMatrix adj_ = g.ad_matrix(unit(g.dim, j));
            Rat killing = (adi * adj_).trace();
            CHECK(killing == c * g.gram(i, j));
        }
    }
}

TEST_CASE("ad_matrix kernel of a generic Cartan element has rank-many dimensions") {
    AlgebraBasis g = build_algebra({Family::A, 2});
    QVector h = QVector::Zero(g.dim);
    h(g.upper_count) = 1;      // H_1
    h(g.upper_count + 1) = 3;  // H_2, generic combination
    QMatrix ad = g.ad_matrix(h);
    CHECK(g.dim - rank_of(ad) == 2);
}

TEST_CASE("lie type parsing") {
    CHECK(parse_lie_type("C", 6).name() == "sp12");
    CHECK(parse_lie_type("B", 8).name() == "so17");
    CHECK(parse_lie_type("GL", 2).name() == "gl3");
    CHECK_THROWS_AS(parse_lie_type("E", 8), std::invalid_argument);
    CHECK_THROWS_AS(parse_lie_type("D", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_lie_type("A", 0), std::invalid_argument);
}
