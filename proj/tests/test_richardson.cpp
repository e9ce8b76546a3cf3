#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracon/richardson.hpp"

using namespace paracon;

namespace {

struct Setup {
    AlgebraBasis g;
    ParabolicDecomposition p;
    Setup(LieType t, ParabolicSpec s) : g(build_algebra(t)), p(build_parabolic(g, s)) {}
};

int lead_index(const AlgebraBasis& g, int row, int col) {
    for (int a = 0; a < g.dim; ++a)
        if (g.lead[a] == std::pair(row, col)) return a;
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("Borel of sl3: the regular element certifies, a root vector does not") {
    Setup s({Family::A, 2}, ParabolicSpec::borel({Family::A, 2}));
    QVector good = QVector::Zero(s.g.dim);
    good(lead_index(s.g, 0, 1)) = 1;
    good(lead_index(s.g, 1, 2)) = 1;
    CHECK(richardson_certificate(s.p, good) == 3);
    QVector bad = QVector::Zero(s.g.dim);
    bad(lead_index(s.g, 0, 1)) = 1;
    CHECK(richardson_certificate(s.p, bad) < 3);
}

TEST_CASE("degenerate parabolic: zero is Richardson with empty certificate") {
    Setup s({Family::A, 2}, {{3}, 0});
    RichardsonElement e = find_richardson(s.p, 4, 0);
    CHECK(e.certificate_rank == 0);
    CHECK(e.matrix == QMatrix::Zero(3, 3));
}

TEST_CASE("random search certifies quickly at the worked configurations") {
    Setup s({Family::C, 6}, {{3, 2, 1}, 0});
    RichardsonElement e = find_richardson(s.p, 8, 0);
    CHECK(e.certificate_rank == 32);
    CHECK(jordan_type(e.matrix) == Partition({6, 4, 2}));
}

TEST_CASE("jordan types of basic nilpotents") {
    CHECK(jordan_type(QMatrix::Zero(4, 4)) == Partition({1, 1, 1, 1}));
    Setup s({Family::A, 2}, ParabolicSpec::borel({Family::A, 2}));
    RichardsonElement e = find_richardson(s.p, 8, 1);
    CHECK(jordan_type(e.matrix) == Partition({3}));  // regular orbit
    CHECK_THROWS_AS(jordan_type(QMatrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("jordan type is independent of the search seed") {
    Setup s({Family::C, 3}, {{2}, 2});
    Partition first = jordan_type(find_richardson(s.p, 8, 11).matrix);
    Partition second = jordan_type(find_richardson(s.p, 8, 222).matrix);
    Partition third = jordan_type(find_richardson(s.p, 8, 3333).matrix);
    CHECK(first == second);
    CHECK(second == third);
}

TEST_CASE("centraliser dimensions and location") {
    {
        Setup s({Family::A, 2}, {{2, 1}, 0});
        RichardsonElement e = find_richardson(s.p, 8, 2);
        CentraliserData c = centraliser(s.g, e.coords);
        CHECK(c.dim == 4);  // dim g - 2 dim n = 8 - 4, the subregular value l + 2
        for (const auto& v : c.basis)
            for (int a : s.p.idx_nminus) CHECK(v(a) == 0);
    }
    {
        Setup s({Family::A, 2}, {{3}, 0});
        CentraliserData c = centraliser(s.g, QVector::Zero(s.g.dim));
        CHECK(c.dim == s.g.dim);  // centraliser of zero is everything
    }
}

TEST_CASE("centraliser structure constants close on the kernel basis") {
    Setup s({Family::C, 2}, {{1}, 2});
    RichardsonElement e = find_richardson(s.p, 8, 3);
    CentraliserData c = centraliser(s.g, e.coords);
    for (int i = 0; i < c.dim; ++i)
        for (int j = 0; j < c.dim; ++j) {
            QVector direct = s.g.bracket(c.basis[static_cast<size_t>(i)],
                                         c.basis[static_cast<size_t>(j)]);
            QVector recomposed = QVector::Zero(s.g.dim);
            for (const auto& [k, coef] : c.bracket_list(i, j))
                recomposed += coef * c.basis[static_cast<size_t>(k)];
            CHECK(direct == recomposed);
        }
}

TEST_CASE("centraliser index equals the rank") {
    {
        Setup s({Family::A, 2}, {{2, 1}, 0});
        RichardsonElement e = find_richardson(s.p, 8, 4);
        CHECK(subalgebra_index(centraliser(s.g, e.coords), 10, 5) == 2);
    }
    {
        Setup s({Family::C, 2}, {{2}, 0});
        RichardsonElement e = find_richardson(s.p, 8, 4);
        CHECK(subalgebra_index(centraliser(s.g, e.coords), 10, 5) == 2);
    }
}

TEST_CASE("subregular centralisers: centre of dimension l-1, derived not a line") {
    auto probe = [](LieType t, ParabolicSpec spec) {
        Setup s(t, spec);
        RichardsonElement e = find_richardson(s.p, 8, 6);
        CentraliserData c = centraliser(s.g, e.coords);
        return subregular_structure(c, t.rank);
    };
    SubregularStructure a = probe({Family::A, 2}, {{2, 1}, 0});
    CHECK(a.centre_dim == 1);
    SubregularStructure c2 = probe({Family::C, 2}, {{1}, 2});
    CHECK(c2.centre_dim == 1);
    CHECK(c2.derived_ok);
    SubregularStructure b3 = probe({Family::B, 3}, {{1, 1}, 3});
    CHECK(b3.centre_dim == 2);
    CHECK(b3.derived_ok);
}

TEST_CASE("so12: the (4,1,1) flag carries the (5,3,2,2) orbit with dim g_e = 18") {
    Setup s({Family::D, 6}, {{4, 1, 1}, 0});
    RichardsonElement e = find_richardson(s.p, 8, 7);
    CHECK(jordan_type(e.matrix) == Partition({5, 3, 2, 2}));
    CentraliserData c = centraliser(s.g, e.coords);
    CHECK(c.dim == 18);
    CHECK(subalgebra_index(c, 10, 8) == 6);
}

TEST_CASE("so12: scanning all sorted flags locates (5,3,2,2) exactly once") {
    AlgebraBasis g = build_algebra({Family::D, 6});
    std::vector<ParabolicSpec> hits;
    for (int blocks_total = 1; blocks_total <= 6; ++blocks_total) {
        int central = 12 - 2 * blocks_total;
        if (central == 2) continue;
        for (const auto& part : all_partitions(blocks_total)) {
            ParabolicSpec spec{part.parts, central};
            auto p = build_parabolic(g, spec);
            RichardsonElement e = find_richardson(p, 8, 9);
            if (jordan_type(e.matrix) == Partition({5, 3, 2, 2})) hits.push_back(spec);
        }
    }
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].composition == std::vector<int>{4, 1, 1});
    CHECK(hits[0].central_block == 0);
}

TEST_CASE("failure paths") {
    Setup s({Family::A, 2}, {{2, 1}, 0});
    CHECK_THROWS_AS(find_richardson(s.p, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(subalgebra_index(centraliser(s.g, QVector::Zero(s.g.dim)), 0, 0),
                    std::invalid_argument);
}
