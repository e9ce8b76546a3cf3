#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paracon/partitions.hpp"
#include "paracon/rng.hpp"

using namespace paracon;

namespace {

Partition random_partition(int total, SplitMix64& gen) {
    auto all = all_partitions(total);
    return all[static_cast<size_t>(gen.int_in(0, static_cast<long>(all.size()) - 1))];
}

std::string blocks_str(const std::vector<LeviBlockLabel>& blocks) {
    std::string s;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += "+";
        if (blocks[i].kind == Family::GL) s += "gl";
        else if (blocks[i].kind == Family::C) s += "sp";
        else s += "so";
        s += std::to_string(blocks[i].size);
    }
    return s;
}

} // namespace

TEST_CASE("partition construction and validation") {
    CHECK(Partition({6, 4, 2}).total() == 12);
    CHECK(Partition({3}).str() == "(3)");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("dual partitions") {
    CHECK(dual(Partition({5})) == Partition({1, 1, 1, 1, 1}));
    // column-count oracle on the Young diagram of (6,4,2):
    // columns 1,2 meet all three rows; 3,4 two rows; 5,6 one row
    CHECK(dual(Partition({6, 4, 2})) == Partition({3, 3, 2, 2, 1, 1}));

    SplitMix64 gen(51);
    for (int t = 0; t < 50; ++t) {
        Partition p = random_partition(1 + static_cast<int>(gen.int_in(0, 24)), gen);
        CHECK(dual(dual(p)) == p);
    }
}

TEST_CASE("nilpotent validity by multiplicity rules") {
    CHECK(is_valid_nilpotent({Family::C, 6}, Partition({6, 4, 2})));
    CHECK_FALSE(is_valid_nilpotent({Family::C, 3}, Partition({3, 2, 1})));
    CHECK(is_valid_nilpotent({Family::B, 8}, Partition({5, 4, 4, 2, 2})));
    CHECK_FALSE(is_valid_nilpotent({Family::B, 2}, Partition({4, 1})));
    CHECK(is_valid_nilpotent({Family::D, 6}, Partition({5, 3, 2, 2})));
    CHECK(is_valid_nilpotent({Family::A, 2}, Partition({2, 1})));
    CHECK_THROWS_AS(is_valid_nilpotent({Family::C, 6}, Partition({2, 1})),
                    std::invalid_argument);
}

TEST_CASE("Richardson test in type C") {
    CHECK(is_richardson_C(Partition({6, 4, 2})));
    CHECK(is_richardson_C(Partition({3, 3, 1, 1})));
    CHECK_FALSE(is_richardson_C(Partition({4, 3, 3, 2})));  // odd range is odd
    CHECK(is_richardson_C(Partition({6, 6, 5, 5, 2})));
    CHECK(is_richardson_C(Partition({2, 2})));
    CHECK(is_richardson_C(Partition({1, 1})));
    // even gap condition inside the odd range: (4,4,3,3) fine, (4,4,4,4,3,3)?
    CHECK(is_richardson_C(Partition({4, 4, 3, 3})));
    CHECK_FALSE(is_richardson_C(Partition({4, 3, 3, 3, 3})));  // r = 5 odd
    // condition (3): even pair separated by less than 2 inside the odd range
    CHECK_FALSE(is_richardson_C(Partition({4, 4, 4, 4, 1, 1})));
    CHECK(is_richardson_C(Partition({6, 6, 4, 4, 1, 1})));
}

TEST_CASE("admissibility in type B") {
    CHECK(is_admissible_B(Partition({5, 4, 4, 2, 2})));
    CHECK_FALSE(is_admissible_B(Partition({5, 3, 2, 2})));
    CHECK(is_admissible_B(Partition({3})));
    CHECK(is_admissible_B(Partition({3, 2, 2})));
    CHECK_FALSE(is_admissible_B(Partition({4, 3})));
}

TEST_CASE("type C modification") {
    CHECK(modified_partition_C(Partition({6, 6, 5, 5, 2})) == Partition({7, 5, 5, 5, 2}));
    CHECK(modified_partition_C(Partition({3, 3, 1, 1})) == Partition({3, 3, 1, 1}));
    CHECK(modified_partition_C(Partition({6, 4, 2})) == Partition({6, 4, 2}));
    CHECK_THROWS_AS(modified_partition_C(Partition({4, 3, 3, 2})), std::invalid_argument);

    SplitMix64 gen(52);
    for (int t = 0; t < 200; ++t) {
        Partition p = random_partition(2 * (1 + static_cast<int>(gen.int_in(0, 14))), gen);
        if (!is_richardson_C(p)) continue;
        CHECK(modified_partition_C(p).total() == p.total());  // only empty boxes move
    }
}

TEST_CASE("levi types from partitions") {
    CHECK(blocks_str(levi_type(Family::C, Partition({6, 4, 2}))) == "gl3+gl2+gl1");
    CHECK(blocks_str(levi_type(Family::C, Partition({6, 6, 5, 5, 2}))) == "gl5+gl4+gl1+sp4");
    CHECK(blocks_str(levi_type(Family::B, Partition({5, 4, 4, 2, 2}))) == "gl5+gl3");
    CHECK(blocks_str(levi_type(Family::C, Partition({3, 3, 1, 1}))) == "gl2+sp4");
    CHECK(blocks_str(levi_type(Family::A, Partition({2, 1}))) == "gl2+gl1");
    CHECK(blocks_str(levi_type(Family::B, Partition({3}))) == "gl1");
}

TEST_CASE("slice-degree multisets from the worked examples") {
    CHECK(e_degree_multiset(Family::C, Partition({6, 4, 2})) ==
          std::vector<int>{1, 1, 1, 2, 2, 3});
    CHECK(e_degree_multiset(Family::C, Partition({3, 3, 1, 1})) ==
          std::vector<int>{1, 2, 2, 4});
    CHECK(e_degree_multiset(Family::B, Partition({5, 4, 4, 2, 2})) ==
          std::vector<int>{1, 1, 2, 2, 3, 3, 4, 5});
    CHECK(e_degree_multiset(Family::C, Partition({6, 6, 5, 5, 2})) ==
          std::vector<int>{1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5});
    // gl versus sl conventions in type A
    CHECK(e_degree_multiset(Family::A, Partition({2, 1})) == std::vector<int>{1, 2});
    CHECK(e_degree_multiset(Family::A, Partition({2, 1}), true) ==
          std::vector<int>{1, 1, 2});
    CHECK(e_degree_multiset(Family::GL, Partition({2, 1})) == std::vector<int>{1, 1, 2});
}

TEST_CASE("closed form for admissible type B degrees") {
    // multiplicity of degree 1 is floor(first/2), of degree i > 1 is part_i / 2
    SplitMix64 gen(53);
    for (int t = 0; t < 100; ++t) {
        int total = 3 + 2 * static_cast<int>(gen.int_in(0, 13));
        Partition p = random_partition(total, gen);
        if (!is_admissible_B(p)) continue;
        auto ms = e_degree_multiset(Family::B, p);
        std::vector<int> counts(p.parts.size() + 1, 0);
        for (int d : ms) ++counts[static_cast<size_t>(d)];
        CHECK(counts[1] == p.part(1) / 2);
        for (int i = 2; i <= static_cast<int>(p.parts.size()); ++i)
            CHECK(counts[static_cast<size_t>(i)] == p.part(i) / 2);
    }
}

TEST_CASE("bi-degree tables from the worked examples") {
    using T = std::vector<std::pair<int, int>>;
    CHECK(bidegree_table(Family::C, Partition({6, 4, 2})) ==
          T{{1, 1}, {1, 3}, {1, 5}, {2, 6}, {2, 8}, {3, 9}});
    CHECK(bidegree_table(Family::C, Partition({3, 3, 1, 1})) ==
          T{{1, 1}, {2, 2}, {2, 4}, {4, 4}});
    int sum_nm = 0;
    for (auto [dp, dn] : bidegree_table(Family::B, Partition({5, 4, 4, 2, 2}))) sum_nm += dn;
    CHECK(sum_nm == 51);  // dim n = (136 - 34) / 2 from the so17 configuration
}

TEST_CASE("degrees_match_levi across the examples and sweeps") {
    CHECK(degrees_match_levi(Family::C, Partition({6, 4, 2})));
    CHECK(degrees_match_levi(Family::C, Partition({6, 6, 5, 5, 2})));
    CHECK(degrees_match_levi(Family::B, Partition({5, 4, 4, 2, 2})));
    CHECK(degrees_match_levi(Family::A, Partition({2, 1})));

    SplitMix64 gen(54);
    std::vector<Partition> pool_c, pool_b;
    for (int total = 2; total <= 20; total += 2) {
        LieType t{Family::C, total / 2};
        for (const auto& p : all_partitions(total))
            if (is_valid_nilpotent(t, p) && is_richardson_C(p)) pool_c.push_back(p);
    }
    for (int total = 3; total <= 19; total += 2) {
        LieType t{Family::B, (total - 1) / 2};
        for (const auto& p : all_partitions(total))
            if (is_valid_nilpotent(t, p) && is_admissible_B(p)) pool_b.push_back(p);
    }
    CHECK(pool_c.size() > 50);
    CHECK(pool_b.size() > 20);
    for (const auto& p : pool_c) CHECK(degrees_match_levi(Family::C, p));
    for (const auto& p : pool_b) CHECK(degrees_match_levi(Family::B, p));
    // every partition is allowed in type A
    for (int t = 0; t < 40; ++t) {
        int total = 2 + static_cast<int>(gen.int_in(0, 10));
        CHECK(degrees_match_levi(Family::A, random_partition(total, gen)));
    }
}

TEST_CASE("all_partitions enumerates correctly") {
    CHECK(all_partitions(4).size() == 5);
    CHECK(all_partitions(10).size() == 42);
    CHECK(all_partitions(30).size() == 5604);
}

TEST_CASE("richardson profiles aggregate the combinatorial record") {
    RichardsonProfile prof = richardson_profile({Family::C, 6}, Partition({6, 4, 2}));
    CHECK(prof.valid_nilpotent);
    CHECK(prof.richardson);
    CHECK(prof.modified == Partition({6, 4, 2}));
    CHECK(prof.degree_multiset == std::vector<int>{1, 1, 1, 2, 2, 3});
    CHECK(prof.matches_levi);

    RichardsonProfile fig = richardson_profile({Family::C, 12}, Partition({6, 6, 5, 5, 2}));
    CHECK(fig.modified == Partition({7, 5, 5, 5, 2}));
    CHECK(fig.matches_levi);

    RichardsonProfile bad = richardson_profile({Family::C, 3}, Partition({4, 1, 1}));
    CHECK(bad.valid_nilpotent);
    CHECK_FALSE(bad.richardson);
    CHECK(bad.levi.empty());

    RichardsonProfile so = richardson_profile({Family::B, 8}, Partition({5, 4, 4, 2, 2}));
    CHECK(so.admissible);
    CHECK(so.matches_levi);

    RichardsonProfile gl = richardson_profile({Family::GL, 2}, Partition({2, 1}));
    CHECK(gl.degree_multiset == std::vector<int>{1, 1, 2});
    CHECK(gl.matches_levi);

    RichardsonProfile dd = richardson_profile({Family::D, 6}, Partition({5, 3, 2, 2}));
    CHECK(dd.valid_nilpotent);
    CHECK(dd.levi.empty());  // no combinatorial rule in type D
}
