#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "blockcheck/block.hpp"
#include "blockcheck/linalg.hpp"
#include "oracles.hpp"

using namespace blockcheck;

namespace {

BlockRecord a5_block() {
    BlockRecord b;
    b.name = "A5 p=2 principal";
    b.p = 2;
    b.defect_group_order = 4;
    b.brauer_degrees = {1, 2, 2};
    b.ordinary_degrees = Vec{1, 3, 3, 5};
    b.cartan = IntMatrix::from_rows({{4, 2, 2}, {2, 2, 1}, {2, 1, 2}});
    b.decomposition = std::vector<Vec>{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}};
    b.group_p_part = 4;
    b.group_order = 60;
    return b;
}

BlockRecord s10_block() {
    BlockRecord b;
    b.name = "S10 p=2";
    b.p = 2;
    b.defect_group_order = 8;
    b.brauer_degrees = {128, 160};
    b.ordinary_degrees = Vec{160, 160, 448, 288, 288};
    return b;
}

}  // namespace

TEST_CASE("validation accepts complete records") {
    CHECK(validate(a5_block()).empty());
    CHECK(validate(s10_block()).empty());
}

TEST_CASE("validation flags bad defect group order") {
    BlockRecord b = a5_block();
    b.defect_group_order = 3;
    auto violations = validate(b);
    REQUIRE_FALSE(violations.empty());
    bool found = false;
    for (const auto& v : violations)
        if (v.find("not a power of p") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validation flags non positive definite cartan") {
    BlockRecord b;
    b.name = "bad";
    b.p = 2;
    b.defect_group_order = 4;
    b.brauer_degrees = {1};
    b.cartan = IntMatrix::from_rows({{0}});
    auto violations = validate(b);
    bool found = false;
    for (const auto& v : violations)
        if (v == "cartan not positive definite") found = true;
    CHECK(found);
}

TEST_CASE("validation flags assorted data problems") {
    BlockRecord base = a5_block();

    SUBCASE("non-prime p") {
        base.p = 6;
        base.defect_group_order = 6;
        CHECK_FALSE(validate(base).empty());
    }
    SUBCASE("empty brauer degrees") {
        base.brauer_degrees.clear();
        CHECK_FALSE(validate(base).empty());
    }
    SUBCASE("fewer ordinary than modular characters") {
        base.ordinary_degrees = Vec{1, 3};
        base.decomposition.reset();
        base.cartan.reset();
        CHECK_FALSE(validate(base).empty());
    }
    SUBCASE("cartan disagrees with decomposition") {
        (*base.cartan).at(0, 0) = 5;
        auto violations = validate(base);
        bool found = false;
        for (const auto& v : violations)
            if (v.find("decomposition") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("dimension sources disagree") {
        base.ordinary_degrees = Vec{1, 3, 3, 6};
        auto violations = validate(base);
        bool found = false;
        for (const auto& v : violations)
            if (v.find("different block dimensions") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("defect exceeding the group p-part") {
        base.defect_group_order = 8;
        base.cartan.reset();
        base.decomposition.reset();
        base.ordinary_degrees.reset();
        CHECK_FALSE(validate(base).empty());
    }
}

TEST_CASE("dim_b from the two sources") {
    CHECK(dim_b(a5_block()) == 44);
    CHECK(dim_b(s10_block()) == 417792);
    CHECK(Rat(dim_b(s10_block())) / (2 * 8) == Rat(26112));

    BlockRecord cyclic;
    cyclic.name = "C7";
    cyclic.p = 7;
    cyclic.defect_group_order = 7;
    cyclic.brauer_degrees = {1};
    cyclic.cartan = IntMatrix::from_rows({{7}});
    CHECK(dim_b(cyclic) == 7);

    BlockRecord empty;
    empty.name = "nothing";
    empty.p = 2;
    empty.defect_group_order = 2;
    empty.brauer_degrees = {1};
    CHECK_THROWS_AS((void)dim_b(empty), Error);

    BlockRecord inconsistent = a5_block();
    inconsistent.ordinary_degrees = Vec{1, 3, 3, 6};
    CHECK_THROWS_AS((void)dim_b(inconsistent), Error);
}

TEST_CASE("projective degrees") {
    CHECK(projective_degrees(a5_block()) == Vec{12, 8, 8});

    BlockRecord one;
    one.name = "l=1";
    one.p = 3;
    one.defect_group_order = 9;
    one.brauer_degrees = {5};
    one.cartan = IntMatrix::from_rows({{9}});
    CHECK(projective_degrees(one) == Vec{45});

    BlockRecord star;
    star.name = "star e=2 m=3";
    star.p = 7;
    star.defect_group_order = 7;
    star.brauer_degrees = {2, 3};
    star.cartan = IntMatrix::from_rows({{4, 3}, {3, 4}});
    CHECK(projective_degrees(star) == Vec{4 * 2 + 3 * 3, 3 * 2 + 4 * 3});

    CHECK_THROWS_AS((void)projective_degrees(s10_block()), Error);
}

TEST_CASE("dot of projective and modular degrees equals dim B") {
    for (const BlockRecord& b : {a5_block()}) {
        Vec phi = projective_degrees(b);
        Int acc = 0;
        for (std::size_t i = 0; i < phi.size(); ++i) acc += phi[i] * b.brauer_degrees[i];
        CHECK(acc == dim_b(b));
    }
}

TEST_CASE("dim_b is invariant under simultaneous permutation") {
    std::mt19937_64 rng(20240601);
    BlockRecord b = a5_block();
    b.ordinary_degrees.reset();
    b.decomposition.reset();
    std::vector<std::size_t> perm{0, 1, 2};
    for (int round = 0; round < 10; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        BlockRecord shuffled = b;
        IntMatrix c(3);
        for (std::size_t i = 0; i < 3; ++i) {
            shuffled.brauer_degrees[i] = b.brauer_degrees[perm[i]];
            for (std::size_t j = 0; j < 3; ++j)
                c.at(i, j) = (*b.cartan).at(perm[i], perm[j]);
        }
        shuffled.cartan = c;
        CHECK(dim_b(shuffled) == dim_b(b));
    }
}

TEST_CASE("group records validate and aggregate") {
    GroupRecord g;
    g.name = "A5";
    g.p = 2;
    g.group_order = 60;
    g.blocks = {a5_block()};
    BlockRecord defect_zero;
    defect_zero.name = "defect 0";
    defect_zero.p = 2;
    defect_zero.defect_group_order = 1;
    defect_zero.brauer_degrees = {4};
    defect_zero.ordinary_degrees = Vec{4};
    defect_zero.cartan = IntMatrix::from_rows({{1}});
    defect_zero.group_p_part = 4;
    defect_zero.group_order = 60;
    g.blocks.push_back(defect_zero);

    CHECK(validate(g).empty());
    CHECK(g.l_total() == 4);

    SUBCASE("prime mismatch is flagged with the block index") {
        g.blocks[1].p = 3;
        g.blocks[1].defect_group_order = 1;
        g.blocks[1].group_p_part = Int(3);
        auto violations = validate(g);
        REQUIRE_FALSE(violations.empty());
        CHECK(violations.front().find("blocks[1]") != std::string::npos);
    }
    SUBCASE("group p-part must match the group order") {
        g.blocks[0].group_p_part = 8;
        CHECK_FALSE(validate(g).empty());
    }
    SUBCASE("no blocks") {
        g.blocks.clear();
        CHECK_FALSE(validate(g).empty());
    }
}

TEST_CASE("degree summaries") {
    BlockRecord b = a5_block();
    CHECK(b.l() == 3);
    CHECK(b.k() == 4);
    CHECK(sum_phi_squared(b) == 9);
    CHECK(max_phi_squared(b) == 4);
}
