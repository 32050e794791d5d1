#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "blockcheck/checkers.hpp"
#include "blockcheck/linalg.hpp"
#include "oracles.hpp"

using namespace blockcheck;

namespace {

const Rat kTol = ratio(1, 1000000);

BlockRecord a5_block() {
    BlockRecord b;
    b.name = "A5 p=2 principal";
    b.p = 2;
    b.defect_group_order = 4;
    b.brauer_degrees = {1, 2, 2};
    b.ordinary_degrees = Vec{1, 3, 3, 5};
    b.cartan = IntMatrix::from_rows({{4, 2, 2}, {2, 2, 1}, {2, 1, 2}});
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

BlockRecord a7_block() {
    BlockRecord b;
    b.name = "A7 p=3 principal";
    b.p = 3;
    b.defect_group_order = 9;
    b.brauer_degrees = {1, 10, 10, 13};
    b.ordinary_degrees = Vec{1, 10, 10, 14, 14, 35};
    b.cartan = IntMatrix::from_rows({{7, 2, 2, 4}, {2, 2, 1, 1}, {2, 1, 2, 1}, {4, 1, 1, 3}});
    b.group_p_part = 9;
    b.group_order = 2520;
    return b;
}

BlockRecord cyclic_block(long p) {
    BlockRecord b;
    b.name = "C" + std::to_string(p);
    b.p = Int(p);
    b.defect_group_order = Int(p);
    b.brauer_degrees = {1};
    b.ordinary_degrees = Vec(static_cast<std::size_t>(p), Int(1));
    b.cartan = IntMatrix::from_rows({{Int(p)}});
    b.group_p_part = Int(p);
    b.group_order = Int(p);
    return b;
}

}  // namespace

TEST_CASE("local conjecture") {
    Verdict s10 = local_conjecture(s10_block());
    CHECK(s10.lhs == 26112);
    CHECK(s10.rhs == 41984);
    CHECK(s10.holds);
    CHECK_FALSE(s10.equality);

    Verdict c7 = local_conjecture(cyclic_block(7));
    CHECK(c7.lhs == 1);
    CHECK(c7.rhs == 1);
    CHECK(c7.equality);

    Verdict a5 = local_conjecture(a5_block());
    CHECK(a5.lhs == ratio(11, 3));
    CHECK(a5.rhs == 9);
    CHECK(a5.holds);
}

TEST_CASE("strong local variant") {
    Verdict s10 = strong_local(s10_block());
    CHECK(s10.lhs == 26112);
    CHECK(s10.rhs == 25600);
    CHECK_FALSE(s10.holds);

    Verdict a5 = strong_local(a5_block());
    CHECK(a5.lhs == ratio(11, 3));
    CHECK(a5.rhs == 4);
    CHECK(a5.holds);

    Verdict c7 = strong_local(cyclic_block(7));
    Verdict c7_local = local_conjecture(cyclic_block(7));
    CHECK(c7.equality);
    CHECK(c7.lhs == c7_local.lhs);
    CHECK(c7.rhs == c7_local.rhs);
}

TEST_CASE("variant without the l(B) factor") {
    Verdict a5 = no_lb_factor(a5_block());
    CHECK(a5.lhs == 11);
    CHECK(a5.rhs == 9);
    CHECK_FALSE(a5.holds);

    Verdict c2 = no_lb_factor(cyclic_block(2));
    CHECK(c2.equality);
}

TEST_CASE("trace criterion and the open trace question") {
    auto [sum, question] = trace_criterion(a5_block());
    CHECK(sum.lhs == ratio(11, 2));
    CHECK(sum.rhs == 9);
    CHECK(sum.holds);
    CHECK(question.lhs == 8);
    CHECK(question.rhs == 12);
    CHECK(question.holds);

    auto [csum, cq] = trace_criterion(cyclic_block(5));
    CHECK(csum.equality);
    CHECK(cq.equality);

    CHECK_THROWS_AS((void)trace_criterion(s10_block()), Error);
}

TEST_CASE("gcd diagnostic") {
    Verdict a5 = gcd_diagnostic(a5_block());
    CHECK(a5.lhs == 4);   // gcd(12, 8, 8)
    CHECK(a5.rhs == 4);   // |D| * gcd(1, 2, 2)
    CHECK(a5.equality);

    Verdict c7 = gcd_diagnostic(cyclic_block(7));
    CHECK(c7.equality);

    // l = 1 with a bigger group: g1 = |D| * phi
    BlockRecord one;
    one.name = "l=1";
    one.p = 2;
    one.defect_group_order = 4;
    one.brauer_degrees = {6};
    one.cartan = IntMatrix::from_rows({{4}});
    one.group_p_part = 8;
    Verdict v = gcd_diagnostic(one);
    CHECK(v.lhs == 24);
    CHECK(v.rhs == 24);
    CHECK(v.equality);

    CHECK_THROWS_AS((void)gcd_diagnostic(s10_block()), Error);
}

TEST_CASE("brauer problem diagnostics") {
    auto a7 = brauer_problem_diagnostics(a7_block());
    REQUIRE(a7.size() == 5);  // k(B) bound + four characters
    CHECK(a7[0].check_id == "brauer_problem.k_le_defect");
    CHECK(a7[0].lhs == 6);
    CHECK(a7[0].rhs == 9);
    CHECK(a7[1].check_id == "brauer_problem.phi_le_d2.1");
    CHECK(a7[1].lhs == 99);
    CHECK(a7[1].rhs == 81);
    CHECK_FALSE(a7[1].holds);

    auto s10 = brauer_problem_diagnostics(s10_block());
    REQUIRE(s10.size() == 1);
    CHECK(s10[0].lhs == 5);
    CHECK(s10[0].rhs == 8);
    CHECK(s10[0].holds);

    auto c3 = brauer_problem_diagnostics(cyclic_block(3));
    REQUIRE(c3.size() == 2);
    CHECK(c3[1].lhs == 3);
    CHECK(c3[1].rhs == 9);
    CHECK(c3[1].holds);
}

TEST_CASE("global and weak global conjectures") {
    GroupRecord g;
    g.name = "A5";
    g.p = 2;
    g.group_order = 60;
    g.blocks.push_back(a5_block());
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

    Verdict global = global_conjecture(g);
    CHECK(global.lhs == 15);
    CHECK(global.rhs == 25);
    CHECK(global.holds);

    Verdict weak = weak_global(g);
    CHECK(weak.lhs == ratio(15, 4));
    CHECK(weak.rhs == 16);
    CHECK(weak.holds);

    GroupRecord pg;
    pg.name = "C7";
    pg.p = 7;
    pg.group_order = 7;
    pg.blocks.push_back(cyclic_block(7));
    Verdict pg_global = global_conjecture(pg);
    CHECK(pg_global.equality);
    bool sylow_note = false;
    for (const auto& n : pg_global.notes)
        if (n.find("Sylow") != std::string::npos) sylow_note = true;
    CHECK(sylow_note);
    CHECK(weak_global(pg).equality);
}

TEST_CASE("run_suite shapes") {
    SUBCASE("full A5 record: 7 checks, no skips, 13 verdict rows") {
        CheckSuiteReport r = run_suite(a5_block(), kTol);
        CHECK(r.results.size() == 7);
        CHECK(r.skipped.empty());
        CHECK(r.verdict_count() == 13);
    }
    SUBCASE("degrees-only record: data-dependent checks are skipped with reasons") {
        CheckSuiteReport r = run_suite(s10_block(), kTol);
        CHECK(r.results.size() == 4);
        REQUIRE(r.skipped.size() == 3);
        for (const Skip& s : r.skipped) CHECK_FALSE(s.reason.empty());
        // every registered check appears exactly once as verdict or skip
        std::vector<std::string> ids;
        for (const auto& res : r.results) ids.push_back(res.check_id);
        for (const auto& s : r.skipped) ids.push_back(s.check_id);
        std::sort(ids.begin(), ids.end());
        CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
        CHECK(ids.size() == 7);
    }
    SUBCASE("group record adds the two global checks and nests block reports") {
        GroupRecord g;
        g.name = "C7";
        g.p = 7;
        g.group_order = 7;
        g.blocks.push_back(cyclic_block(7));
        CheckSuiteReport r = run_suite(g, kTol);
        CHECK(r.results.size() == 2);
        REQUIRE(r.block_reports.size() == 1);
        CHECK(r.block_reports[0].results.size() == 7);
    }
}

TEST_CASE("verdicts are invariant under character permutation") {
    std::mt19937_64 rng(20240801);
    BlockRecord b = a5_block();
    b.ordinary_degrees.reset();  // permuting ordinary characters is separate bookkeeping
    std::vector<std::size_t> perm{0, 1, 2};
    for (int round = 0; round < 6; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        BlockRecord shuffled = b;
        IntMatrix c(3);
        for (std::size_t i = 0; i < 3; ++i) {
            shuffled.brauer_degrees[i] = b.brauer_degrees[perm[i]];
            for (std::size_t j = 0; j < 3; ++j)
                c.at(i, j) = (*b.cartan).at(perm[i], perm[j]);
        }
        shuffled.cartan = c;
        for (auto check : {local_conjecture, strong_local, no_lb_factor}) {
            Verdict orig = check(b), moved = check(shuffled);
            CHECK(orig.lhs == moved.lhs);
            CHECK(orig.rhs == moved.rhs);
            CHECK(orig.holds == moved.holds);
        }
        auto [sum_a, q_a] = trace_criterion(b);
        auto [sum_b, q_b] = trace_criterion(shuffled);
        CHECK(sum_a.lhs == sum_b.lhs);
        CHECK(q_a.lhs == q_b.lhs);
        Verdict g_a = gcd_diagnostic(b), g_b = gcd_diagnostic(shuffled);
        CHECK(g_a.lhs == g_b.lhs);
        CHECK(g_a.equality == g_b.equality);
    }
}

TEST_CASE("trace implication: tr C <= l|D| forces the local conjecture") {
    std::mt19937_64 rng(20240802);
    int implications_seen = 0;
    for (int round = 0; round < 150; ++round) {
        std::size_t l = 1 + static_cast<std::size_t>(rng() % 4);
        // random gram-based cartan and random positive degrees
        std::vector<Vec> rows(l + 1 + rng() % 2, Vec(l));
        for (auto& r : rows)
            for (Int& x : r) x = oracle::rand_int(rng, 0, 3);
        for (std::size_t i = 0; i < l; ++i) rows[i][i] += 1;
        IntMatrix c = gram_matrix(rows);
        if (det(c) <= 0) continue;

        BlockRecord b;
        b.name = "synthetic";
        b.p = 2;
        // choose |D| as the smallest power of two at least max(diag): keeps
        // records where the trace question sometimes holds and sometimes not
        Int need = 1;
        while (need * Int(static_cast<long>(l)) < trace(c)) need *= 2;
        b.defect_group_order = need;
        b.brauer_degrees = oracle::random_positive_degrees(rng, l, 7);
        b.cartan = c;

        auto [sum, question] = trace_criterion(b);
        Verdict local = local_conjecture(b);
        if (question.holds) {
            ++implications_seen;
            CHECK(local.holds);
        }
        if (sum.equality) CHECK(b.l() == 1);
    }
    CHECK(implications_seen > 0);
}

TEST_CASE("severity classification") {
    Verdict fail_no_lb = no_lb_factor(a5_block());
    CHECK(classify(fail_no_lb, Int(2)) == Severity::Informational);

    Verdict fail_strong = strong_local(s10_block());
    CHECK(classify(fail_strong, Int(2)) == Severity::Informational);
    CHECK(classify(fail_strong, Int(3)) == Severity::Finding);

    Verdict ok = local_conjecture(a5_block());
    CHECK(classify(ok, Int(2)) == Severity::Ok);

    auto a7 = brauer_problem_diagnostics(a7_block());
    CHECK(classify(a7[1], Int(3)) == Severity::Informational);
}
