#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "blockcheck/linalg.hpp"
#include "blockcheck/tame.hpp"
#include "oracles.hpp"

using namespace blockcheck;

namespace {

IntMatrix a5_cartan() {
    return IntMatrix::from_rows({{4, 2, 2}, {2, 2, 1}, {2, 1, 2}});
}

}  // namespace

TEST_CASE("determinant on small fixed matrices") {
    CHECK(det(IntMatrix::from_rows({{4, 3}, {3, 4}})) == 7);
    CHECK(det(IntMatrix::identity(5)) == 1);
    CHECK(det(IntMatrix::from_rows({{4, 2}, {2, 2}})) == 4);
    CHECK(det(a5_cartan()) == 4);
    CHECK(det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det(IntMatrix::from_rows({{0, 0}, {0, 5}})) == 0);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937_64 rng(20240501);
    for (int round = 0; round < 300; ++round) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = oracle::rand_int(rng, -9, 9);
        CHECK(det(m) == oracle::det_cofactor(m));
    }
}

TEST_CASE("leading principal minors agree with per-minor determinants") {
    std::mt19937_64 rng(20240502);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = oracle::rand_int(rng, -6, 6);
        auto minors = leading_principal_minors(m);
        REQUIRE(minors.size() == n);
        for (std::size_t k = 1; k <= n; ++k) {
            IntMatrix lead(k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
            CHECK(minors[k - 1] == oracle::det_cofactor(lead));
        }
    }
}

TEST_CASE("positive definiteness: fixed examples") {
    CHECK(is_positive_definite(IntMatrix::from_rows({{2, 1}, {1, 2}})));
    CHECK_FALSE(is_positive_definite(IntMatrix::from_rows({{1, 2}, {2, 1}})));
    CHECK(is_positive_definite(a5_cartan()));
    CHECK_FALSE(is_positive_definite(IntMatrix::from_rows({{0, 0}, {0, 1}})));
    CHECK_FALSE(is_positive_definite(IntMatrix::from_rows({{-2, 0}, {0, 3}})));
    CHECK_THROWS_AS((void)is_positive_definite(IntMatrix::from_rows({{1, 2}, {3, 4}})), Error);
}

TEST_CASE("tame family matrices are positive definite at small defects") {
    for (TameFamily f : all_tame_families())
        for (const Int& d : {Int(8), Int(16), Int(32)})
            for (const TameFamilySpec& spec : admissible_specs(f, d))
                CHECK(is_positive_definite(family_cartan(spec)));
}

TEST_CASE("positive definiteness agrees with a Sturm-sequence oracle") {
    std::mt19937_64 rng(20240503);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
        IntMatrix m = oracle::random_symmetric(rng, n, 20);
        CHECK(is_positive_definite(m) == oracle::positive_definite_by_sturm(m));
    }
}

TEST_CASE("smith normal form: fixed examples") {
    CHECK(smith_normal_form(IntMatrix::from_rows({{5, 4}, {4, 5}})) ==
          std::vector<Int>{1, 9});
    CHECK(smith_normal_form(IntMatrix::identity(4)) == std::vector<Int>{1, 1, 1, 1});
    CHECK(smith_normal_form(a5_cartan()) == std::vector<Int>{1, 1, 4});
    CHECK(smith_normal_form(a5_cartan()) == oracle::smith_by_minors(a5_cartan()));
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 0}})) ==
          std::vector<Int>{2, 0});
}

TEST_CASE("smith normal form satisfies the divisor chain and matches minor gcds") {
    std::mt19937_64 rng(20240504);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = oracle::rand_int(rng, -8, 8);
        auto divisors = smith_normal_form(m);
        REQUIRE(divisors.size() == n);
        Int prod = 1;
        bool past_zero = false;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(divisors[i] >= 0);
            if (divisors[i] == 0) {
                past_zero = true;
            } else {
                CHECK_FALSE(past_zero);  // zeros only at the tail
                prod *= divisors[i];
                if (i + 1 < n && divisors[i + 1] != 0)
                    CHECK(divisors[i + 1] % divisors[i] == 0);
            }
        }
        if (!past_zero) CHECK(prod == abs(det(m)));
        CHECK(divisors == oracle::smith_by_minors(m));
    }
}

TEST_CASE("determinant bounds: fixed examples") {
    auto [hadamard, amgm] = determinant_bounds(IntMatrix::from_rows({{2, 1}, {1, 2}}));
    CHECK(hadamard.check_id == "hadamard");
    CHECK(hadamard.lhs == 3);
    CHECK(hadamard.rhs == 4);
    CHECK(hadamard.holds);
    CHECK(amgm.check_id == "amgm");
    CHECK(amgm.lhs == 12);
    CHECK(amgm.rhs == 16);
    CHECK(amgm.holds);

    auto [h_id, a_id] = determinant_bounds(IntMatrix::identity(3));
    CHECK(h_id.equality);
    CHECK(a_id.equality);

    auto [h_a5, a_a5] = determinant_bounds(a5_cartan());
    CHECK(h_a5.lhs == 4);
    CHECK(h_a5.rhs == 16);
    CHECK(a_a5.lhs == 108);
    CHECK(a_a5.rhs == 512);

    CHECK_THROWS_AS((void)determinant_bounds(IntMatrix::from_rows({{1, 2}, {2, 1}})), Error);
}

TEST_CASE("gram matrices: det >= 0, positive exactly for full column rank") {
    std::mt19937_64 rng(20240505);
    for (int round = 0; round < 100; ++round) {
        std::size_t cols = 1 + static_cast<std::size_t>(rng() % 4);
        std::size_t rows = cols + static_cast<std::size_t>(rng() % 3);
        std::vector<Vec> d(rows, Vec(cols));
        for (auto& row : d)
            for (Int& x : row) x = oracle::rand_int(rng, 0, 4);
        IntMatrix g = gram_matrix(d);
        Int dg = det(g);
        CHECK(dg >= 0);
    }
    // duplicate columns force a singular gram matrix
    IntMatrix g0 = gram_matrix({{1, 1}, {2, 2}, {3, 3}});
    CHECK(det(g0) == 0);
    // an identity-like full-rank stack gives a positive determinant
    IntMatrix g1 = gram_matrix({{1, 0}, {0, 1}, {1, 1}});
    CHECK(det(g1) > 0);
}
