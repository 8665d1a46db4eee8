#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nashtoric/multiindex.hpp"

using namespace nashtoric;

TEST_CASE("lambda enumeration order and size") {
    const LambdaSet l22 = enumerate_lambda(2, 2);
    REQUIRE(l22.size() == 5);
    CHECK(l22.elements[0] == MultiIndex(0u, 1u));
    CHECK(l22.elements[1] == MultiIndex(1u, 0u));
    CHECK(l22.elements[2] == MultiIndex(0u, 2u));
    CHECK(l22.elements[3] == MultiIndex(1u, 1u));
    CHECK(l22.elements[4] == MultiIndex(2u, 0u));

    const LambdaSet l31 = enumerate_lambda(3, 1);
    REQUIRE(l31.size() == 3);
    CHECK(l31.elements[0] == MultiIndex(0u, 0u, 1u));
    CHECK(l31.elements[1] == MultiIndex(0u, 1u, 0u));
    CHECK(l31.elements[2] == MultiIndex(1u, 0u, 0u));
}

TEST_CASE("lambda counts match the closed form") {
    CHECK(lambda_count(2, 1) == 2);
    CHECK(lambda_count(2, 2) == 5);
    CHECK(lambda_count(2, 6) == 27);
    CHECK(lambda_count(3, 1) == 3);
    CHECK(lambda_count(3, 2) == 9);
    CHECK(lambda_count(3, 3) == 19);
    for (unsigned t = 2; t <= 3; ++t)
        for (unsigned n = 1; n <= 6; ++n)
            CHECK(enumerate_lambda(t, n).size() == lambda_count(t, n));
}

TEST_CASE("lambda rejects degenerate parameters") {
    CHECK_THROWS_AS(enumerate_lambda(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_lambda(2, 0), std::invalid_argument);
}

TEST_CASE("graded-lex order is total and graded") {
    const LambdaSet lam = enumerate_lambda(3, 3);
    for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
        CHECK(lam.elements[i] < lam.elements[i + 1]);
        CHECK(lam.elements[i].degree() <= lam.elements[i + 1].degree());
    }
}

TEST_CASE("componentwise order and binomial products") {
    CHECK(leq(MultiIndex(0u, 1u), MultiIndex(1u, 1u)));
    CHECK_FALSE(leq(MultiIndex(2u, 0u), MultiIndex(1u, 1u)));
    CHECK_THROWS_AS(leq(MultiIndex(0u, 1u), MultiIndex(0u, 1u, 0u)),
                    std::invalid_argument);
    CHECK(binom_product(MultiIndex(3u, 2u), MultiIndex(1u, 2u)) == 3);
    CHECK(binom_product(MultiIndex(3u, 2u), MultiIndex(4u, 0u)) == 0);
}

TEST_CASE("bar lift evaluates binomials over Lambda_{2,n}") {
    // Entries follow the graded-lex order (0,1),(1,0),(0,2),(1,1),(2,0).
    const std::vector<BigInt> b = bar_lift({2, 0}, 2);
    REQUIRE(b.size() == 5);
    CHECK(b[0] == 0);
    CHECK(b[1] == 2);
    CHECK(b[2] == 0);
    CHECK(b[3] == 0);
    CHECK(b[4] == 1);

    const std::vector<BigInt> c = bar_lift({1, 1}, 2);
    CHECK(c == std::vector<BigInt>{1, 1, 0, 1, 0});

    CHECK_THROWS_AS(bar_lift({-1, 0}, 2), std::invalid_argument);
}

TEST_CASE("apply_An realizes the monomial matrix") {
    // Columns (1,0), (1,1), (n,n+1).
    CHECK(apply_An(6, MultiIndex(0u, 0u, 1u)) == LatticePoint{6, 7});
    CHECK(apply_An(2, MultiIndex(1u, 0u, 0u)) == LatticePoint{1, 0});
    CHECK(apply_An(2, MultiIndex(0u, 1u, 0u)) == LatticePoint{1, 1});
    CHECK(apply_An(3, MultiIndex(1u, 2u, 1u)) == LatticePoint{6, 6});
}

TEST_CASE("m_of sums images and rejects the empty set") {
    const std::vector<MultiIndex> J{MultiIndex(1u, 0u, 0u), MultiIndex(0u, 0u, 1u)};
    CHECK(m_of(1, J) == LatticePoint{2, 2});
    CHECK_THROWS_AS(m_of(1, {}), std::invalid_argument);
}

TEST_CASE("binom_int extends the binomial to integer tops") {
    CHECK(binom_int(-1, 2) == 1);
    CHECK(binom_int(-2, 3) == -4);
    CHECK(binom_int(4, 2) == 6);
    CHECK(binom_int(3, 0) == 1);
    CHECK(binom_int(3, -1) == 0);
    CHECK(binom_int(2, 5) == 0);
}
