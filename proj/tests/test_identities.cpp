#include "doctest.h"
#include "nashtoric/identities.hpp"

using namespace nashtoric;

TEST_CASE("binomial identities on sample triples") {
    CHECK(check_riordan(5, 3, 2));
    CHECK(check_riordan(0, 0, 0));
    CHECK(check_riordan(4, 2, 3));
    CHECK(check_riordan(2, 1, 3));
    CHECK(check_riordan(12, 12, 12));
}

TEST_CASE("binomial matrix determinants never vanish") {
    CHECK(check_vandermonde_matrix({1, 2}));
    CHECK(check_vandermonde_matrix({1, 2, 3}));
    CHECK(check_vandermonde_matrix({2, 5, 9, 14}));
    CHECK_THROWS_AS(check_vandermonde_matrix({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_vandermonde_matrix({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_vandermonde_matrix({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(check_vandermonde_matrix({}), std::invalid_argument);
}

TEST_CASE("diagonal bar lifts expand over the difference basis") {
    CHECK(check_diagonal_span(3, 2));
    CHECK(check_diagonal_span(1, 1));
    CHECK(check_diagonal_span(4, 9));
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 0; m <= 2 * n; ++m) CHECK(check_diagonal_span(n, m));
}

TEST_CASE("alternating double sums of bar lifts vanish") {
    CHECK(check_vanishing_sum(2, 1, 0, 1, false));
    CHECK(check_vanishing_sum(3, 0, 2, 2, false));
    CHECK(check_vanishing_sum(3, 2, 1, 3, true));
    CHECK_THROWS_AS(check_vanishing_sum(3, 1, 1, 0, false), std::invalid_argument);
    CHECK_THROWS_AS(check_vanishing_sum(3, 1, 1, 4, false), std::invalid_argument);
}

TEST_CASE("translated segments keep the row span") {
    CHECK(check_translation_span(2, EtaSequence{1, {0, 2}}, 1, {0}));
    CHECK(check_translation_span(2, EtaSequence{1, {0, 2}}, 1, {3}));
    CHECK(check_translation_span(3, EtaSequence{1, {0, 1, 2}}, 2, {2, 5}));
    CHECK_THROWS_AS(check_translation_span(2, EtaSequence{1, {0, 2}}, 1, {1, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_translation_span(2, EtaSequence{1, {0, 2}}, 3, {1, 2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_translation_span(2, EtaSequence{1, {0, 2}}, 1, {-1}),
                    std::invalid_argument);
}

TEST_CASE("translation span holds for every sequence and shift sample") {
    for (unsigned n = 1; n <= 3; ++n)
        for (const EtaSequence& eta : enumerate_omega(n))
            for (unsigned l = 1; l <= n; ++l) {
                std::vector<long long> shifts(l);
                for (unsigned i = 0; i < l; ++i) shifts[i] = (7 * i + 3) % 9;
                CHECK(check_translation_span(n, eta, l, shifts));
            }
}
