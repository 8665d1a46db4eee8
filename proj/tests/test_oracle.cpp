#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "nashtoric/eta.hpp"
#include "nashtoric/oracle.hpp"

using namespace nashtoric;

TEST_CASE("candidate counts") {
    CHECK(oracle_candidate_count(1) == 3);
    CHECK(oracle_candidate_count(2) == 126);
    CHECK(oracle_candidate_count(3) == 92378);
}

TEST_CASE("n=1: every pair is in S and I_1 is the triangle") {
    const OracleResult r = enumerate_S(1);
    CHECK(r.candidates == 3);
    CHECK(r.s_count == 3);
    CHECK(r.points.coordinates() ==
          std::vector<LatticePoint>{{2, 1}, {2, 2}, {2, 3}});
}

TEST_CASE("n=2: exhaustive run and family containment") {
    const OracleResult r = enumerate_S(2);
    CHECK(r.candidates == 126);
    CHECK(r.s_count > 0);
    unsigned long long witness_total = 0;
    for (const auto& e : r.points.points) witness_total += e.witness_count;
    CHECK(witness_total == r.s_count);
    // Every J_eta appears in S: its exponent must be a recorded point.
    const auto coords = r.points.coordinates();
    for (const EtaSequence& eta : enumerate_omega(2)) {
        const LatticePoint m = m_of(2, j_of_eta(2, eta));
        CHECK(std::binary_search(coords.begin(), coords.end(), m));
    }
}

TEST_CASE("cost ceiling refuses n=4 without the override") {
    CHECK_THROWS_AS(enumerate_S(4), CostRefusal);
    CHECK_THROWS_AS(enumerate_S(0), std::invalid_argument);
}

TEST_CASE("chunked evaluation matches the single pass") {
    const OracleResult one = enumerate_S(2, false, 1);
    const OracleResult four = enumerate_S(2, false, 4);
    CHECK(one.s_count == four.s_count);
    REQUIRE(one.points.points.size() == four.points.points.size());
    for (std::size_t i = 0; i < one.points.points.size(); ++i) {
        CHECK(one.points.points[i].p == four.points.points[i].p);
        CHECK(one.points.points[i].witness_count ==
              four.points.points[i].witness_count);
    }
}

TEST_CASE("streaming sink sees exactly the S members") {
    unsigned long long streamed = 0;
    const OracleResult r = enumerate_S(
        1, false, 1, [&](const std::vector<MultiIndex>& J, const LatticePoint& m) {
            ++streamed;
            CHECK(m == m_of(1, J));
        });
    CHECK(streamed == r.s_count);
}

TEST_CASE("cache round trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "nashtoric-test-cache";
    fs::remove_all(dir);
    const OracleResult fresh = run_oracle(2, false, 1, dir.string());
    const OracleResult cached = run_oracle(2, false, 1, dir.string());
    CHECK(fresh.s_count == cached.s_count);
    CHECK(fresh.candidates == cached.candidates);
    REQUIRE(fresh.points.points.size() == cached.points.points.size());
    for (std::size_t i = 0; i < fresh.points.points.size(); ++i)
        CHECK(fresh.points.points[i].p == cached.points.points[i].p);
    fs::remove_all(dir);
}

TEST_CASE("oracle fan and cross check at n=1 and n=2") {
    for (unsigned n = 1; n <= 2; ++n) {
        const OracleResult r = enumerate_S(n);
        const Fan2D fan = oracle_fan(r);
        for (unsigned k = 1; k <= n; ++k)
            CHECK(fan.has_ray({static_cast<long long>(k),
                               1 - static_cast<long long>(k)}));
        CHECK(refines(fan, minimal_resolution_fan(n)));
        CHECK(cross_check(r).pass());
    }
}
