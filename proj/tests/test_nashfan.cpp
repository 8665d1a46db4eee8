#include "doctest.h"
#include "nashtoric/nashfan.hpp"

using namespace nashtoric;

namespace {

PointCloud cloud_of(unsigned n, const std::vector<LatticePoint>& pts) {
    PointCloud c;
    c.n = n;
    for (const LatticePoint& p : pts) c.add(p);
    return c;
}

const PointCloud kI1 = cloud_of(1, {{2, 1}, {2, 2}, {2, 3}});

}  // namespace

TEST_CASE("c_vector at n=1") {
    // Lambda_{2,1} order: (0,1),(1,0).
    CHECK(c_vector(1, MultiIndex(1u, 0u, 0u)) == std::vector<BigInt>{0, 1});
    CHECK(c_vector(1, MultiIndex(0u, 1u, 0u)) == std::vector<BigInt>{1, 1});
    CHECK(c_vector(1, MultiIndex(0u, 0u, 1u)) == std::vector<BigInt>{2, 1});
    CHECK_THROWS_AS(c_vector(1, MultiIndex(1u, 1u, 0u)), std::invalid_argument);
}

TEST_CASE("l_matrix rows follow graded-lex order of J") {
    const BigIntMatrix m = l_matrix(1, {MultiIndex(0u, 1u, 0u), MultiIndex(1u, 0u, 0u)});
    // Sorted J: (0,1,0) then (1,0,0).
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 1);
    CHECK(determinant(m) == 1);

    const BigIntMatrix m2 =
        l_matrix(1, {MultiIndex(0u, 1u, 0u), MultiIndex(0u, 0u, 1u)});
    CHECK(determinant(m2) != 0);
    CHECK_THROWS_AS(l_matrix(1, {MultiIndex(1u, 0u, 0u)}), std::invalid_argument);
}

TEST_CASE("is_in_S at n=1: all three pairs qualify") {
    const LambdaSet lam = enumerate_lambda(3, 1);
    std::vector<BigInt> dets;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            std::vector<MultiIndex> J{lam.elements[i], lam.elements[j]};
            CHECK(is_in_S(1, J));
            dets.push_back(determinant(l_matrix(1, J)));
        }
    // |dets| over the three pairs: 1, 2, 1 up to order and sign.
    std::vector<BigInt> mags;
    for (BigInt& d : dets) mags.push_back(abs(d));
    std::sort(mags.begin(), mags.end());
    CHECK(mags == std::vector<BigInt>{1, 1, 2});
}

TEST_CASE("is_in_S ignores the order of J") {
    std::vector<MultiIndex> J{MultiIndex(0u, 0u, 1u), MultiIndex(0u, 1u, 0u)};
    std::vector<MultiIndex> rev{J[1], J[0]};
    CHECK(is_in_S(1, J) == is_in_S(1, rev));
}

TEST_CASE("ord_value minimum and minimizers") {
    std::vector<LatticePoint> mins;
    CHECK(ord_value(kI1, {1, 0}, &mins) == 2);
    CHECK(mins.size() == 3);
    CHECK(ord_value(kI1, {0, 1}, &mins) == 1);
    CHECK(mins == std::vector<LatticePoint>{{2, 1}});
    const PointCloud single = cloud_of(1, {{5, 7}});
    CHECK(ord_value(single, {2, -1}) == 3);
    CHECK_THROWS_AS(ord_value(PointCloud{}, {1, 0}), std::invalid_argument);
}

TEST_CASE("ord_value is homogeneous in the direction") {
    for (long t = 1; t <= 4; ++t)
        CHECK(ord_value(kI1, {t * 2, -t}) == t * ord_value(kI1, {2, -1}));
}

TEST_CASE("newton_fan of the n=1 oracle points") {
    const Fan2D fan = newton_fan(kI1);
    CHECK(fan.rays ==
          std::vector<LatticePoint>{{0, 1}, {1, 0}, {2, -1}});
    REQUIRE(fan.cones.size() == 2);
    CHECK(fan.cones[0].tag == LatticePoint{2, 1});
    CHECK(fan.cones[1].tag == LatticePoint{2, 3});
}

TEST_CASE("newton_fan of a single point is the ambient cone") {
    const Fan2D fan = newton_fan(cloud_of(2, {{4, 4}}));
    CHECK(fan.rays == std::vector<LatticePoint>{{0, 1}, {3, -2}});
    REQUIRE(fan.cones.size() == 1);
    CHECK(fan.cones[0].tag == LatticePoint{4, 4});
}

TEST_CASE("newton_fan inserts the edge normal between two points") {
    const Fan2D fan = newton_fan(cloud_of(2, {{3, 1}, {1, 3}}));
    // Edge direction (1,-1) (from (1,3) to (3,1)); inner normal (1,1).
    CHECK(fan.rays ==
          std::vector<LatticePoint>{{0, 1}, {1, 1}, {3, -2}});
    REQUIRE(fan.cones.size() == 2);
    CHECK(fan.cones[0].tag == LatticePoint{3, 1});
    CHECK(fan.cones[1].tag == LatticePoint{1, 3});
}

TEST_CASE("newton_fan cone tags are the exact minimizers") {
    for (unsigned n : {2u, 3u}) {
        const PointCloud fam = family_points(n);
        const Fan2D fan = newton_fan(fam);
        for (const Fan2D::Cone& cone : fan.cones) {
            // An interior direction of the cone: sum of its two rays.
            const LatticePoint v = fan.rays[cone.ray_lo] + fan.rays[cone.ray_hi];
            REQUIRE(cone.tag.has_value());
            CHECK(ord_value(fam, v) == dot(v, *cone.tag));
        }
        for (std::size_t i = 0; i + 1 < fan.cones.size(); ++i)
            CHECK(fan.cones[i].tag != fan.cones[i + 1].tag);
        for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i)
            CHECK(cross(fan.rays[i], fan.rays[i + 1]) < 0);
    }
}

TEST_CASE("family_points at small n") {
    const PointCloud f1 = family_points(1);
    CHECK(f1.coordinates() == std::vector<LatticePoint>{{2, 1}, {2, 3}});
    CHECK(family_points(2).points.size() <= 4);
    // Worked sequence at n=6 contributes its exponent.
    const PointCloud f6 = family_points(6);
    const EtaSequence eta{1, {0, 1, 1, 1, 1, 2}};
    const LatticePoint m = m_of(6, j_of_eta(6, eta));
    const auto coords = f6.coordinates();
    CHECK(std::find(coords.begin(), coords.end(), m) != coords.end());
}

TEST_CASE("minimal resolution fan rays") {
    CHECK(minimal_resolution_fan(1).rays ==
          std::vector<LatticePoint>{{0, 1}, {1, 0}, {2, -1}});
    CHECK(minimal_resolution_fan(2).rays ==
          std::vector<LatticePoint>{{0, 1}, {1, 0}, {2, -1}, {3, -2}});
    CHECK(minimal_resolution_fan(3).rays.size() == 5);
}

TEST_CASE("ray_present detects two-sided minimizers") {
    std::pair<LatticePoint, LatticePoint> w;
    CHECK(ray_present(kI1, 1, &w));
    CHECK(((w.first == LatticePoint{2, 1} && w.second == LatticePoint{2, 3}) ||
           (w.first == LatticePoint{2, 3} && w.second == LatticePoint{2, 1})));
    CHECK_FALSE(ray_present(cloud_of(1, {{2, 1}}), 1));
    CHECK(ray_present(family_points(2), 1));
    CHECK(ray_present(family_points(2), 2));
    CHECK_THROWS_AS(ray_present(kI1, 2), std::invalid_argument);
}

TEST_CASE("refinement criterion") {
    const Fan2D fine = newton_fan(kI1);
    CHECK(refines(fine, fine));
    CHECK(refines(fine, minimal_resolution_fan(1)));
    CHECK_THROWS_AS(refines(minimal_resolution_fan(2), minimal_resolution_fan(3)),
                    std::invalid_argument);
    // A fan missing the coarse ray (1,0) does not refine.
    const Fan2D ambient = newton_fan(cloud_of(1, {{2, 2}}));
    CHECK_FALSE(refines(ambient, minimal_resolution_fan(1)));
    CHECK(refines(minimal_resolution_fan(1), ambient));
}

TEST_CASE("primitive vectors and sigma membership") {
    CHECK(primitive({4, -2}) == LatticePoint{2, -1});
    CHECK(primitive({0, 5}) == LatticePoint{0, 1});
    CHECK(primitive({-6, 9}) == LatticePoint{-2, 3});
    const SigmaCone sigma{2};
    CHECK(sigma.contains({1, 0}));
    CHECK(sigma.contains({0, 1}));
    CHECK(sigma.contains({3, -2}));
    CHECK_FALSE(sigma.contains({-1, 0}));
    CHECK_FALSE(sigma.contains({2, -3}));
}

TEST_CASE("point cloud deduplicates and counts witnesses") {
    PointCloud c;
    c.n = 1;
    c.add({2, 1}, "a");
    c.add({2, 1}, "b");
    c.add({1, 5});
    REQUIRE(c.points.size() == 2);
    CHECK(c.points[0].p == LatticePoint{1, 5});
    CHECK(c.points[1].witness_count == 2);
    CHECK(c.points[1].witnesses == std::vector<std::string>{"a", "b"});
}
