#include "doctest.h"
#include "nashtoric/jsonio.hpp"

using namespace nashtoric;

TEST_CASE("points and multi-indices serialize as arrays") {
    CHECK(to_json(LatticePoint{2, -1}).dump() == "[2,-1]");
    CHECK(to_json(MultiIndex(1u, 0u, 2u)).dump() == "[1,0,2]");
}

TEST_CASE("lambda report carries count and ordered elements") {
    const Json j = to_json(enumerate_lambda(2, 2));
    CHECK(j["count"] == 5);
    CHECK(j["elements"][0].dump() == "[0,1]");
    CHECK(j["elements"][4].dump() == "[2,0]");
}

TEST_CASE("eta serialization keeps the label form") {
    const Json j = to_json(EtaSequence{1, {0, 1, 2}});
    CHECK(j["z"] == 1);
    CHECK(j["d"].dump() == "[0,1,2]");
    CHECK(j["label"] == "(1,0,1,2)");
}

TEST_CASE("trace serialization exposes every intermediate value") {
    const Json j = to_json(build_eta_k(6, 3));
    CHECK(j["t"].dump() == "[1,1,2,2,4]");
    CHECK(j["s"].dump() == "[0,0,1,1,2]");
    CHECK(j["d"].dump() == "[0,1,1,1,1,2]");
    CHECK(j["z"] == 1);
}

TEST_CASE("canonical dump is byte-stable") {
    const EtaKReport rep = verify_main(3, 2);
    CHECK(dump_canonical(to_json(rep)) == dump_canonical(to_json(verify_main(3, 2))));
    CHECK(dump_canonical(Json{{"a", 1}}).back() == '\n');
}

TEST_CASE("fan json feeds the svg renderer") {
    const Json fan = to_json(newton_fan(family_points(2)));
    const std::string svg = render_fan_svg(fan);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("(0,1)") != std::string::npos);
    CHECK(svg.find("(3,-2)") != std::string::npos);
    CHECK(render_fan_svg(fan) == svg);
}

TEST_CASE("cross check report includes verdicts per ray") {
    const OracleResult r = enumerate_S(1);
    const Json j = to_json(cross_check(r));
    REQUIRE(j["per_k"].size() == 1);
    CHECK(j["per_k"][0]["ord_match"] == true);
    CHECK(j["pass"] == true);
}
