#include <catch2/catch_amalgamated.hpp>

#include "toral/json_io.hpp"

using namespace toral;

TEST_CASE("lattice parsing") {
    Json j = Json::parse(R"({"gram": [[2, 1], [1, 2]]})");
    EvenLattice l = parse_lattice(j);
    CHECK(l.rank() == 2);
    CHECK(l.det() == 3);

    CHECK_THROWS_AS(parse_lattice(Json::parse(R"({"matrix": [[2]]})")), InputError);
    CHECK_THROWS_AS(parse_lattice(Json::parse(R"({"gram": [[2, 1], [1]]})")), InputError);
    CHECK_THROWS_AS(parse_lattice(Json::parse(R"({"gram": [[2.5]]})")), InputError);
    CHECK_THROWS_AS(parse_lattice(Json::parse(R"({"gram": []})")), InputError);
    // well-formed JSON, but not an even lattice
    CHECK_THROWS_AS(parse_lattice(Json::parse(R"({"gram": [[1]]})")), NotEven);
}

TEST_CASE("manifold parsing") {
    SECTION("surgery") {
        Presentation p =
            parse_manifold(Json::parse(R"({"surgery": {"linking": [[0, 1], [1, 0]]}})"));
        CHECK(p.kind == Presentation::Kind::SurgeryLink);
        CHECK(p.components() == 2);
        CHECK_THROWS_AS(parse_manifold(Json::parse(R"({"surgery": {}})")), InputError);
        CHECK_THROWS_AS(
            parse_manifold(Json::parse(R"({"surgery": {"linking": [[0, 1], [2, 0]]}})")),
            InvalidPresentation);
    }
    SECTION("standard families") {
        CHECK(parse_manifold(Json::parse(R"({"standard": {"family": "T3"}})")).family ==
              Family::T3);
        Presentation sg =
            parse_manifold(Json::parse(R"({"standard": {"family": "SigmaXS1", "g": 3}})"));
        CHECK(sg.genus == 3);
        Presentation lens =
            parse_manifold(Json::parse(R"({"standard": {"family": "Lens", "p": 7, "q": 2}})"));
        CHECK(lens.p == 7);
        CHECK(lens.q == 2);
        Presentation cs = parse_manifold(Json::parse(
            R"({"standard": {"family": "ConnectedSum",
                 "summands": [{"standard": {"family": "S3"}},
                              {"surgery": {"linking": [[5]]}}]}})"));
        REQUIRE(cs.summands.size() == 2);
        CHECK(cs.summands[1].kind == Presentation::Kind::SurgeryLink);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(parse_manifold(Json::parse(R"({"standard": {"family": "RP3"}})")),
                        InputError);
        CHECK_THROWS_AS(parse_manifold(Json::parse(R"({"standard": {}})")), InputError);
        CHECK_THROWS_AS(parse_manifold(Json::parse(R"({"other": 1})")), InputError);
        CHECK_THROWS_AS(
            parse_manifold(Json::parse(R"({"standard": {"family": "SigmaXS1"}})")),
            InputError);
        CHECK_THROWS_AS(
            parse_manifold(Json::parse(R"({"standard": {"family": "Lens", "p": 4, "q": 2}})")),
            InvalidPresentation);
    }
}

TEST_CASE("file loading") {
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), InputError);
}
