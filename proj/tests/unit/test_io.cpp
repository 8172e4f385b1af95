#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cocycle/io.hpp"

using namespace cocycle;

TEST_CASE("group descriptors") {
    CHECK(parse_group("cyclic:4") == make_cyclic(4));
    CHECK(parse_group("Z4") == make_cyclic(4));
    CHECK(parse_group("cyclic:2xcyclic:2") == make_product(make_cyclic(2), make_cyclic(2)));
    CHECK(parse_group("V4") == make_product(make_cyclic(2), make_cyclic(2)));
    CHECK(parse_group("D4") == make_dihedral(4));
    CHECK(parse_group("Q8") == make_quaternion());
    CHECK(parse_group("S4").order() == 24);
    CHECK(parse_group("Z2 x Z3 x Z2").order() == 12);
    CHECK(parse_group(R"({"type":"product","factors":[{"type":"cyclic","order":2},"Z3"]})") ==
          make_product(make_cyclic(2), make_cyclic(3)));
    CHECK(parse_group(R"({"type":"table","table":[[0,1],[1,0]]})") == make_cyclic(2));
    CHECK_THROWS_AS(parse_group("cyclic:0"), InputError);
    CHECK_THROWS_AS(parse_group("cyclic"), InputError);
    CHECK_THROWS_AS(parse_group("banana"), InputError);
    CHECK_THROWS_AS(parse_group(R"({"type":"table","table":[[0,1],[0,1]]})"), InputError);
    CHECK_THROWS_AS(parse_group("{not json"), InputError);
}

TEST_CASE("module descriptors") {
    CHECK(parse_module("torsion:2") == AbelianGroup(0, {2}));
    CHECK(parse_module("torsion:2,4") == AbelianGroup(0, {2, 4}));
    CHECK(parse_module("free:1+torsion:3") == AbelianGroup(1, {3}));
    CHECK(parse_module("zero").dim() == 0);
    CHECK(parse_module(R"({"rank":2,"torsion":[5]})") == AbelianGroup(2, {5}));
    CHECK_THROWS_AS(parse_module("torsion:1"), InputError);
    CHECK_THROWS_AS(parse_module("torsion"), InputError);
    CHECK_THROWS_AS(parse_module("weird:3"), InputError);
}

TEST_CASE("actions from generators are closed up") {
    auto G = make_cyclic(4);
    auto A = AbelianGroup::cyclic(5);
    auto S = parse_action(G, A, R"({"generators":{"1":[[2]]}})");
    // 2 has order 4 mod 5: 1, 2, 4, 3
    CHECK(S->matrix(0) == IntMat{{1}});
    CHECK(S->matrix(1) == IntMat{{2}});
    CHECK(S->matrix(2) == IntMat{{4}});
    CHECK(S->matrix(3) == IntMat{{3}});
    CHECK(parse_action(G, A, "")->is_trivial());
    CHECK(parse_action(G, A, "trivial")->is_trivial());
    auto listed = parse_action(make_cyclic(2), A, "[[[1]],[[4]]]");
    CHECK(listed->matrix(1) == IntMat{{4}});
    // 2 has order 4, so it cannot be the image of an element of order 2
    CHECK_THROWS_AS(parse_action(make_cyclic(2), A, R"({"generators":{"1":[[2]]}})"), InputError);
    // 2 does not generate Z4
    CHECK_THROWS_AS(parse_action(G, A, R"({"generators":{"2":[[4]]}})"), InputError);
    CHECK_THROWS_AS(parse_action(G, A, "[[[1]]]"), InputError);
}

TEST_CASE("cochain JSON round trip") {
    auto S = std::make_shared<const GAction>(GAction::trivial(make_cyclic(3), AbelianGroup(0, {2, 3})));
    auto c = cochain_from_json(S, 2, Json::parse(R"({"1,2":[1,2],"2,2":[0,1]})"));
    CHECK(c.at({1, 2}) == Vec{1, 2});
    CHECK(c.at({2, 1}) == Vec{0, 0});
    CHECK(cochain_from_json(S, 2, cochain_to_json(c)) == c);
    CHECK_THROWS_AS(cochain_from_json(S, 2, Json::parse(R"({"0,1":[1,0]})")), InputError);
    CHECK_THROWS_AS(cochain_from_json(S, 2, Json::parse(R"({"1":[1,0]})")), InputError);
    CHECK_THROWS_AS(cochain_from_json(S, 2, Json::parse(R"({"1,1":1})")), InputError);
    auto T = std::make_shared<const GAction>(GAction::trivial(make_cyclic(2), AbelianGroup::cyclic(4)));
    CHECK(cochain_from_json(T, 2, Json::parse(R"({"1,1":6})")).at({1, 1}) == Vec{2});
}

TEST_CASE("digests and rationals") {
    // published FNV-1a 64-bit test vectors
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
    Json a = Json::parse(R"({"b":1,"a":[1,2]})"), b = Json::parse(R"({"a":[1,2],"b":1})");
    CHECK(results_digest(a) == results_digest(b));
    CHECK(results_digest(a).rfind("fnv1a64:", 0) == 0);
    CHECK(results_digest(a).size() == 8 + 16);
    CHECK(rational_string(Rational(1, 2)) == "1/2");
    CHECK(rational_string(Rational(0)) == "0");
    CHECK(rational_string(Rational(-4, 6)) == "-2/3");
    CHECK(parse_index_list("0, 2,4") == std::vector<int>{0, 2, 4});
    CHECK(parse_index_list("").empty());
    CHECK_THROWS_AS(parse_index_list("0,x"), InputError);
}
