#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "accube/json_io.hpp"

#include <filesystem>
#include <random>

using namespace accube;

namespace {

const FiniteAbelianGroup z2 = FiniteAbelianGroup::parse("Z2");
const FiniteAbelianGroup z24 = FiniteAbelianGroup::parse("Z2xZ4");

} // namespace

TEST_CASE("cube and chain round trips") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = static_cast<int>(rng() % 3);
        Cube x;
        x.dim = dim;
        x.labels.resize(size_t(1) << dim);
        for (auto& l : x.labels) l = rng() % 8;
        CHECK(cube_from_json(z24, cube_to_json(z24, x)) == x);
    }
    Chain c(z24, 1);
    c.add(cube_from_json(z24, cube_to_json(z24, Cube{1, {3, 5}})), 2);
    c.add(Cube{1, {1, 2}}, -1);
    json j = chain_to_json(c);
    Chain back = chain_from_json(z24, 1, j);
    CHECK(back.terms() == c.terms());
}

TEST_CASE("cochain file round trip and zero-omission") {
    Cochain z = cochain_from_function3(z2, z2,
                                       [&](const GroupElem&, const GroupElem& y,
                                           const GroupElem& w, const GroupElem&) {
                                           return GroupElem{(y[0] * w[0]) % 2};
                                       });
    json j = cochain_to_json(z);
    // only the four nonzero entries are listed
    CHECK(j.at("values").size() == 4);
    Cochain back = cochain_from_json(j);
    CHECK(back == z);
    // omitted tuples default to zero
    json sparse = j;
    sparse["values"] = json::array();
    CHECK(cochain_from_json(sparse).is_zero());
}

TEST_CASE("nonzero values on normalized-zero tuples are rejected") {
    json j{{"base", "Z2"},
           {"coeff", "Z2"},
           {"degree", 3},
           {"values",
            json::array({json{{"args", json::array({json::array({1L}), json::array({1L}),
                                                    json::array({0L}), json::array({0L})})},
                              {"value", json::array({1L})}}})}};
    CHECK_THROWS_AS(cochain_from_json(j), ParseError);
    // a zero value on the same tuple is tolerated
    j["values"][0]["value"] = json::array({0L});
    CHECK(cochain_from_json(j).is_zero());
}

TEST_CASE("instance file round trips preserve every table") {
    Cochain z = cochain_from_function3(z2, z2,
                                       [&](const GroupElem&, const GroupElem& y,
                                           const GroupElem& w, const GroupElem&) {
                                           return GroupElem{(y[0] * w[0]) % 2};
                                       });
    ACInstance inst = build_special(z2, z2, z);
    ACInstance back = ac_from_json(ac_to_json(inst));
    CHECK(back.b_table == inst.b_table);
    CHECK(back.core.compose_t == inst.core.compose_t);
    CHECK(back.core.sum_mor == inst.core.sum_mor);
    CHECK(back.core.sum_obj == inst.core.sum_obj);
    CHECK(back.l_table == inst.l_table);
    CHECK(verify_ac_axioms(back).ok());

    SMCInstance s = smc_from_ac(inst);
    SMCInstance sback = smc_from_json(smc_to_json(s));
    CHECK(sback.a_table == s.a_table);
    CHECK(sback.c_table == s.c_table);
    CHECK(verify_smc_axioms(sback).ok());
}

TEST_CASE("malformed instance tables are rejected") {
    Cochain z = zero_cochain(z2, z2, 3);
    json j = ac_to_json(build_special(z2, z2, z));
    SUBCASE("bad type") {
        j["type"] = "sm";
        CHECK_THROWS_AS(ac_from_json(j), ParseError);
    }
    SUBCASE("wrong table length") {
        j["b_table"] = json::array({0});
        CHECK_THROWS_AS(ac_from_json(j), ParseError);
    }
    SUBCASE("out-of-range morphism") {
        j["l_table"][0] = 999;
        CHECK_THROWS_AS(ac_from_json(j), ParseError);
    }
    SUBCASE("endpoint out of range") {
        j["morphisms"][0]["src"] = 7;
        CHECK_THROWS_AS(ac_from_json(j), ParseError);
    }
}

TEST_CASE("sinh pair serialization lists only nonzero entries") {
    Cochain z = cochain_from_function3(z2, z2,
                                       [&](const GroupElem&, const GroupElem& y,
                                           const GroupElem& w, const GroupElem&) {
                                           return GroupElem{(y[0] * w[0]) % 2};
                                       });
    SinhPair p = sinh_pair(make_triple(z2, z2, z));
    json j = sinh_to_json(p);
    CHECK(j.at("h").empty());
    CHECK(j.at("c").size() == 1);
    CHECK(j.at("c")[0].at("value") == json::array({1L}));
}

TEST_CASE("triple files resolve relative cocycle paths") {
    Cochain z = zero_cochain(z2, z2, 3);
    std::string dir = "/tmp/accube_io_test";
    std::filesystem::create_directories(dir);
    write_json_file(dir + "/z.json", cochain_to_json(z));
    json t{{"group", "Z2"}, {"coeff", "Z2"}, {"cocycle_file", "z.json"}};
    write_json_file(dir + "/t.json", t);
    ClassifyingTriple back = triple_from_json(read_json_file(dir + "/t.json"), dir);
    CHECK(back.cocycle == z);
    // mismatched header is rejected
    json bad = t;
    bad["group"] = "Z3";
    CHECK_THROWS_AS(triple_from_json(bad, dir), ParseError);
}
