#include <doctest.h>

#include <json.hpp>

#include "gring/catalog.hpp"
#include "gring/errors.hpp"
#include "gring/io.hpp"
#include "gring/suites.hpp"

using namespace gring;
using nlohmann::json;

TEST_CASE("group round trip") {
    for (const auto& name : catalog::names()) {
        const auto& G = catalog::by_name(name);
        auto j = io::group_to_json(G);
        auto G2 = io::group_from_json(j);
        CHECK(G2.order() == G.order());
        for (unsigned a = 0; a < G.order(); ++a)
            for (unsigned b = 0; b < G.order(); ++b) CHECK(G2.op(a, b) == G.op(a, b));
    }
}

TEST_CASE("group from permutations json") {
    json j = {{"name", "S3"}, {"perm_gens", {{1, 0, 2}, {1, 2, 0}}}, {"degree", 3}};
    auto G = io::group_from_json(j);
    CHECK(G.order() == 6);

    json bad = {{"name", "x"}, {"order", 2}, {"mul", {{0, 1}, {1, 0}}},
                {"perm_gens", {{0}}}, {"degree", 1}};
    CHECK_THROWS_AS(io::group_from_json(bad), InputError);
    json missing = {{"name", "x"}};
    CHECK_THROWS_AS(io::group_from_json(missing), InputError);
}

TEST_CASE("cyclo round trip") {
    auto x = Cyclo::root_of_unity(8, 3) * Cyclo(make_rat(Int(2), Int(7))) +
             Cyclo(make_rat(Int(-1), Int(3)));
    auto j = io::cyclo_to_json(x);
    CHECK(io::cyclo_from_json(j) == x);

    // shorthand forms
    CHECK(io::cyclo_from_json(json(5)) == Cyclo(5L));
    CHECK(io::cyclo_from_json(json("2/3")) == Cyclo(make_rat(Int(2), Int(3))));
    CHECK_THROWS_AS(io::cyclo_from_json(json("a/b")), InputError);
}

TEST_CASE("group ring and matrix round trip") {
    const auto& S3 = catalog::s3();
    auto x = GroupRingElem::unit(S3, 3) - GroupRingElem::unit(S3, 1) * Cyclo(2L);
    auto j = io::group_ring_to_json(x);
    CHECK(io::group_ring_from_json(j, S3) == x);

    PresentationMatrix M;
    M.G = &S3;
    M.d = 2;
    M.dp = 2;
    M.label = "t";
    M.entries = {{x, GroupRingElem::zero(S3)}, {GroupRingElem::one(S3), x * Cyclo(-1L)}};
    auto mj = io::matrix_to_json(M);
    auto M2 = io::matrix_from_json(mj, S3);
    CHECK(M2.entries[1][1] == M.entries[1][1]);

    // non-integral entries rejected
    mj["entries"][0][0]["coeffs"]["g3"] = "1/2";
    CHECK_THROWS_AS(io::matrix_from_json(mj, S3), InputError);
}

TEST_CASE("places round trip") {
    const auto& G = catalog::d4();
    auto cfgs = standard_configs(G);
    for (const auto& cfg : cfgs) {
        auto j = io::places_to_json(cfg);
        auto cfg2 = io::places_from_json(j, G);
        REQUIRE(cfg2.S.size() == cfg.S.size());
        for (unsigned i = 0; i < cfg.S.size(); ++i) {
            CHECK(cfg2.S[i].label == cfg.S[i].label);
            CHECK(cfg2.S[i].decomp.elems == cfg.S[i].decomp.elems);
        }
    }
    json bad = {{"S", json::array({{{"label", "v"}, {"decomp", {9}}}})}};
    CHECK_THROWS_AS(io::places_from_json(bad, G), InputError);
}

TEST_CASE("dirichlet fixture format") {
    // quadratic character mod 5: exponents relative to zeta_4
    json j = {{"modulus", 5}, {"char", {{"1", 0}, {"2", 2}, {"3", 2}, {"4", 0}}}};
    auto chi = io::dirichlet_from_json(j);
    CHECK(chi(2) == -Cyclo::one());
    CHECK(chi(4) == Cyclo::one());
    CHECK(!chi.is_odd());

    json bad = {{"modulus", 5}, {"char", {{"1", 0}, {"2", 1}, {"3", 2}, {"4", 0}}}};
    CHECK_THROWS_AS(io::dirichlet_from_json(bad), InputError);  // not multiplicative
}

TEST_CASE("ltable parsing") {
    json j = {{"chi0", {{"order", 1}, {"leading", -0.5}, {"prec", 10}}},
              {"chi1", {{"order", 0}, {"leading", {0.25, -0.125}}, {"prec", 8}}}};
    LSource src;
    io::ltable_from_json(j, src);
    REQUIRE(src.table.size() == 2);
    CHECK(src.table[0].order == 1);
    CHECK(src.table[1].leading == std::complex<double>(0.25, -0.125));

    json bad = {{"zeta0", {{"order", 0}, {"leading", 1.0}}}};
    LSource src2;
    CHECK_THROWS_AS(io::ltable_from_json(bad, src2), InputError);
}

TEST_CASE("table export shape") {
    const auto& G = catalog::s3();
    CharacterTable T(G);
    auto j = io::table_to_json(T);
    CHECK(j["degrees"].size() == 3);
    CHECK(j["class_reps"].size() == 3);
    CHECK(j["values"].size() == 3);
}

TEST_CASE("regulator json round trip via generator output") {
    // mirror of the shipped sqrt5 fixture
    json reg_json = {
        {"units", {"eps", "sqrt5"}},
        {"places", {"inf1", "inf2", "w5"}},
        {"logs",
         {{0.4812118250596035, -0.4812118250596035, 0.0},
          {0.80471895621705014, 0.80471895621705014, -1.6094379124341003}}},
        {"precision", 13},
        {"action",
         {{{"units", {{1, 0}, {0, 1}}}, {"places", {0, 1, 2}}},
          {{"units", {{-1, 0}, {0, 1}}}, {"places", {1, 0, 2}}}}},
        {"above", {{"inf", {0, 1}}, {"p5", {2}}}}};
    auto reg = io::regulator_from_json(reg_json);
    reg.validate(catalog::c2());
    CHECK(reg.units() == 2);
    CHECK(reg.above.at("p5") == std::vector<unsigned>{2});
}

TEST_CASE("external representation import") {
    const auto& G = catalog::s3();
    CharacterTable T(G);
    // serialize the monomial representations and read them back
    auto built = monomial_irreps(T);
    json j = json::array();
    for (const auto& rep : built) {
        json rj;
        rj["dim"] = rep.dim;
        json mats = json::array();
        for (unsigned g = 0; g < G.order(); ++g) {
            json m = json::array();
            for (unsigned r = 0; r < rep.dim; ++r) {
                json row = json::array();
                for (unsigned c = 0; c < rep.dim; ++c)
                    row.push_back(io::cyclo_to_json(rep.at(g, r, c)));
                m.push_back(row);
            }
            mats.push_back(m);
        }
        rj["mats"] = mats;
        j.push_back(rj);
    }
    auto loaded = io::reps_from_json(j, T);
    auto rs = RepSet::external(T, loaded);  // validates traces and products
    CHECK(rs.reps.size() == T.size());

    j[0]["mats"][0][0][0] = "2";  // identity no longer maps to 1
    CHECK_THROWS_AS(RepSet::external(T, io::reps_from_json(j, T)), ArithmeticError);
}
