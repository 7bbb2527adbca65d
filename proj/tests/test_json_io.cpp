#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "dlp/json_io.hpp"
#include "test_util.hpp"

using namespace dlp;
using testutil::pm;
using testutil::sp;

TEST_CASE("PolyMat JSON round trip") {
    PolyMat P = pm(2, 2, 2,
                   {sp({1, 0, 1}), SPoly::zero(2), (Rat(1, 3) * SPoly::monomial(1)).with_grade(2),
                    SPoly::constant(Rat(-7, 2)).with_grade(2)});
    json j = polymat_to_json(P);
    CHECK(j["m"] == 2);
    CHECK(j["n"] == 2);
    CHECK(j["grade"] == 2);
    CHECK(j["coeffs"].size() == 3);
    CHECK(j["coeffs"][1][1][0] == "1/3");
    CHECK(polymat_from_json(j) == P);
}

TEST_CASE("PolyMat JSON rejects malformed input") {
    PolyMat P = pm(1, 1, 1, {sp({0, 1})});
    json good = polymat_to_json(P);

    json missing = good;
    missing.erase("grade");
    CHECK_THROWS_AS(polymat_from_json(missing), std::runtime_error);

    json badrat = good;
    badrat["coeffs"][0][0][0] = "not-a-number";
    CHECK_THROWS_AS(polymat_from_json(badrat), std::runtime_error);

    json short_coeffs = good;
    short_coeffs["coeffs"] = json::array({good["coeffs"][0]});  // 1 matrix, need 2
    CHECK_THROWS_AS(polymat_from_json(short_coeffs), std::runtime_error);

    json ragged = good;
    ragged["coeffs"][0] = json::array();  // empty row set for a 1x1 matrix
    CHECK_THROWS_AS(polymat_from_json(ragged), std::runtime_error);
}

TEST_CASE("Eigenstructure JSON round trip") {
    Eigenstructure E;
    E.finite_eigs[Rat(1, 2)] = {1, 2};
    E.finite_eigs[Rat(-3)] = {1};
    E.inf_mults = {2};
    E.right_minimal_indices = {0, 1};
    E.left_minimal_indices = {};
    E.rank = 3;
    E.grade = 2;
    E.irrational_warning = true;
    json j = eigenstructure_to_json(E);
    CHECK(j["finite"].contains("1/2"));
    CHECK(eigenstructure_from_json(j) == E);
    CHECK(eigenstructure_from_json(j).irrational_warning);
}

TEST_CASE("KroneckerSpec JSON round trip") {
    KroneckerSpec s;
    s.m = 3;
    s.n = 3;
    s.k = 2;
    s.rank = 2;
    s.finite_eigs[Rat(1)] = {1};
    s.finite_eigs[Rat(-2)] = {1};
    s.inf_mults = {1};
    s.right_indices = {1};
    s.left_indices = {0};
    s.seed = 42;
    json j = kronecker_spec_to_json(s);
    KroneckerSpec t = kronecker_spec_from_json(j);
    CHECK(t.m == s.m);
    CHECK(t.n == s.n);
    CHECK(t.k == s.k);
    CHECK(t.rank == s.rank);
    CHECK(t.finite_eigs == s.finite_eigs);
    CHECK(t.inf_mults == s.inf_mults);
    CHECK(t.right_indices == s.right_indices);
    CHECK(t.left_indices == s.left_indices);
    CHECK(t.seed == s.seed);
}

TEST_CASE("file loading diagnostics") {
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), std::runtime_error);

    std::string bad = "/tmp/dlp_test_bad.json";
    {
        std::ofstream f(bad);
        f << "{ this is not json";
    }
    CHECK_THROWS_AS(load_json_file(bad), std::runtime_error);
    std::remove(bad.c_str());

    std::string good = "/tmp/dlp_test_good.json";
    PolyMat P = pm(1, 2, 1, {sp({0, 1}), SPoly::constant(Rat(2)).with_grade(1)});
    {
        std::ofstream f(good);
        f << polymat_to_json(P).dump();
    }
    CHECK(load_polymat(good) == P);
    std::remove(good.c_str());
}
