#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlp/mobius.hpp"
#include "test_util.hpp"

using namespace dlp;
using testutil::pm;
using testutil::rm;
using testutil::sp;

TEST_CASE("MobiusMap basics") {
    CHECK_THROWS(MobiusMap(Rat(1), Rat(2), Rat(2), Rat(4)));  // det 0
    MobiusMap r(Rat(2), Rat(1), Rat(1), Rat(3));
    CHECK(r.det() == Rat(5));
    CHECK(r.num() == sp({1, 2}));
    CHECK(r.den() == sp({3, 1}));
    CHECK(r.apply(Rat(0)).value() == Rat(1, 3));
    CHECK_FALSE(r.apply(Rat(-3)).has_value());  // pole
    MobiusMap ri = r.inverse();
    CHECK(ri.apply(r.apply(Rat(7)).value()).value() == Rat(7));
    MobiusMap s = MobiusMap::reciprocal();
    MobiusMap rs = r.compose(s);  // z -> r(1/z)
    CHECK(rs.apply(Rat(2)).value() == r.apply(Rat(1, 2)).value());
}

TEST_CASE("Mobius transform of matrix polynomials") {
    // reversal: z^2 P(1/z) swaps the entries of [1, z^2]
    PolyMat P = pm(1, 2, 2, {SPoly::constant(Rat(1)).with_grade(2), SPoly::monomial(2)});
    PolyMat R = mobius_transform(P, 2, MobiusMap::reciprocal());
    CHECK(R.entry(0, 0) == SPoly::monomial(2));
    CHECK(R.entry(0, 1) == SPoly::constant(Rat(1)).with_grade(2));

    // identity map leaves P untouched
    CHECK(mobius_transform(P, 2, MobiusMap::identity()) == P);

    // shift: (z - 1) under z -> z + 1 becomes z
    PolyMat S = pm(1, 1, 1, {sp({-1, 1})});
    MobiusMap shift(Rat(1), Rat(1), Rat(0), Rat(1));
    CHECK(mobius_transform(S, 1, shift).entry(0, 0) == SPoly::monomial(1));

    CHECK_THROWS(mobius_transform(P, 1, shift));  // grade below the degree
    CHECK(mobius_scalar(sp({-1, 1}), 1, shift) == SPoly::monomial(1));
}

TEST_CASE("Mobius round trip and composition laws") {
    PolyMat P = pm(2, 2, 3,
                   {sp({1, 2, 0, 1}), sp({0, 1}).with_grade(3), SPoly::constant(Rat(3)).with_grade(3),
                    sp({1, 0, 5}).with_grade(3)});
    MobiusMap r(Rat(2), Rat(1), Rat(1), Rat(3));
    MobiusMap s(Rat(0), Rat(1), Rat(1), Rat(-1));

    // M_{g,r^{-1}} o M_{g,r} = det(r)^g id
    PolyMat back = mobius_transform(mobius_transform(P, 3, r), 3, r.inverse());
    CHECK(back == SPoly::constant(r.det().pow(3)) * P);

    // M_{g,r} o M_{g,s} = M_{g, s o r}
    PolyMat two_step = mobius_transform(mobius_transform(P, 3, s), 3, r);
    CHECK(two_step == mobius_transform(P, 3, s.compose(r)));
}

TEST_CASE("change of basis matrix B") {
    CHECK(change_basis_B(MobiusMap::identity(), 3) == RatMat::identity(3));
    CHECK(change_basis_B(MobiusMap::reciprocal(), 2) == rm(2, 2, {0, 1, 1, 0}));

    // B V(z) = [n^{k-1}, n^{k-2} d, ..., d^{k-1}]^T, verified symbolically
    MobiusMap r(Rat(2), Rat(1), Rat(1), Rat(3));
    for (int k = 2; k <= 6; ++k) {
        RatMat B = change_basis_B(r, k);
        PolyMat BV = B * PolyMat::vandermonde_vector(k);
        for (int i = 0; i < k; ++i) {
            SPoly want = SPoly::constant(Rat(1));
            for (int t = 0; t < k - 1 - i; ++t) want = want * r.num();
            for (int t = 0; t < i; ++t) want = want * r.den();
            CHECK(BV.entry(i, 0) == want);
        }
        CHECK(B.det() != Rat(0));
    }
}

TEST_CASE("commuting diagram between the pencil and the transform") {
    PolyMat P = pm(1, 2, 2, {SPoly::constant(Rat(1)).with_grade(2), SPoly::monomial(2)});
    Ansatz v = Ansatz::from_poly(sp({-1, 1}));
    std::string detail;
    CHECK(commuting_diagram_check(P, v, MobiusMap::reciprocal(), &detail));
    CHECK(commuting_diagram_check(P, v, MobiusMap(Rat(1), Rat(1), Rat(0), Rat(1))));
    CHECK(commuting_diagram_check(P, v, MobiusMap(Rat(2), Rat(1), Rat(1), Rat(3))));

    PolyMat Q = pm(2, 2, 3,
                   {sp({1, 2, 0, 1}), sp({0, 1}).with_grade(3), SPoly::constant(Rat(3)).with_grade(3),
                    sp({1, 0, 5}).with_grade(3)});
    Ansatz u = Ansatz::from_poly(sp({-1, 0, 1}));
    CHECK(commuting_diagram_check(Q, u, MobiusMap::reciprocal()));
    CHECK(commuting_diagram_check(Q, u, MobiusMap(Rat(1), Rat(-2), Rat(3), Rat(1))));
}

TEST_CASE("eigenstructure transport under a Mobius map") {
    Eigenstructure E;
    E.finite_eigs[Rat(0)] = {3};
    E.finite_eigs[Rat(2)] = {1};
    E.inf_mults = {1, 2};
    E.right_minimal_indices = {1};
    E.left_minimal_indices = {0, 2};
    E.rank = 4;
    E.grade = 3;

    Eigenstructure T = transport_eigenstructure(E, MobiusMap::reciprocal());
    // 0 <-> infinity, 2 -> 1/2; indices and multiplicities survive
    REQUIRE(T.finite_eigs.count(Rat(1, 2)) == 1);
    CHECK(T.finite_eigs.at(Rat(1, 2)) == std::vector<int>{1});
    REQUIRE(T.finite_eigs.count(Rat(0)) == 1);
    CHECK(T.finite_eigs.at(Rat(0)) == std::vector<int>{1, 2});
    CHECK(T.inf_mults == std::vector<int>{3});
    CHECK(T.right_minimal_indices == E.right_minimal_indices);
    CHECK(T.left_minimal_indices == E.left_minimal_indices);
    CHECK(T.rank == E.rank);
    CHECK(T.index_sum() == E.index_sum());

    // round trip through the inverse map restores the original
    Eigenstructure back = transport_eigenstructure(T, MobiusMap::reciprocal().inverse());
    CHECK(back == E);

    // a shift keeps infinity at infinity
    Eigenstructure S = transport_eigenstructure(E, MobiusMap(Rat(1), Rat(1), Rat(0), Rat(1)));
    CHECK(S.inf_mults == E.inf_mults);
    CHECK(S.finite_eigs.count(Rat(-1)) == 1);
    CHECK(S.finite_eigs.count(Rat(1)) == 1);
}

TEST_CASE("probing a map that clears the structure at infinity") {
    // spectrum {0, 1}, v root at -1: the first free probe point is 2
    PolyMat P = pm(2, 2, 2,
                   {(SPoly::monomial(1) * sp({-1, 1})).with_grade(2), SPoly::zero(2),
                    SPoly::zero(2), SPoly::constant(Rat(1)).with_grade(2)});
    SPoly v = sp({1, 1});
    MobiusMap r = move_infinity_map(P, &v);
    CHECK(r.a == Rat(2));
    CHECK(r.b == Rat(1));
    CHECK(r.c == Rat(1));
    CHECK(r.d == Rat(0));
    // the image polynomial has full-rank leading coefficient, so no infinite
    // eigenvalues remain
    PolyMat M = mobius_transform(P, 2, r);
    CHECK(M.high_order_coefficient().rank() == 2);
}
