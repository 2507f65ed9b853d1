#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scrollcalc/hirzebruch.hpp"

using namespace scrollcalc;

TEST_CASE("intersection pairing") {
    DivisorClass C{2, 1, 0}, f{2, 0, 1};
    CHECK(intersect(C, C) == -2);
    CHECK(intersect(f, f) == 0);
    CHECK(intersect(C, f) == 1);
    CHECK(intersect(DivisorClass{2, 2, 7}, DivisorClass{2, 1, 4}) == 11);

    // symmetric and bilinear
    DivisorClass D1{3, 2, -1}, D2{3, -4, 5}, D3{3, 1, 7};
    CHECK(intersect(D1, D2) == intersect(D2, D1));
    CHECK(intersect(D1 + D2, D3) == intersect(D1, D3) + intersect(D2, D3));

    CHECK_THROWS_WITH_AS(intersect(DivisorClass{2, 1, 0}, DivisorClass{3, 1, 0}),
                         "surface mismatch", std::invalid_argument);
    CHECK_THROWS_AS((DivisorClass{2, 1, 0} + DivisorClass{3, 1, 0}),
                    std::invalid_argument);
}

TEST_CASE("canonical class") {
    CHECK(canonical_class(2) == DivisorClass{2, -2, -4});
    CHECK(canonical_class(0) == DivisorClass{0, -2, -2});
    for (i64 e = 0; e <= 8; ++e) {
        auto K = canonical_class(e);
        CHECK(intersect(K, K) == 8);
    }
}

TEST_CASE("effectivity and very-ampleness") {
    CHECK_FALSE(is_effective(DivisorClass{3, -1, 2}));
    CHECK(is_effective(DivisorClass{2, 0, 0}));
    CHECK(is_effective(DivisorClass{5, 2, 0}));

    CHECK(is_very_ample(DivisorClass{2, 1, 4}));
    CHECK_FALSE(is_very_ample(DivisorClass{2, 1, 2}));  // b = a*e boundary
    CHECK(is_very_ample(DivisorClass{4, 2, 10}));

    // very ample implies effective and positive on fibers
    for (i64 e = 0; e <= 4; ++e)
        for (i64 a = -3; a <= 5; ++a)
            for (i64 b = -3; b <= 12; ++b) {
                DivisorClass D{e, a, b};
                if (!is_very_ample(D)) continue;
                CHECK(is_effective(D));
                CHECK(intersect(D, DivisorClass{e, 0, 1}) > 0);
            }
}

TEST_CASE("Riemann-Roch values") {
    CHECK(chi_rr(DivisorClass{2, 2, 7}) == 18);  // = h0, A-class of (2,11,11)
    CHECK(chi_rr(DivisorClass{2, 0, 0}) == 1);
    CHECK(chi_rr(DivisorClass{2, 1, 4}) == 8);   // B-class of (2,11,11)
}

TEST_CASE("cohomology tables") {
    auto t = cohomology(DivisorClass{2, 1, 3});
    CHECK(t.h0 == 6);
    CHECK(t.h1 == 0);
    CHECK(t.h2 == 0);

    t = cohomology(DivisorClass{3, 1, 1});
    CHECK(t.h0 == 2);
    CHECK(t.h1 == 1);
    CHECK(t.h2 == 0);

    t = cohomology(canonical_class(2));
    CHECK(t.h0 == 0);
    CHECK(t.h1 == 0);
    CHECK(t.h2 == 1);

    CHECK(cohomology(DivisorClass{2, 2, 7}).h0 == 18);
    CHECK(cohomology(DivisorClass{4, 2, 10}).h0 == 21);
}

TEST_CASE("lattice point oracle") {
    CHECK(lattice_point_h0_oracle(DivisorClass{2, 1, 3}) == 6);
    CHECK(lattice_point_h0_oracle(DivisorClass{5, -1, 100}) == 0);
    CHECK(lattice_point_h0_oracle(DivisorClass{4, 2, 10}) == 21);
}

TEST_CASE("Serre duality, oracle equality and chi consistency on the box") {
    for (i64 e = 0; e <= 6; ++e)
        for (i64 a = -10; a <= 10; ++a)
            for (i64 b = -10; b <= 10; ++b) {
                DivisorClass D{e, a, b};
                auto K = canonical_class(e);
                auto cD = cohomology(D);
                auto cKD = cohomology(K - D);
                REQUIRE(cD.h0 == cKD.h2);
                REQUIRE(cD.h2 == cKD.h0);
                REQUIRE(cD.h1 == cKD.h1);
                REQUIRE(cD.h0 == lattice_point_h0_oracle(D));
                REQUIRE(cD.h0 - cD.h1 + cD.h2 == chi_rr(D));
                REQUIRE(cD.chi == chi_rr(D));
                REQUIRE(cD.h1 >= 0);
            }
}

TEST_CASE("text rendering") {
    CHECK(to_string(DivisorClass{2, 2, 7}) == "2C+7f@F2");
    CHECK(to_string(DivisorClass{2, -2, -4}) == "-2C-4f@F2");
    CHECK(to_string(DivisorClass{0, 0, 0}) == "0C+0f@F0");
}
