#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scrollcalc/degeneration.hpp"
#include "test_oracles.hpp"

using namespace scrollcalc;

TEST_CASE("epsilon reduction") {
    auto ec = epsilon_config(ScrollConfig(2, 11, 11));
    CHECK(ec.eps == 0);
    CHECK(ec.b == 8);
    CHECK(ec.k == 11);

    ec = epsilon_config(ScrollConfig(4, 18, 18));
    CHECK(ec.eps == 0);
    CHECK(ec.b == 12);
    CHECK(ec.k == 18);

    ec = epsilon_config(ScrollConfig(3, 15, 15));
    CHECK(ec.eps == 1);
    CHECK(ec.b == 12);
    CHECK(ec.k == 15);

    // identity on an e in {0,1} base
    for (i64 e : {0, 1})
        for (i64 b = -4; b <= 12; ++b)
            for (i64 k = -4; k <= 12; ++k) {
                auto t = epsilon_reduction(e, b, k);
                REQUIRE(t.eps == e);
                REQUIRE(t.b == b);
                REQUIRE(t.k == k);
            }
}

TEST_CASE("translated bounds match strict admissibility") {
    for (i64 e = 2; e <= 8; ++e)
        for (i64 b = 1; b <= 30; ++b)
            for (i64 k = -2; k <= 2 * b; ++k) {
                ScrollConfig cfg(e, b, k);
                auto t = epsilon_reduction(e, b, k);
                REQUIRE(epsilon_bounds_hold(e, t) == admissible_strict(cfg));
            }
}

TEST_CASE("epsilon classes") {
    auto p = epsilon_classes(epsilon_config(ScrollConfig(2, 11, 11)));
    CHECK(p.A == DivisorClass{0, 2, 5});
    CHECK(p.B == DivisorClass{0, 1, 3});

    p = epsilon_classes(epsilon_config(ScrollConfig(4, 18, 18)));
    CHECK(p.A == DivisorClass{0, 2, 6});
    CHECK(p.B == DivisorClass{0, 1, 6});

    p = epsilon_classes(epsilon_config(ScrollConfig(3, 15, 15)));
    CHECK(p.A == DivisorClass{1, 2, 7});
    CHECK(p.B == DivisorClass{1, 1, 5});
    CHECK(p.c2 == 15);
}

TEST_CASE("epsilon invariance") {
    for (auto cfg : {ScrollConfig(2, 11, 11), ScrollConfig(4, 18, 18),
                     ScrollConfig(3, 15, 15)}) {
        auto inv = epsilon_invariance(cfg);
        CHECK(inv.deg_match);
        CHECK(inv.h0_match);
        CHECK(inv.dim_match);
    }
}

TEST_CASE("pushforward splitting types") {
    CHECK(pushforward_type(ScrollConfig(2, 11, 11)).str() == "7,5,4,3,2");
    CHECK(pushforward_type(ScrollConfig(4, 18, 18)).str() == "10,8,6,4,2");
    CHECK(pushforward_type(ScrollConfig(3, 15, 15)).str() == "9,6,6,3,3");

    CHECK(pushforward_type_eps(ScrollConfig(2, 11, 11)).str() == "5,5,5,3,3");
    CHECK(pushforward_type_eps(ScrollConfig(4, 18, 18)).str() == "6,6,6,6,6");
    CHECK(pushforward_type_eps(ScrollConfig(3, 15, 15)).str() == "7,6,5,5,4");
}

TEST_CASE("pushforward degree identities") {
    for (i64 e = 2; e <= 7; ++e)
        for (i64 b = 3 * e + 1; b <= 26; ++b)
            for (i64 k = b - e + 1; k < 2 * b - 4 * e; ++k) {
                ScrollConfig cfg(e, b, k);
                auto te = pushforward_type(cfg);
                auto teps = pushforward_type_eps(cfg);
                REQUIRE(te.degree() == 4 * b - k - 6 * e);
                REQUIRE(te.degree() == teps.degree());
                // h0 at twist 0 recovers h0(E) through the pushforward
                REQUIRE(splitting_cohomology(te, 0).h0 == cohomology_E(cfg).h0);
                REQUIRE(splitting_cohomology(teps, 0).h0 == cohomology_E(cfg).h0);

                // the eps side has consecutive gaps eps among the Sym^2 block
                // and the rank-two block
                auto ec = epsilon_config(cfg);
                i64 xi1 = 2 * ec.b - ec.k - 2 * ec.eps;
                i64 xi2 = 2 * ec.b - ec.k - 3 * ec.eps;
                i64 xi3 = 2 * ec.b - ec.k - 4 * ec.eps;
                i64 eta1 = ec.k - ec.b + 2 * ec.eps;
                i64 eta2 = ec.k - ec.b + ec.eps;
                REQUIRE(xi1 - xi2 == ec.eps);
                REQUIRE(xi2 - xi3 == ec.eps);
                REQUIRE(eta1 - eta2 == ec.eps);
                // and matches the e-side xi/eta recipe after substitution
                i64 mid = 2 * b - k - 3 * e;
                std::vector<i64> via_e = {mid + ec.eps, mid, mid - ec.eps,
                                          k - b + (3 * e + ec.eps) / 2,
                                          k - b + (3 * e - ec.eps) / 2};
                REQUIRE(SplittingType(via_e) == teps);
            }
}

TEST_CASE("specialization certificate") {
    auto cert = specialization_certificate(ScrollConfig(2, 11, 11));
    CHECK(cert.dominates);
    CHECK(cert.balanced_side.str() == "5,5,5,3,3");
    CHECK(cert.special_side.str() == "7,5,4,3,2");
    REQUIRE_FALSE(cert.gap_profile.empty());
    CHECK(cert.gap_profile.front().twist == -8);
    CHECK(cert.gap_profile.back().twist == -1);
    for (const auto& gap : cert.gap_profile) {
        CHECK(gap.h0_e >= gap.h0_eps);  // h0 jumps up in the special limit
        CHECK(gap.h0_eps ==
              splitting_cohomology(cert.balanced_side, gap.twist).h0);
    }

    CHECK(specialization_certificate(ScrollConfig(4, 18, 18)).dominates);
    CHECK(specialization_certificate(ScrollConfig(3, 15, 15)).dominates);
}

TEST_CASE("eps-side Ext and endomorphism formulas against direct routes") {
    for (i64 e = 2; e <= 7; ++e)
        for (i64 b = 3 * e + 1; b <= 26; ++b)
            for (i64 k = b - e + 1; k < 2 * b - 4 * e; ++k) {
                auto ec = epsilon_config(ScrollConfig(e, b, k));
                REQUIRE(dim_ext1_eps_piecewise(ec) == dim_ext1_eps_direct(ec));
                if (2 * ec.k < 3 * ec.b + 2 - 5 * ec.eps) {
                    auto pair = epsilon_classes(ec);
                    REQUIRE(h0_end_eps(ec, false) ==
                            2 + cohomology(pair.A - pair.B).h0 +
                                cohomology(pair.B - pair.A).h0);
                } else {
                    REQUIRE(h0_end_eps(ec, true) == 1);
                    REQUIRE_THROWS_AS(h0_end_eps(ec, false), std::invalid_argument);
                }
            }
}
