#include "scrollcalc/degeneration.hpp"

#include <stdexcept>

namespace scrollcalc {

namespace {

void require_strict(const ScrollConfig& cfg, const char* op) {
    if (!admissible_strict(cfg))
        throw std::invalid_argument(std::string(op) + ": inadmissible configuration (" +
                                    std::to_string(cfg.e) + "," + std::to_string(cfg.b) +
                                    "," + std::to_string(cfg.k) + ")");
}

SplittingType pushforward_degrees(i64 base, i64 bb, i64 kk) {
    // Sym^2(O + O(-base)) twist for the A side, (O + O(-base)) twist for B.
    const i128 b = bb, k = kk, e = base;
    std::vector<i64> parts = {
        narrow(2 * b - k - 2 * e, "pushforward part"),
        narrow(2 * b - k - 3 * e, "pushforward part"),
        narrow(2 * b - k - 4 * e, "pushforward part"),
        narrow(k - b + 2 * e, "pushforward part"),
        narrow(k - b + e, "pushforward part"),
    };
    SplittingType type(parts);
    if (type.degree() != narrow(4 * b - k - 6 * e, "pushforward degree"))
        throw std::logic_error("pushforward degree mismatch");
    return type;
}

}  // namespace

EpsilonTriple epsilon_reduction(i64 e, i64 b, i64 k) {
    if (e < 0) throw std::invalid_argument("negative Hirzebruch index");
    i64 eps = e % 2;
    i64 b_eps = narrow(i128(b) - i128(3) * (e - eps) / 2, "b_eps");
    return {eps, b_eps, k};
}

bool epsilon_bounds_hold(i64 e, const EpsilonTriple& t) {
    const i128 eps = t.eps, b = t.b, k = t.k;
    // b_eps >= 3(e+eps)/2 + 1 and b_eps + (e-3eps)/2 < k < 2b_eps - 3eps - e,
    // with the halves cleared by doubling.
    return 2 * b >= 3 * (i128(e) + eps) + 2 && 2 * b + i128(e) - 3 * eps < 2 * k &&
           k < 2 * b - 3 * eps - i128(e);
}

EpsilonConfig epsilon_config(const ScrollConfig& cfg) {
    require_strict(cfg, "epsilon_config");
    auto t = epsilon_reduction(cfg.e, cfg.b, cfg.k);
    if ((cfg.e - t.eps) % 2 != 0 || t.k != cfg.k)
        throw std::logic_error("epsilon reduction broke its defining identities");
    if (i128(2) * t.b != i128(2) * cfg.b - i128(3) * (cfg.e - t.eps))
        throw std::logic_error("epsilon reduction division is not exact");
    if (!epsilon_bounds_hold(cfg.e, t))
        throw std::logic_error("translated bounds fail for an admissible parent");
    return {t.eps, t.b, t.k, cfg};
}

BundlePair epsilon_classes(const EpsilonConfig& ec) {
    const i128 eps = ec.eps, b = ec.b, k = ec.k;
    DivisorClass A{ec.eps, 2, narrow(2 * b - k - 2 * eps, "class A_eps")};
    DivisorClass B{ec.eps, 1, narrow(k - b + 2 * eps, "class B_eps")};
    if (!is_very_ample(A) || !is_very_ample(B))
        throw std::logic_error("epsilon classes must be very ample");
    return BundlePair(A, B, ec.b, ec.k);
}

EpsilonInvariance epsilon_invariance(const ScrollConfig& cfg) {
    auto ec = epsilon_config(cfg);
    auto pair = epsilon_classes(ec);
    auto inv = invariants(cfg);

    EpsilonInvariance out;
    // degree via the Chern route on F_eps
    i64 d_eps = checked_sub(intersect(pair.c1, pair.c1), pair.c2);
    out.deg_match = d_eps == inv.d;

    // h0(E_eps) = h0(A_eps) + h0(B_eps); both classes are non-special, which
    // is asserted rather than trusted.
    auto cA = cohomology(pair.A);
    auto cB = cohomology(pair.B);
    if (cA.h1 != 0 || cB.h1 != 0)
        throw std::logic_error("epsilon classes are unexpectedly special");
    out.h0_match = checked_add(cA.h0, cB.h0) == checked_add(inv.n, 1);

    const i128 n = inv.n;
    i64 dim_eps = narrow(n * (n + 1) + i128(3) * ec.k - i128(2) * ec.b +
                             i128(3) * ec.eps - 5,
                         "dim eps component");
    out.dim_match = dim_eps == dim_component_closed(cfg);
    return out;
}

SplittingType pushforward_type(const ScrollConfig& cfg) {
    require_strict(cfg, "pushforward_type");
    return pushforward_degrees(cfg.e, cfg.b, cfg.k);
}

SplittingType pushforward_type_eps(const ScrollConfig& cfg) {
    require_strict(cfg, "pushforward_type_eps");
    auto ec = epsilon_config(cfg);
    auto type = pushforward_degrees(ec.eps, ec.b, ec.k);
    if (type.degree() != pushforward_type(cfg).degree())
        throw std::logic_error("pushforward degrees differ between the two sides");
    return type;
}

SpecializationCertificate specialization_certificate(const ScrollConfig& cfg) {
    SpecializationCertificate cert{pushforward_type_eps(cfg), pushforward_type(cfg),
                                   false, {}};
    cert.dominates = specializes(cert.balanced_side, cert.special_side);
    auto [lo, hi] = active_twist_window(cert.balanced_side, cert.special_side);
    for (i64 t = lo; t <= hi; ++t)
        cert.gap_profile.push_back({t, splitting_cohomology(cert.balanced_side, t).h0,
                                    splitting_cohomology(cert.special_side, t).h0});
    return cert;
}

i64 dim_ext1_eps_piecewise(const EpsilonConfig& ec) {
    const i128 eps = ec.eps, b = ec.b, k = ec.k;
    if (2 * k < 3 * b + 2 - 5 * eps) return 0;
    return narrow(4 * k - 6 * b - 2 + 9 * eps, "dim ext1 eps");
}

i64 dim_ext1_eps_direct(const EpsilonConfig& ec) {
    auto pair = epsilon_classes(ec);
    return cohomology(pair.A - pair.B).h1;
}

i64 h0_end_eps(const EpsilonConfig& ec, bool generic) {
    const i128 eps = ec.eps, b = ec.b, k = ec.k;
    if (2 * k < 3 * b + 2 - 5 * eps) {
        i64 value = narrow(6 * b - 4 * k - 9 * eps + 4, "h0(End E_eps)");
        auto pair = epsilon_classes(ec);
        i64 split = checked_add(2, checked_add(cohomology(pair.A - pair.B).h0,
                                               cohomology(pair.B - pair.A).h0));
        if (value != split)
            throw std::logic_error("h0_end_eps: decomposable cross-check failed");
        return value;
    }
    if (!generic)
        throw std::invalid_argument(
            "h0_end_eps: endomorphism count for a non-generic extension is undefined "
            "in this branch");
    return 1;
}

}  // namespace scrollcalc
