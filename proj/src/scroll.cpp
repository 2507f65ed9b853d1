#include "scrollcalc/scroll.hpp"

#include <stdexcept>

namespace scrollcalc {

namespace {

void require_strict(const ScrollConfig& cfg, const char* op) {
    if (!admissible_strict(cfg))
        throw std::invalid_argument(std::string(op) + ": inadmissible configuration (" +
                                    std::to_string(cfg.e) + "," + std::to_string(cfg.b) +
                                    "," + std::to_string(cfg.k) + ")");
}

// Minimal formal algebra in the two degree-1 classes K and L plus the Chern
// contractions, over exact rationals.  Degree-3 expressions live in the fixed
// monomial basis {K^3, K^2L, KL^2, L^3, c2K, c2L, c3} and are evaluated
// against the intersection table.
struct Deg1 {
    Rational k, l;
};

struct Deg2 {
    Rational kk, kl, ll, c2;
};

struct Deg3 {
    Rational k3, k2l, kl2, l3, c2k, c2l, c3;
};

Deg2 operator*(const Deg1& a, const Deg1& b) {
    return {a.k * b.k, a.k * b.l + a.l * b.k, a.l * b.l, 0};
}

Deg3 operator*(const Deg1& a, const Deg2& q) {
    return {a.k * q.kk,
            a.k * q.kl + a.l * q.kk,
            a.k * q.ll + a.l * q.kl,
            a.l * q.ll,
            a.k * q.c2,
            a.l * q.c2,
            0};
}

Deg2 operator-(const Deg2& a, const Deg2& b) {
    return {a.kk - b.kk, a.kl - b.kl, a.ll - b.ll, a.c2 - b.c2};
}

Deg3 scale(const Rational& c, const Deg3& m) {
    return {c * m.k3, c * m.k2l, c * m.kl2, c * m.l3, c * m.c2k, c * m.c2l, c * m.c3};
}

Deg3 operator+(const Deg3& a, const Deg3& b) {
    return {a.k3 + b.k3,   a.k2l + b.k2l, a.kl2 + b.kl2, a.l3 + b.l3,
            a.c2k + b.c2k, a.c2l + b.c2l, a.c3 + b.c3};
}

Rational evaluate(const Deg3& m, const IntersectionTable& t) {
    return m.k3 * t.K3 + m.k2l * t.K2L + m.kl2 * t.KL2 + m.l3 * t.L3 +
           m.c2k * t.c2K + m.c2l * t.c2L + m.c3 * t.c3;
}

}  // namespace

ScrollInvariants invariants(const ScrollConfig& cfg) {
    require_strict(cfg, "invariants");
    const i128 e = cfg.e, b = cfg.b, k = cfg.k;
    ScrollInvariants inv;
    inv.n = narrow(4 * b - k - 6 * e + 4, "n");
    inv.d = narrow(6 * b - 9 * e - k, "d");
    inv.g = narrow(2 * b - 3 * e - 2, "g");

    // degree must agree with the Chern route c1^2 - c2
    auto pair = bundle_pair(cfg);
    if (inv.d != checked_sub(intersect(pair.c1, pair.c1), pair.c2))
        throw std::logic_error("degree disagrees with c1^2 - c2");
    return inv;
}

IntersectionTable intersection_table(const ScrollConfig& cfg) {
    const i128 e = cfg.e, b = cfg.b;
    const i128 d = invariants(cfg).d;
    IntersectionTable t;
    t.KL2 = narrow(-2 * d + 4 * b - 6 * e - 6, "KL2");
    t.K2L = narrow(4 * d - 14 * b + 21 * e + 20, "K2L");
    t.c2L = narrow(2 * b - 3 * e + 10, "c2L");
    t.K3 = narrow(-8 * d + 36 * b - 54 * e - 48, "K3");
    t.L3 = narrow(d, "L3");
    t.c2K = -24;
    t.c3 = 8;
    return t;
}

Rational HilbertPolynomial::eval(i64 m) const {
    Rational acc = 0;
    for (int i = 3; i >= 0; --i) acc = acc * Rational(m) + coeffs_[static_cast<size_t>(i)];
    return acc;
}

std::string HilbertPolynomial::str() const {
    std::string out;
    for (int i = 3; i >= 0; --i) {
        const auto& c = coeffs_[static_cast<size_t>(i)];
        if (!out.empty()) out += " + ";
        out += c.str();
        if (i > 0) out += "*T";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

HilbertPolynomial hilbert_polynomial(const ScrollConfig& cfg) {
    auto t = intersection_table(cfg);
    // chi(mL) = (1/6)m^3 L^3 - (1/4)m^2 L^2.K + (1/12)m L.(K^2+c2) + chi(O),
    // with chi(O) = 1 for a scroll over a rational surface.
    std::array<Rational, 4> c = {
        Rational(1),
        Rational(checked_add(t.K2L, t.c2L), 12),
        Rational(checked_sub(0, t.KL2), 4),
        Rational(t.L3, 6),
    };
    return HilbertPolynomial(c);
}

i64 dim_component_closed(const ScrollConfig& cfg) {
    require_strict(cfg, "dim_component_closed");
    const i128 e = cfg.e, b = cfg.b, k = cfg.k;
    const i128 n = invariants(cfg).n;
    return narrow(n * (n + 1) + 3 * k - 2 * b + 3 * e - 5, "dim component");
}

i64 dim_component_hrr(const ScrollConfig& cfg) {
    const i64 n = invariants(cfg).n;
    const auto table = intersection_table(cfg);

    // Chern classes of the normal bundle from the tangent sequence.
    const Deg1 n1{1, checked_add(n, 1)};
    const Rational half_nn1 = Rational(n, 2) * Rational(checked_add(n, 1));
    const Deg2 n2{1, Rational(checked_add(n, 1)), half_nn1, -1};
    const Deg3 n3{1,
                  Rational(checked_add(n, 1)),
                  half_nn1,
                  Rational(checked_sub(n, 1), 6) * Rational(n) * Rational(checked_add(n, 1)),
                  -2,
                  Rational(checked_sub(0, checked_add(n, 1))),
                  -1};

    const Deg1 c1{-1, 0};       // c1(X) = -K
    const Deg2 c1sq_plus_c2{1, 0, 0, 1};

    const Deg3 todd_cubic = n1 * (n1 * n1) + scale(-3, n1 * n2) + scale(3, n3);
    const Deg3 middle = c1 * (n1 * n1 - Deg2{2 * n2.kk, 2 * n2.kl, 2 * n2.ll, 2 * n2.c2});
    const Deg3 linear = n1 * c1sq_plus_c2;

    Rational chi = Rational(1, 6) * evaluate(todd_cubic, table) +
                   Rational(1, 4) * evaluate(middle, table) +
                   Rational(1, 12) * evaluate(linear, table) +
                   Rational(checked_sub(n, 3));  // (n-3) chi(O_X)
    return chi.as_integer();
}

TangentCohomology tangent_cohomology(const ScrollConfig& cfg) {
    require_strict(cfg, "tangent_cohomology");
    const i128 e = cfg.e, b = cfg.b, k = cfg.k;
    TangentCohomology tc;
    tc.chi_T = narrow(6 * b - 4 * k + 9 - 9 * e, "chi(T)");

    const i128 n = invariants(cfg).n;
    i64 via_component =
        narrow((n + 1) * (n + 1) - 1 - i128(dim_component_closed(cfg)), "chi(T)");
    if (tc.chi_T != via_component)
        throw std::logic_error("chi(T) disagrees with the ambient-tangent route");

    if (dim_ext1_direct(cfg) == 0) {
        tc.h0_T = narrow(6 * b - 4 * k - 8 * e + 8, "h0(T)");
        tc.h1_T = narrow(e - 1, "h1(T)");
        if (*tc.h0_T - *tc.h1_T != tc.chi_T)
            throw std::logic_error("tangent cohomology does not sum to chi(T)");
    }
    return tc;
}

CodimScrollLocus codim_scroll_locus(const ScrollConfig& cfg) {
    require_strict(cfg, "codim_scroll_locus");
    const i64 e = cfg.e;
    const i128 n = invariants(cfg).n;
    const i64 dim_ext1 = dim_ext1_direct(cfg);

    CodimScrollLocus r;
    r.value = checked_sub(e, 1);
    r.h0_end_generic = h0_end_E(cfg, true);

    if (dim_ext1 == 0) {
        r.kind = CodimScrollLocus::Kind::exact;
        r.tau = -1;
        auto tc = tangent_cohomology(cfg);
        r.dim_locus_lower_bound = narrow(n * (n + 2) - *tc.h0_T, "dim locus");
    } else {
        r.kind = CodimScrollLocus::Kind::upper_bound;
        r.tau = checked_sub(dim_ext1, 1);
        r.dim_locus_lower_bound =
            narrow(i128(r.tau) + n * (n + 2) - r.h0_end_generic - 4 - e, "dim locus");
        i64 gap = checked_sub(dim_component_closed(cfg), r.dim_locus_lower_bound);
        if (gap > r.value)
            throw std::logic_error("orbit count exceeds the codimension bound");
    }
    return r;
}

ComponentReport component_report(const ScrollConfig& cfg) {
    ComponentReport rep{cfg,
                        invariants(cfg),
                        dim_component_closed(cfg),
                        dim_component_hrr(cfg),
                        0,
                        std::nullopt,
                        std::nullopt,
                        codim_scroll_locus(cfg),
                        {},
                        true};
    auto tc = tangent_cohomology(cfg);
    rep.chi_T = tc.chi_T;
    rep.h0_T = tc.h0_T;
    rep.h1_T = tc.h1_T;
    if (rep.dim_component != rep.dim_component_hrr) {
        rep.flags.push_back("dimension-route-mismatch: closed " +
                            std::to_string(rep.dim_component) + " vs HRR " +
                            std::to_string(rep.dim_component_hrr));
        rep.consistent = false;
    }
    return rep;
}

}  // namespace scrollcalc
