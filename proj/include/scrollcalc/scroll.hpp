#ifndef SCROLLCALC_SCROLL_HPP
#define SCROLLCALC_SCROLL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scrollcalc/extension.hpp"

namespace scrollcalc {

/// Projective invariants of the embedded scroll X = P(E) in P^n.
struct ScrollInvariants {
    i64 n = 0;  // ambient dimension, h0(E) - 1
    i64 d = 0;  // degree
    i64 g = 0;  // sectional genus, 2g-2 = (K+2L)L^2
};

/// n = 4b-k-6e+4, d = 6b-9e-k, g = 2b-3e-2; d is rechecked against the
/// Chern route c1^2 - c2.
ScrollInvariants invariants(const ScrollConfig& cfg);

/// The seven degree-3 intersection numbers on X used by Riemann-Roch.
struct IntersectionTable {
    i64 K3 = 0;
    i64 K2L = 0;
    i64 KL2 = 0;
    i64 L3 = 0;
    i64 c2L = 0;
    i64 c2K = 0;  // always -24
    i64 c3 = 0;   // always 8
};

IntersectionTable intersection_table(const ScrollConfig& cfg);

/// P(m) = chi(X, mL) as a degree-3 polynomial with exact rational
/// coefficients; P(m) is an integer for every integer m.
class HilbertPolynomial {
public:
    explicit HilbertPolynomial(std::array<Rational, 4> coeffs) : coeffs_(coeffs) {}

    /// coefficient of T^i
    const Rational& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    Rational eval(i64 m) const;

    /// eval(m), which must be integral (non-integral values throw).
    i64 eval_int(i64 m) const { return eval(m).as_integer(); }

    /// "37/6*T^3 + 12*T^2 + 41/6*T + 1"
    std::string str() const;

private:
    std::array<Rational, 4> coeffs_;  // c0 + c1 T + c2 T^2 + c3 T^3
};

HilbertPolynomial hilbert_polynomial(const ScrollConfig& cfg);

/// Expected dimension of the Hilbert-scheme component:
/// n(n+1) + 3k - 2b + 3e - 5.
i64 dim_component_closed(const ScrollConfig& cfg);

/// The same number recomputed as chi(N) by Hirzebruch-Riemann-Roch through a
/// formal expansion over the monomial basis {K^3, K^2L, KL^2, L^3, c2K, c2L,
/// c3}; a non-integer final value throws.
i64 dim_component_hrr(const ScrollConfig& cfg);

struct TangentCohomology {
    i64 chi_T = 0;
    std::optional<i64> h0_T;  // populated only when dim Ext^1 = 0
    std::optional<i64> h1_T;  // then equal to e-1
};

/// chi(T_X) = 6b-4k+9-9e, always equal to (n+1)^2 - 1 - dim_component.
TangentCohomology tangent_cohomology(const ScrollConfig& cfg);

/// Codimension in the component of the locus filled by these scrolls: exact
/// e-1 when dim Ext^1 = 0, otherwise an upper bound e-1 backed by the orbit
/// parameter count.
struct CodimScrollLocus {
    enum class Kind { exact, upper_bound };

    Kind kind = Kind::exact;
    i64 value = 0;              // e-1 in both kinds
    i64 dim_locus_lower_bound = 0;
    i64 tau = -1;               // dim Ext^1 - 1; -1 when Ext^1 = 0
    i64 h0_end_generic = 0;
};

CodimScrollLocus codim_scroll_locus(const ScrollConfig& cfg);

/// Per-configuration summary: invariants, both dimension routes, tangent
/// data, codimension record, consistency flags.
struct ComponentReport {
    ScrollConfig cfg;
    ScrollInvariants inv;
    i64 dim_component = 0;
    i64 dim_component_hrr = 0;
    i64 chi_T = 0;
    std::optional<i64> h0_T;
    std::optional<i64> h1_T;
    CodimScrollLocus codim;
    std::vector<std::string> flags;
    bool consistent = true;
};

ComponentReport component_report(const ScrollConfig& cfg);

}  // namespace scrollcalc

#endif
