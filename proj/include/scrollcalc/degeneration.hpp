#ifndef SCROLLCALC_DEGENERATION_HPP
#define SCROLLCALC_DEGENERATION_HPP

#include <vector>

#include "scrollcalc/p1.hpp"
#include "scrollcalc/scroll.hpp"

namespace scrollcalc {

/// The minimal-index counterpart of a configuration: eps = e mod 2 in {0,1},
/// b_eps = b - 3(e-eps)/2, k_eps = k.  Carries the candidate general scroll
/// over F_eps with the same Hilbert-polynomial data as the parent's.
struct EpsilonConfig {
    i64 eps;
    i64 b;
    i64 k;
    ScrollConfig parent;
};

/// Raw (eps, b_eps, k_eps) with no admissibility requirement; the identity
/// on (b, k) whenever e is already 0 or 1.
struct EpsilonTriple {
    i64 eps = 0;
    i64 b = 0;
    i64 k = 0;
};

EpsilonTriple epsilon_reduction(i64 e, i64 b, i64 k);

/// The translated bounds: 2b_eps >= 3(e+eps)+2 and
/// b_eps + (e-3eps)/2 < k_eps < 2b_eps - 3eps - e.
bool epsilon_bounds_hold(i64 e, const EpsilonTriple& t);

/// Builds the EpsilonConfig and checks every invariant (parity, k carried
/// over, exact division, translated bounds).
EpsilonConfig epsilon_config(const ScrollConfig& cfg);

/// A_eps = 2C + (2b_eps-k-2eps)f, B_eps = C + (k-b_eps+2eps)f on F_eps.
/// Both classes are guaranteed very-ample by the translated bounds; the
/// assertion failing would be an internal error.
BundlePair epsilon_classes(const EpsilonConfig& ec);

struct EpsilonInvariance {
    bool deg_match = false;   // deg(E_eps) = d_e
    bool h0_match = false;    // h0(E_eps) = n_e + 1
    bool dim_match = false;   // dim of eps-component = dim of e-component
};

/// Both sides of each identity are evaluated independently: the eps side via
/// the F_eps cohomology and Chern routes, the e side via scroll invariants.
EpsilonInvariance epsilon_invariance(const ScrollConfig& cfg);

/// Pushforward of E to P^1, rank five:
/// degrees {2b-k-2e, 2b-k-3e, 2b-k-4e, k-b+2e, k-b+e}, total 4b-k-6e.
SplittingType pushforward_type(const ScrollConfig& cfg);

/// The eps-side pushforward with (b_eps, k, eps) in place of (b, k, e);
/// same total degree as pushforward_type.
SplittingType pushforward_type_eps(const ScrollConfig& cfg);

struct TwistGap {
    i64 twist = 0;
    i64 h0_eps = 0;
    i64 h0_e = 0;
};

/// Numerical certificate that the eps-side scroll degenerates to the e-side
/// one: equal rank/degree pushforwards with the balanced eps type dominating.
struct SpecializationCertificate {
    SplittingType balanced_side;  // pushforward_type_eps
    SplittingType special_side;   // pushforward_type
    bool dominates = false;
    std::vector<TwistGap> gap_profile;
};

SpecializationCertificate specialization_certificate(const ScrollConfig& cfg);

/// dim Ext^1(B_eps, A_eps): 0 for 2k < 3b_eps+2-5eps, else 4k-6b_eps-2+9eps.
i64 dim_ext1_eps_piecewise(const EpsilonConfig& ec);

/// Direct route h^1(A_eps - B_eps).
i64 dim_ext1_eps_direct(const EpsilonConfig& ec);

/// h^0(E_eps tensor E_eps^dual): 6b_eps-4k-9eps+4 in the decomposable band
/// (rechecked against 2 + h0(A_eps-B_eps)), else 1 for E_eps general.
i64 h0_end_eps(const EpsilonConfig& ec, bool generic);

}  // namespace scrollcalc

#endif
