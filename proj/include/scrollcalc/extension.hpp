#ifndef SCROLLCALC_EXTENSION_HPP
#define SCROLLCALC_EXTENSION_HPP

#include <string>
#include <vector>

#include "scrollcalc/hirzebruch.hpp"

namespace scrollcalc {

/// The triple (e, b, k) driving every formula: a rank-two bundle E on F_e
/// with c1 = 3C + b*f and c2 = k, arising as an extension of B by A.
/// Requires e >= 2; the e in {0,1} bases appear only via EpsilonConfig.
struct ScrollConfig {
    ScrollConfig(i64 e_, i64 b_, i64 k_);

    i64 e;
    i64 b;
    i64 k;

    friend bool operator==(const ScrollConfig&, const ScrollConfig&) = default;
};

/// The extension classes A = 2C + (2b-k-2e)f, B = C + (k-b+2e)f together
/// with the Chern data c1 = A + B = 3C + b*f and c2 = A.B = k.  Both
/// identities are rechecked at construction.
struct BundlePair {
    BundlePair(DivisorClass A_, DivisorClass B_, i64 expected_b, i64 expected_k);

    DivisorClass A;
    DivisorClass B;
    DivisorClass c1;
    i64 c2;
};

/// Outcome of the weak admissibility gate.  `violated` lists definitely
/// failed conditions among {"h0>=7", "b>=3e+1", "k+e>b"}; `undetermined`
/// holds "h0>=7" when k lies beyond the guaranteed non-special regime, where
/// condition (i) depends on the unknown h^1(E).  ok means both lists empty.
struct AdmissibleResult {
    bool ok = false;
    std::vector<std::string> violated;
    std::vector<std::string> undetermined;
};

/// Conditions (i) h0(E) >= 7 at h1(E) = 0, (ii) b >= 3e+1, (iii) k+e > b.
AdmissibleResult admissible_weak(const ScrollConfig& cfg);

/// b >= 3e+1 and b-e < k < 2b-4e; implies admissible_weak and very-ampleness
/// of A, B and of the general extension.
bool admissible_strict(const ScrollConfig& cfg);

BundlePair bundle_pair(const ScrollConfig& cfg);

struct BundleCohomology {
    i64 h0 = 0;
    i64 h1 = 0;
    i64 h2 = 0;
    i64 h3 = 0;
};

/// (4b-k-6e+5, 0, 0, 0) in the strict regime, where E is non-special.
BundleCohomology cohomology_E(const ScrollConfig& cfg);

struct ABCohomology {
    i64 h0A = 0;
    i64 h1A = 0;
    i64 h0B = 0;
};

/// h0(A) = 6b-3k-9e+3 + h1(A), h0(B) = 2k-2b+3e+2, cross-checked against the
/// divisor-cohomology route on the bundle_pair classes (disagreement throws).
ABCohomology cohomology_A_B(const ScrollConfig& cfg);

/// Piecewise dim Ext^1(B, A): 0, then 5e+2k-3b-1, then 9e+4k-6b-2, with
/// rational thresholds (3b+2-5e)/2 and (3b+2-4e)/2 compared exactly.
i64 dim_ext1_piecewise(const ScrollConfig& cfg);

/// dim Ext^1(B, A) = h^1(A - B) computed through the cohomology engine.
i64 dim_ext1_direct(const ScrollConfig& cfg);

/// Piecewise h^1(A): 0 / 4e+k-2b-1 / 7e+2k-4b-2 / 9e+3k-6b-3 on the bands
/// cut at k = 2b+2-4e, 2b+2-3e, 2b+2-2e.
i64 h1A_piecewise(const ScrollConfig& cfg);

/// h^0(E tensor E^dual).  In the decomposable band (2k < 3b+2-5e) the value
/// 6b-4k-9e+4 holds for every E and is rechecked against
/// 2 + h0(A-B) + h0(B-A); the other two bands (3b-2k-4e+2, then 1) are only
/// defined for E general, so generic = false is refused there.
i64 h0_end_E(const ScrollConfig& cfg, bool generic);

}  // namespace scrollcalc

#endif
