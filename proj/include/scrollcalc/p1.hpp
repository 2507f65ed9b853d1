#ifndef SCROLLCALC_P1_HPP
#define SCROLLCALC_P1_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scrollcalc/arith.hpp"

namespace scrollcalc {

/// h^0(P^1, O(d)) = max(d+1, 0).
inline i64 h0_p1(i64 d) { return d >= 0 ? checked_add(d, 1) : 0; }

/// h^1(P^1, O(d)) = max(-d-1, 0), Serre dual of h0_p1.
inline i64 h1_p1(i64 d) { return d <= -2 ? checked_sub(-1, d) : 0; }

/// Splitting type of a direct sum of line bundles on P^1, i.e. the multiset
/// of degrees of oplus_i O(a_i).  Parts are kept sorted descending.
class SplittingType {
public:
    explicit SplittingType(std::vector<i64> parts);

    /// Parses a comma-separated integer list, e.g. "7,5,4,3,2".
    static SplittingType parse(std::string_view text);

    const std::vector<i64>& parts() const { return parts_; }
    i64 rank() const { return static_cast<i64>(parts_.size()); }
    i64 degree() const;

    /// "7,5,4,3,2"
    std::string str() const;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;

private:
    std::vector<i64> parts_;
};

struct TwistCohomology {
    i64 h0 = 0;
    i64 h1 = 0;
};

/// Cohomology of T(twist): sums h0_p1 / h1_p1 over the twisted parts.
TwistCohomology splitting_cohomology(const SplittingType& type, i64 twist);

/// True iff `special` is a flat specialization of `general`: equal rank and
/// degree, with the sorted partial sums of `special` dominating those of
/// `general`.  Equivalent to h0(general(t)) <= h0(special(t)) for every
/// twist t (semicontinuity of h0).
bool specializes(const SplittingType& general, const SplittingType& special);

/// Inclusive twist window [-max(parts)-1, -min(parts)+1] over both types;
/// outside it the twisted h0 of same-rank same-degree types always agree.
std::pair<i64, i64> active_twist_window(const SplittingType& a, const SplittingType& b);

}  // namespace scrollcalc

#endif
