#ifndef SCROLLCALC_HIRZEBRUCH_HPP
#define SCROLLCALC_HIRZEBRUCH_HPP

#include <string>

#include "scrollcalc/arith.hpp"

namespace scrollcalc {

/// Numerical divisor class a*C + b*f on the Hirzebruch surface F_e, where C
/// is the section with C^2 = -e and f a fiber (C.f = 1, f^2 = 0).  Classes
/// on different surfaces never interact; pairing them is an error.
struct DivisorClass {
    i64 e = 0;  // Hirzebruch index, >= 0
    i64 a = 0;  // coefficient of C
    i64 b = 0;  // coefficient of f

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& lhs, const DivisorClass& rhs);
DivisorClass operator-(const DivisorClass& lhs, const DivisorClass& rhs);

/// "2C+7f@F2"; coefficients always printed, e.g. "-2C-4f@F2", "0C+0f@F0".
std::string to_string(const DivisorClass& d);

/// Intersection number on F_e: -e*a1*a2 + a1*b2 + a2*b1.
i64 intersect(const DivisorClass& lhs, const DivisorClass& rhs);

/// K_{F_e} = -2C - (e+2)f.
DivisorClass canonical_class(i64 e);

/// The effective cone of F_e is spanned by C and f.
bool is_effective(const DivisorClass& d);

/// On F_e ampleness and very-ampleness coincide: a > 0 and b > a*e.
bool is_very_ample(const DivisorClass& d);

/// Riemann-Roch: chi(D) = D.(D - K)/2 + 1.  The product is always even;
/// an odd value indicates an arithmetic bug and throws.
i64 chi_rr(const DivisorClass& d);

struct CohomologyTable {
    i64 h0 = 0;
    i64 h1 = 0;
    i64 h2 = 0;
    i64 chi = 0;  // = h0 - h1 + h2
};

/// Full cohomology of O(D).  h0 comes from the pushforward to P^1 (zero for
/// a < 0), h2 from Serre duality, and h1 = h0 + h2 - chi so that one code
/// path covers every a, including a <= -2 where R^1pi_* is nonzero.
CohomologyTable cohomology(const DivisorClass& d);

/// Independent route for h0: counts lattice points (u, v) with 0 <= v <= a
/// and 0 <= u <= b - e*v by an explicit double loop.
i64 lattice_point_h0_oracle(const DivisorClass& d);

}  // namespace scrollcalc

#endif
