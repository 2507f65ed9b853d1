#include "scrollcalc/hirzebruch.hpp"

#include <stdexcept>

#include "scrollcalc/p1.hpp"

namespace scrollcalc {

namespace {

void require_same_surface(const DivisorClass& lhs, const DivisorClass& rhs) {
    if (lhs.e != rhs.e) throw std::invalid_argument("surface mismatch");
}

// h0 via the pushforward to P^1: for a >= 0 the direct image is
// oplus_{i=0}^{a} O(b - i*e), and higher direct images vanish.
i64 leray_h0(const DivisorClass& d) {
    if (d.a < 0) return 0;
    i128 sum = 0;
    for (i64 i = 0; i <= d.a; ++i)
        sum += h0_p1(checked_sub(d.b, checked_mul(i, d.e)));
    return narrow(sum, "leray h0");
}

}  // namespace

DivisorClass operator+(const DivisorClass& lhs, const DivisorClass& rhs) {
    require_same_surface(lhs, rhs);
    return {lhs.e, checked_add(lhs.a, rhs.a), checked_add(lhs.b, rhs.b)};
}

DivisorClass operator-(const DivisorClass& lhs, const DivisorClass& rhs) {
    require_same_surface(lhs, rhs);
    return {lhs.e, checked_sub(lhs.a, rhs.a), checked_sub(lhs.b, rhs.b)};
}

std::string to_string(const DivisorClass& d) {
    std::string out = std::to_string(d.a) + "C";
    if (d.b >= 0) out += "+";
    out += std::to_string(d.b) + "f@F" + std::to_string(d.e);
    return out;
}

i64 intersect(const DivisorClass& lhs, const DivisorClass& rhs) {
    require_same_surface(lhs, rhs);
    i128 v = -i128(lhs.e) * lhs.a * rhs.a + i128(lhs.a) * rhs.b + i128(rhs.a) * lhs.b;
    return narrow(v, "intersection number");
}

DivisorClass canonical_class(i64 e) {
    if (e < 0) throw std::invalid_argument("negative Hirzebruch index");
    return {e, -2, checked_sub(-2, e)};
}

bool is_effective(const DivisorClass& d) { return d.a >= 0 && d.b >= 0; }

bool is_very_ample(const DivisorClass& d) {
    return d.a > 0 && d.b > checked_mul(d.a, d.e);
}

i64 chi_rr(const DivisorClass& d) {
    auto K = canonical_class(d.e);
    i64 prod = intersect(d, d - K);
    if (prod % 2 != 0)
        throw std::logic_error("odd self-pairing in Riemann-Roch for " + to_string(d));
    return checked_add(prod / 2, 1);
}

CohomologyTable cohomology(const DivisorClass& d) {
    auto K = canonical_class(d.e);
    i64 h0 = leray_h0(d);
    i64 h2 = leray_h0(K - d);  // Serre duality
    i64 chi = chi_rr(d);
    i64 h1 = checked_sub(checked_add(h0, h2), chi);
    if (h1 < 0)
        throw std::logic_error("negative h1 for " + to_string(d));
    return {h0, h1, h2, chi};
}

i64 lattice_point_h0_oracle(const DivisorClass& d) {
    if (d.a < 0) return 0;
    i128 count = 0;
    for (i64 v = 0; v <= d.a; ++v) {
        i64 top = checked_sub(d.b, checked_mul(d.e, v));
        for (i64 u = 0; u <= top; ++u) ++count;
    }
    return narrow(count, "lattice point count");
}

}  // namespace scrollcalc
