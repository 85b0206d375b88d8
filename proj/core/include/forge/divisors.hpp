#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forge/upoly.hpp"

namespace forge {

/// Reduced rational function num/den with den monic and gcd(num, den) = 1.
/// The zero function is rejected at construction.
struct RatFun {
    Poly num;
    Poly den;
};

/// Cancels the gcd and rescales so den is monic (the scalar is absorbed
/// into num). Throws ZeroNumerator / ZeroDenominator.
RatFun make_ratfun(const Field& k, Poly num, Poly den);

bool is_constant(const RatFun& f);

/// A point of P^1(F_q): either a field element or the point at infinity.
struct P1Point {
    bool infinite = false;
    Fe x{};
    static P1Point finite(Fe v) { return {false, v}; }
    static P1Point infinity() { return {true, Fe{}}; }
};

/// One record of a divisor profile. Rational locations (finite or
/// infinity) carry the local leading coefficient c; closure classes
/// aggregate conjugate non-rational points as (d, count) only.
struct Place {
    enum class Loc { finite, closure_class, infinity };
    Loc loc;
    Fe x{};               // finite only
    int64_t d = 0;        // signed multiplicity: zeros positive, poles negative
    uint64_t count = 1;   // number of closure points in this record
    std::optional<Fe> c;  // local leading coefficient, rational locations only
};

/// Zeros and poles of f on P^1 over the algebraic closure, grouped by
/// multiplicity and rationality, with infinity included when it lies in
/// the support. ell is the total number of distinct closure points.
struct DivisorProfile {
    std::vector<Place> places;
    uint64_t ell = 0;
};

DivisorProfile divisor_profile(const Field& k, const RatFun& f);

/// Local valuation and leading coefficient of f at a point of P^1(F_q),
/// with respect to the uniformizer (x - x0), or t = 1/x at infinity.
/// d = 0 with c = f(x) at non-branch points; c is always nonzero.
struct LocalData {
    int64_t d;
    Fe c;
};

LocalData local_data(const Field& k, const RatFun& f, P1Point at);

/// gcd(n, gcd over all records of |d|). The cover y^n = f is
/// geometrically irreducible iff this is 1.
uint64_t power_class_gcd(const DivisorProfile& profile, uint64_t n);

}  // namespace forge
