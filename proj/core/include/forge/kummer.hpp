#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "forge/divisors.hpp"

namespace forge {

/// Cyclic cover y^n = f(x) of P^1 over F_q with n | q-1 (so all n-th
/// roots of unity are rational and the cover is tame). The divisor
/// profile of f is cached at construction.
struct KummerCurve {
    uint64_t n = 0;
    RatFun f;
    DivisorProfile profile;
};

/// Validates n >= 2, n | q-1, f nonconstant and geometric irreducibility
/// (power_class_gcd = 1). Throws DegreeNotDividing / ConstantFunction /
/// ReducibleCover.
KummerCurve make_curve(const Field& k, uint64_t n, RatFun f);

/// Genus of the nonsingular complete model by the tame Hurwitz-Zeuthen
/// formula: 2g - 2 = -2n + sum over profile records of
/// count * (n - gcd(n, |d|)). Throws InternalParityError if 2g-2 comes
/// out odd (profile bug).
uint64_t genus(const Field& k, const KummerCurve& curve);

/// Rational points of the fiber above one point of P^1(F_q).
/// With (d, c) the local data and m = gcd(n, d) (gcd(n, 0) = n), the
/// fiber holds m rational points iff c is an m-th power in F_q^*.
struct Fiber {
    uint64_t points;
    uint64_t ramification_gcd;  // m = gcd(n, d)
};

Fiber fiber(const Field& k, const KummerCurve& curve, P1Point at);

/// Exact number of degree-one places: the fiber count summed over all
/// q+1 rational points of the base line.
uint64_t count_points(const Field& k, const KummerCurve& curve);

/// floor integer square root.
uint64_t isqrt64(uint64_t n);

/// q + 1 + floor(2 g sqrt(q)), exact integer arithmetic.
uint64_t hasse_weil_bound(const Field& k, uint64_t g);

/// Closed-form (genus, points) expected for a curve; when supplied to
/// make_report a disagreement with the engine is a hard error.
struct Prediction {
    uint64_t genus;
    uint64_t points;
    friend bool operator==(const Prediction&, const Prediction&) = default;
};

struct CurveReport {
    uint64_t genus = 0;
    uint64_t points = 0;
    uint64_t hasse_weil = 0;
    bool ratio_defined = false;   // false when genus = 0
    uint64_t ratio_num = 0;       // points/genus as a reduced fraction
    uint64_t ratio_den = 0;
    std::string family;           // optional tag, empty when absent
    std::optional<Prediction> predicted;
};

/// Assembles genus, point count, Hasse-Weil bound and the exact ratio.
/// Throws PredictionMismatch when a supplied closed-form prediction
/// disagrees with the engine, and WeilBoundViolation if the count ever
/// exceeds the bound (an engine bug by definition).
CurveReport make_report(const Field& k, const KummerCurve& curve,
                        std::optional<Prediction> predicted = {},
                        std::string family = {});

}  // namespace forge
