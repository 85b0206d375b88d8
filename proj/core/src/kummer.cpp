#include "forge/kummer.hpp"

#include <cmath>
#include <numeric>

namespace forge {

KummerCurve make_curve(const Field& k, uint64_t n, RatFun f) {
    if (n < 2 || (k.q() - 1) % n != 0)
        raise("DegreeNotDividing", "cover degree " + std::to_string(n) + " must divide q-1 = " +
                                       std::to_string(k.q() - 1));
    if (is_constant(f)) raise("ConstantFunction", "f must be nonconstant");
    KummerCurve curve;
    curve.n = n;
    curve.f = std::move(f);
    curve.profile = divisor_profile(k, curve.f);
    uint64_t g = power_class_gcd(curve.profile, n);
    if (g != 1)
        raise("ReducibleCover", "f is a perfect " + std::to_string(g) +
                                    "-th power over the closure; the cover is reducible");
    return curve;
}

uint64_t genus(const Field&, const KummerCurve& curve) {
    int64_t n = (int64_t)curve.n;
    int64_t acc = -2 * n;  // 2g - 2
    for (const auto& pl : curve.profile.places) {
        int64_t ad = pl.d < 0 ? -pl.d : pl.d;
        acc += (int64_t)pl.count * (n - (int64_t)std::gcd((uint64_t)n, (uint64_t)ad));
    }
    if (acc % 2 != 0)
        raise("InternalParityError", "2g-2 computed odd; divisor profile is inconsistent");
    int64_t g2 = acc + 2;
    if (g2 < 0)
        raise("InternalInconsistency", "negative genus computed");
    return (uint64_t)(g2 / 2);
}

namespace {

uint64_t fiber_points(const Field& k, uint64_t n, int64_t d, Fe c) {
    uint64_t ad = (uint64_t)(d < 0 ? -d : d);
    uint64_t m = std::gcd(n, ad);  // gcd(n, 0) = n folds in the unramified case
    return k.is_dth_power(c, m) ? m : 0;
}

}  // namespace

Fiber fiber(const Field& k, const KummerCurve& curve, P1Point at) {
    LocalData ld = local_data(k, curve.f, at);
    uint64_t ad = (uint64_t)(ld.d < 0 ? -ld.d : ld.d);
    uint64_t m = std::gcd(curve.n, ad);
    return {fiber_points(k, curve.n, ld.d, ld.c), m};
}

uint64_t count_points(const Field& k, const KummerCurve& curve) {
    uint64_t total = 0;
    // Rational branch points are already in the profile with their local data.
    std::vector<bool> is_branch(k.q(), false);
    bool inf_branch = false;
    for (const auto& pl : curve.profile.places) {
        switch (pl.loc) {
            case Place::Loc::finite:
                is_branch[pl.x.v] = true;
                total += fiber_points(k, curve.n, pl.d, *pl.c);
                break;
            case Place::Loc::infinity:
                inf_branch = true;
                total += fiber_points(k, curve.n, pl.d, *pl.c);
                break;
            case Place::Loc::closure_class:
                break;  // not rational base points
        }
    }
    // Everywhere else d = 0 and c = f(x) != 0.
    uint64_t e = (k.q() - 1) / std::gcd(curve.n, k.q() - 1);
    for (uint64_t v = 0; v < k.q(); ++v) {
        if (is_branch[v]) continue;
        Fe x{(uint32_t)v};
        Fe val = k.mul(evaluate(k, curve.f.num, x), k.inv(evaluate(k, curve.f.den, x)));
        if (k.pow(val, e) == k.one()) total += curve.n;
    }
    if (!inf_branch) {
        // deg num = deg den here, so f(infinity) is the leading ratio.
        Fe val = k.mul(curve.f.num.lead(), k.inv(curve.f.den.lead()));
        if (k.pow(val, e) == k.one()) total += curve.n;
    }
    return total;
}

uint64_t isqrt64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = (uint64_t)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

uint64_t hasse_weil_bound(const Field& k, uint64_t g) {
    // floor(2 g sqrt(q)) = isqrt(4 g^2 q); exact when q is a square.
    return k.q() + 1 + isqrt64(4 * g * g * k.q());
}

CurveReport make_report(const Field& k, const KummerCurve& curve,
                        std::optional<Prediction> predicted, std::string family) {
    CurveReport rep;
    rep.genus = genus(k, curve);
    rep.points = count_points(k, curve);
    rep.hasse_weil = hasse_weil_bound(k, rep.genus);
    if (rep.points > rep.hasse_weil)
        raise("WeilBoundViolation", "point count " + std::to_string(rep.points) +
                                        " exceeds the Hasse-Weil bound " +
                                        std::to_string(rep.hasse_weil));
    if (rep.genus > 0) {
        uint64_t g = std::gcd(rep.points, rep.genus);
        rep.ratio_defined = true;
        rep.ratio_num = g ? rep.points / g : rep.points;
        rep.ratio_den = g ? rep.genus / g : rep.genus;
    }
    rep.family = std::move(family);
    rep.predicted = predicted;
    if (predicted && !(Prediction{rep.genus, rep.points} == *predicted))
        raise("PredictionMismatch",
              "closed form predicts (g=" + std::to_string(predicted->genus) +
                  ", N=" + std::to_string(predicted->points) + ") but the engine computed (g=" +
                  std::to_string(rep.genus) + ", N=" + std::to_string(rep.points) + ")");
    return rep;
}

}  // namespace forge
